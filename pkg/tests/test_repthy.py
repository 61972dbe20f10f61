import math
from fractions import Fraction

import pytest

from cyquot import repthy as rt
from cyquot.exactalg import QQ


def test_group_orders():
    for k in range(3, 7):
        G = rt.alternating_group(k)
        assert len(G) == math.factorial(k) // 2
        assert len(set(G)) == len(G)
        assert all(g.is_even() for g in G)


def test_alternating_group_range():
    with pytest.raises(ValueError):
        rt.alternating_group(2)


def test_a4_cycle_type_census():
    census = {}
    for lam in rt.even_types(3):
        census[lam] = rt.class_size(lam)
    assert census == {(1, 1, 1, 1): 1, (2, 2): 3, (3, 1): 8}


def test_generators_generate():
    for k in range(3, 7):
        assert len(rt.generated_subgroup(rt.generators(k))) == math.factorial(k) // 2


def test_standard_rep_three_cycle_matrix():
    g = rt.Permutation.from_cycles(3, [(1, 2, 3)])
    M = rt.standard_rep_matrix(g)
    assert M == rt.ExactMatrix.from_values(QQ, [[-1, -1], [1, 0]])
    assert M.trace() == -1


def test_standard_rep_is_homomorphism_on_a4():
    G = rt.alternating_group(4)
    for g in G[:6]:
        for h in G:
            assert rt.standard_rep_matrix(g * h) == rt.standard_rep_matrix(g) * rt.standard_rep_matrix(h)


def test_double_transposition_trace():
    g = rt.Permutation.from_cycles(4, [(1, 2), (3, 4)])
    assert rt.standard_rep_matrix(g).trace() == -1


def test_odd_permutation_rejected():
    with pytest.raises(ValueError):
        rt.standard_rep_matrix(rt.Permutation.from_cycles(3, [(1, 2)]))


def test_exterior_power_character_values():
    chi = rt.character_of_standard(3)
    assert rt.exterior_power_character(chi, 2)((2, 2)) == -1
    assert rt.exterior_power_character(chi, 3)((2, 2)) == 1     # det is trivial on A_4


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_invariant_table(n):
    assert rt.prop_b_table(n) == [1] + [0] * (n - 1) + [1]


def _trace_average(n, m):
    # independent oracle: average trace of the explicit exterior power matrices
    G = rt.alternating_group(n + 1)
    total = sum(rt.exterior_power_matrix(g, m).trace() for g in G)
    return Fraction(total, len(G))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_char_formula_matches_trace_average(n):
    for m in range(n + 1):
        assert rt.invariant_dimension_char0(n, m) == _trace_average(n, m)
        assert rt.invariant_dimension_projector(n, m) == _trace_average(n, m)


def test_projector_n5():
    assert [rt.invariant_dimension_projector(5, m) for m in range(6)] == [1, 0, 0, 0, 0, 1]


def test_modular_fixed_dimensions():
    assert rt.fixed_subspace_modp(2, 1, 5) == 0
    assert rt.fixed_subspace_modp(2, 1, 3) == 1
    assert rt.fixed_subspace_modp(3, 1, 7) == 0


def test_modulus_predicates_for_p3():
    pred = rt.prop_b_predicates(2, 3)
    assert pred["n_fact_half_hypothesis_holds"] is True
    assert pred["group_order_hypothesis_holds"] is False


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_lemma(n):
    r = rt.certify_lemma(n)
    assert r.inner_product == 1 and r.irreducible
    assert r.double_cosets == 2
    assert r.duality_ok and r.passed


def test_lemma_n2_is_flagged():
    r = rt.certify_lemma(2)
    assert r.inner_product == 2 and r.double_cosets == 3
    assert r.flags


@pytest.mark.parametrize("n", [3, 4, 5])
def test_decomposition(n):
    r = rt.decomposition_check(n)
    assert r.stable and r.line_fixed and r.spans and r.passed
