"""Property-based checks of the algebraic invariants."""
import math

from hypothesis import given, settings, strategies as st

from cyquot import ellkummer as ek
from cyquot import repthy as rt
from cyquot.exactalg import GF, ExactMatrix, PolyRing, resultant, upoly
from cyquot.exactalg.elim import mgcd

PRIMES = [5, 13, 101]


def coeff_lists(p, min_deg=1, max_deg=6):
    return st.lists(st.integers(0, p - 1), min_size=min_deg + 1, max_size=max_deg + 1) \
        .filter(lambda c: c[-1] != 0)


@st.composite
def field_and_poly(draw, max_deg=6):
    p = draw(st.sampled_from(PRIMES))
    F = GF(p)
    return F, [F.coerce(c) for c in draw(coeff_lists(p, 1, max_deg))]


@settings(max_examples=200, deadline=None)
@given(field_and_poly())
def test_factorization_recomposes(data):
    F, f = data
    lc, facs = upoly.factor_finite(F, f)
    prod = [lc]
    for g, m in facs:
        assert upoly.is_irreducible_finite(F, g)
        for _ in range(m):
            prod = upoly.mul(F, prod, g)
    assert upoly.trim(F, prod) == upoly.trim(F, f)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(PRIMES), st.data())
def test_resultant_vanishes_iff_common_factor(p, data):
    F = GF(p)
    f = [F.coerce(c) for c in data.draw(coeff_lists(p, 1, 4))]
    g = [F.coerce(c) for c in data.draw(coeff_lists(p, 1, 4))]
    r = upoly.resultant(F, f, g)
    common = upoly.deg(upoly.gcd(F, f, g)) > 0
    assert F.is_zero(r) == common


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(PRIMES), st.data())
def test_multivariate_resultant_and_gcd(p, data):
    F = GF(p)
    x, y = PolyRing(F, 2).gens()
    small = st.integers(0, p - 1)
    a = x + y * data.draw(small) + data.draw(small)
    b = x * x + y * data.draw(small) + data.draw(small)
    c = x + data.draw(small)
    # a shared factor kills the resultant; a generic pair keeps it
    assert resultant(a * c, b * c, 0).is_zero()
    assert mgcd(a * c, b * c).degree(0) >= 1


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(PRIMES), st.integers(1, 8), st.integers(1, 8), st.data())
def test_rank_nullity(p, r, c, data):
    F = GF(p)
    rows = [[data.draw(st.integers(0, p - 1)) for _ in range(c)] for _ in range(r)]
    M = ExactMatrix.from_values(F, rows)
    ns = M.nullspace()
    assert M.rank() + len(ns) == c
    for v in ns:
        assert all(F.is_zero(x) for x in M.apply(v))


@settings(max_examples=50, deadline=None)
@given(st.sampled_from(PRIMES), st.integers(1, 4), st.data())
def test_determinant_is_multiplicative(p, n, data):
    F = GF(p)
    draw = lambda: [[data.draw(st.integers(0, p - 1)) for _ in range(n)] for _ in range(n)]
    A, B = ExactMatrix.from_values(F, draw()), ExactMatrix.from_values(F, draw())
    assert (A * B).det() == F.mul(A.det(), B.det())


@settings(max_examples=50, deadline=None)
@given(st.sampled_from(PRIMES), st.data())
def test_derivative_leibniz(p, data):
    F = GF(p)
    f = [F.coerce(c) for c in data.draw(coeff_lists(p, 0, 5))]
    g = [F.coerce(c) for c in data.draw(coeff_lists(p, 0, 5))]
    lhs = upoly.derivative(F, upoly.mul(F, f, g))
    rhs = upoly.add(F, upoly.mul(F, upoly.derivative(F, f), g), upoly.mul(F, f, upoly.derivative(F, g)))
    assert upoly.trim(F, lhs) == upoly.trim(F, rhs)


@settings(max_examples=50, deadline=None)
@given(st.sampled_from(PRIMES), st.data())
def test_mpoly_evaluation_is_a_ring_map(p, data):
    F = GF(p)
    x, y, z = PolyRing(F, 3).gens()
    small = st.integers(0, p - 1)
    f = x ** 2 * data.draw(small) + y * z + data.draw(small)
    g = x * y + z ** 3 * data.draw(small)
    pt = tuple(F.coerce(data.draw(small)) for _ in range(3))
    assert (f * g).evaluate(pt) == F.mul(f.evaluate(pt), g.evaluate(pt))
    assert (f + g).evaluate(pt) == F.add(f.evaluate(pt), g.evaluate(pt))


A4 = rt.alternating_group(4)
A5 = rt.alternating_group(5)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(A5), st.sampled_from(A5))
def test_standard_rep_homomorphism(g, h):
    assert rt.standard_rep_matrix(g * h) == rt.standard_rep_matrix(g) * rt.standard_rep_matrix(h)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(A5), st.sampled_from(A5), st.integers(0, 4))
def test_exterior_power_homomorphism(g, h, m):
    lhs = rt.exterior_power_matrix(g * h, m)
    assert lhs == rt.exterior_power_matrix(g, m) * rt.exterior_power_matrix(h, m)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(A5))
def test_inverse_and_trace_is_class_function(g):
    e = rt.Permutation.identity(5)
    assert g * g.inverse() == e
    for h in A5[:5]:
        c = h * g * h.inverse()
        assert rt.standard_rep_matrix(c).trace() == rt.standard_rep_matrix(g).trace()


CURVES = [ek.WeierstrassCurve(GF(101), 0, 1), ek.WeierstrassCurve(GF(13), 1, 0),
          ek.WeierstrassCurve(GF(7), 0, 2)]


@settings(max_examples=500, deadline=None)
@given(st.sampled_from(range(len(CURVES))), st.data())
def test_group_law_axioms(i, data):
    E = CURVES[i]
    pts = E.points()
    P, Q, R = (data.draw(st.sampled_from(pts)) for _ in range(3))
    assert (P + Q) + R == P + (Q + R)
    assert P + Q == Q + P
    assert P + E.O == P and (P - P).is_zero
    assert (P + Q).on_curve()


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(range(len(CURVES))), st.data())
def test_point_order_divides_group_order(i, data):
    E = CURVES[i]
    P = data.draw(st.sampled_from(E.points()))
    N = E.order()
    assert (N * P).is_zero
    assert abs(N - (E.field.p + 1)) <= 2 * math.isqrt(E.field.p) + 1


A3 = rt.alternating_group(3)
SMALL = ek.WeierstrassCurve(GF(7), 0, 2)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([2, 3]), st.data())
def test_action_commutes_with_projection_and_lift(n, data):
    pts = SMALL.points()
    first = [data.draw(st.sampled_from(pts)) for _ in range(n)]
    g = data.draw(st.sampled_from(A3 if n == 2 else A4))
    y = ek.lift(first)
    moved = ek.act(g, y)
    assert ek.lift(ek.project(moved)) == moved
    assert moved.check(SMALL)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(A4), st.sampled_from(A4))
def test_fixed_locus_transported_by_conjugation(g, h):
    E = ek.WeierstrassCurve(GF(5), 0, 1)
    fixed_g = ek.fixed_locus(E, 3, g)
    conj = h * g * h.inverse()
    moved = {ek.act(h, y).coords for y in fixed_g}
    assert moved == {y.coords for y in ek.fixed_locus(E, 3, conj)}
