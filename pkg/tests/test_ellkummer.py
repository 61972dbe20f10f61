import itertools
import math

import pytest

from cyquot import ellkummer as ek
from cyquot import repthy as rt
from cyquot.exactalg import GF


def brute_count(p, a, b):
    # affine solutions plus the point at infinity
    return 1 + sum(1 for x in range(p) for y in range(p) if (y * y - x ** 3 - a * x - b) % p == 0)


@pytest.mark.parametrize("p,a,b", [(5, 0, 1), (7, 0, 2), (7, 0, 1), (13, 1, 0), (101, 0, 1)])
def test_point_count_matches_brute_force(p, a, b):
    E = ek.WeierstrassCurve(GF(p), a, b)
    assert E.order() == brute_count(p, a, b)
    assert E.hasse_ok()


def test_known_orders():
    assert ek.WeierstrassCurve(GF(5), 0, 1).order() == 6
    assert ek.WeierstrassCurve(GF(7), 0, 2).order() == 9


def test_doubling_on_f5():
    # (0, 1) is a flex of y^2 = x^3 + 1, so it has order 3 and 2P = -P
    E = ek.WeierstrassCurve(GF(5), 0, 1)
    P = E.point(0, 1)
    assert 2 * P == E.point(0, -1)
    assert (3 * P).is_zero


def test_singular_curve_rejected():
    with pytest.raises(ek.CurveError):
        ek.WeierstrassCurve(GF(7), 0, 0)


def test_group_axioms_small():
    E = ek.WeierstrassCurve(GF(7), 0, 2)
    pts = E.points()
    for P, Q in itertools.product(pts, repeat=2):
        assert P + Q == Q + P
        assert (P + Q).on_curve()
        assert P - P == E.O


@pytest.mark.parametrize("m", [2, 3, 4])
def test_torsion_has_m_squared_points(m):
    E = ek.over_torsion_field(ek.WeierstrassCurve(GF(13), 0, 1), m)
    K, pts = ek.torsion_points(E, m)
    assert len(pts) == m * m
    assert all((m * P).is_zero for P in pts)


def test_three_torsion_roots_of_psi3():
    E = ek.WeierstrassCurve(GF(101), 0, 1)
    psi3 = E.division_xpoly(3)
    K = E.field
    # psi_3 = 3x^4 + 6ax^2 + 12bx - a^2; with a = 0, b = 1 its roots are x = 0 and x^3 = -4
    assert psi3 == [K.coerce(c) for c in (0, 12, 0, 0, 3)]


def test_lift_and_act():
    E = ek.WeierstrassCurve(GF(7), 0, 2)
    pts = E.points()
    P, Q = pts[1], pts[4]
    y = ek.lift([P, Q])
    assert y.check(E)
    assert ek.project(y) == (P, Q)
    g = rt.Permutation.from_cycles(3, [(1, 2, 3)])
    z = ek.act(g, y)
    assert z.check(E)
    assert sorted(map(repr, z.coords)) == sorted(map(repr, y.coords))
    with pytest.raises(ValueError):
        ek.act(rt.Permutation.from_cycles(3, [(1, 2)]), y)


def test_fixed_locus_n2():
    E = ek.over_torsion_field(ek.WeierstrassCurve(GF(13), 0, 1), 3)
    r = ek.fixed_set_formula_n2(E)
    assert r["count"] == 9 and r["ok"]


def test_double_transposition_components():
    E = ek.over_torsion_field(ek.WeierstrassCurve(GF(13), 0, 1), 2)
    r = ek.double_transposition_components(E)
    assert r["components"] == 4 and r["values_are_two_torsion"]


@pytest.mark.parametrize("n,p", [(2, 5), (2, 7), (2, 13), (3, 5), (3, 7)])
def test_census_sums(n, p):
    E = ek.WeierstrassCurve(GF(p), 0, 1)
    c = ek.stabilizer_census(E, n)
    N = E.order()
    assert c.total == N ** n
    assert sum(cnt for cnt, _ in c.entries.values()) == N ** n
    assert c.nontrivial() <= 16 * N


@pytest.mark.parametrize("n,p", [(2, 5), (2, 7), (3, 5), (2, 13)])
def test_burnside_equals_direct(n, p):
    E = ek.WeierstrassCurve(GF(p), 0, 1)
    assert ek.burnside_orbit_count(E, n) == ek.direct_orbit_count(E, n)


def test_burnside_integrality():
    E = ek.WeierstrassCurve(GF(7), 0, 1)
    G = rt.alternating_group(3)
    IG = ek.IndexedGroup(E)
    total = sum(ek.fixed_count(IG, 2, g) for g in G)
    assert total % len(G) == 0
    assert total // len(G) == ek.direct_orbit_count(E, 2)


def test_conjugate_elements_fix_equally_many():
    E = ek.WeierstrassCurve(GF(5), 0, 1)
    IG = ek.IndexedGroup(E)
    G = rt.alternating_group(4)
    g = rt.Permutation.from_cycles(4, [(1, 2, 3)])
    counts = {ek.fixed_count(IG, 3, h * g * h.inverse()) for h in G}
    assert len(counts) == 1


CENSUS = ek.load_census_curves()


def test_census_file_lists_both_curves():
    names = {name for name, _, _ in CENSUS}
    assert names == {"y^2 = x^3 + 1", "y^2 = x^3 + x"}
    assert {E.field.p for _, E, _ in CENSUS} == {5, 7, 13, 101, 10007}


@pytest.mark.parametrize("name,E,ns", [c for c in CENSUS if c[1].field.p <= 13],
                         ids=lambda v: str(v) if not isinstance(v, list) else None)
def test_pinned_census_burnside(name, E, ns):
    for n in ns:
        c = ek.stabilizer_census(E, n)
        assert c.total == E.order() ** n
        assert ek.burnside_orbit_count(E, n) == ek.direct_orbit_count(E, n)


@pytest.mark.parametrize("name,E,ns", [c for c in CENSUS if c[1].field.p in (13, 101)],
                         ids=lambda v: str(v) if not isinstance(v, list) else None)
def test_pinned_torsion(name, E, ns):
    for m in (2, 3):
        K, pts = ek.torsion_points(E, m, allow_extension=True)
        assert len(pts) == m * m
