import random
from pathlib import Path

import pytest

from cyquot import dualgeom as dg
from cyquot import ellkummer as ek
from cyquot.exactalg import GF, QQ, PolyRing, parse_poly

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture(scope="module")
def cubic101():
    return dg.embed_cubic(ek.WeierstrassCurve(GF(101), 0, 1))


@pytest.fixture(scope="module")
def dual101(cubic101):
    return dg.dual_curve(cubic101, "A")


# -- local classifier ------------------------------------------------------------

@pytest.mark.parametrize("text,kind", [
    ("x0 + x1^2", "smooth"),
    ("x0*x1", "node"),
    ("x0^2 - x1^2 + x0^3", "node"),
    ("x1^2 - x0^3", "cusp"),
    ("x1^2 - x0^4", "other"),
    ("x0^2*x1 + x1^3", "other"),
    ("x0 + 1", "not-on-curve"),
])
def test_classify_local(text, kind):
    assert dg.classify_local(parse_poly(text, GF(101), 2))[0] == kind


# -- dual sextic -----------------------------------------------------------------

def test_dual_sextic_matches_golden_f101(dual101):
    want = parse_poly((GOLDEN / "dual_sextic_f101.txt").read_text().strip(), GF(101), 3)
    assert dual101.degree == 6
    assert dg.same_up_to_scalar(dual101.equation, want)


def test_elimination_orders_agree(cubic101, dual101):
    assert dg.same_up_to_scalar(dual101.equation, dg.dual_curve(cubic101, "B").equation)


def test_tangent_lines_lie_on_dual(cubic101, dual101):
    # pointwise oracle: the gradient at every affine point of E is a point of the dual
    K = cubic101.field
    E = cubic101.curve
    grads = cubic101.gradient()
    checked = 0
    for P in E.points():
        if P.is_zero:
            continue
        pt = (P.raw[0], P.raw[1], K.one)
        line = tuple(g.evaluate(pt) for g in grads)
        assert K.is_zero(dual101.equation.evaluate(line))
        checked += 1
    assert checked == E.order() - 1


def test_origin_is_a_flex(cubic101):
    flexes = dg.inflection_points(cubic101)
    assert dg.count_points(flexes) == 9
    at_infinity = [o for o in flexes if o.degree == 1 and cubic101.field.is_zero(o.coords[2])]
    assert len(at_infinity) == 1
    assert dg.division_polynomial_check(cubic101, flexes)


def test_dual_singularities_are_nine_cusps(cubic101, dual101):
    cl = dg.classify_dual_singularities(dual101)
    assert cl["total"] == 9
    assert cl["counts"] == {"cusps": 9, "nodes": 0, "other": 0}
    match = dg.match_cusps_to_flexes(cubic101, dg.inflection_points(cubic101), cl["orbits"])
    assert match["matched"]


def test_cubic_is_smooth(cubic101):
    assert dg.is_smooth_cubic(cubic101)


# -- tangents from a point -------------------------------------------------------

def test_six_tangents_from_generic_points(cubic101):
    K = cubic101.field
    rng = random.Random(5)
    for i in range(5):
        while True:
            q = (K.coerce(rng.randint(0, 100)), K.coerce(rng.randint(0, 100)), K.one)
            if not K.is_zero(cubic101.F.evaluate(q)):
                break
        r = dg.tangents_from_point(cubic101, q, seed=i)
        assert r["count"] == 6 and r["squarefree"]


def test_point_on_flex_tangent_loses_a_tangent(cubic101):
    # a point on a flex tangent sees that tangent with multiplicity two
    q, _ = dg.flex_tangent_point(cubic101, random.Random(1))
    r = dg.tangents_from_point(cubic101, q)
    assert r["count"] == 6 and r["distinct"] == 5 and not r["squarefree"]


# -- the quadric pencil in P^3 ---------------------------------------------------

@pytest.fixture(scope="module")
def pencil101():
    return dg.embed_quadric_pencil(ek.WeierstrassCurve(GF(101), 0, 1))


def test_pencil_contains_curve_points(pencil101):
    E = pencil101.curve
    for P in E.points():
        pt = dg.pencil_point(pencil101, P)
        assert pencil101.field.is_zero(pencil101.Q1.evaluate(pt))
        assert pencil101.field.is_zero(pencil101.Q2.evaluate(pt))


def test_pencil_is_smooth(pencil101):
    assert dg.is_smooth_pencil(pencil101)


def test_singular_pencil_is_detected():
    K = GF(101)
    Q = dg.embed_quadric_pencil(ek.WeierstrassCurve(K, 0, 1))
    z = PolyRing(K, 4).gens()
    Q.Q1, Q.Q2 = z[1] ** 2 - z[0] * z[3], z[2] ** 2 - z[1] * z[3]
    assert not dg.is_smooth_pencil(Q)


def test_dual_surface_is_octic(pencil101):
    rng = random.Random(2)
    for _ in range(5):
        r = dg.dual_surface_degree(pencil101, rng)
        assert r["degree"] == 8 and r["squarefree"]


def test_plucker_form_agrees(pencil101):
    K = pencil101.field
    rng = random.Random(4)
    for _ in range(3):
        A = [K.coerce(rng.randint(0, 100)) for _ in range(4)]
        B = [K.coerce(rng.randint(0, 100)) for _ in range(4)]
        f = dg.incidence_polynomial(pencil101, A, B)
        g = dg.plucker_incidence_polynomial(pencil101, A, B)
        assert dg.same_up_to_scalar(f, g)


def test_sixteen_coincidences():
    E = ek.over_torsion_field(ek.WeierstrassCurve(GF(13), 0, 1), 4)
    r = dg.special_divisor_curves(E, random.Random(0))
    assert r["coincidences"] == 16
    assert r["curves"] == 4 and r["disjoint"] and r["involution_ok"]
