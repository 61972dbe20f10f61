import random

import pytest

from cyquot import resolver as rs
from cyquot.exactalg import GF, QQ, PolyRing


def gens(K=QQ, n=3):
    return PolyRing(K, n).gens()


# -- blow-ups --------------------------------------------------------------------

def test_blowup_of_point_on_a2():
    x, y, z = gens()
    f = z ** 2 - y ** 2 + x ** 3
    b = rs.blowup(3, [x, y, z], f)
    assert b.multiplicity == 2
    assert len(b.charts) == 3
    assert b.total_identity_ok and b.compatibility_ok
    # x-chart: y -> x*y, z -> x*z, then divide by x^2
    assert b.strict_transforms[0] == z ** 2 - y ** 2 + x


def test_blowup_along_a_line():
    # Whitney-type surface y^2 = z^2 x, blown up along the x-axis {y = z = 0}
    x, y, z = gens()
    f = y ** 2 - z ** 2 * x
    b = rs.blowup(3, [y, z], f)
    assert b.multiplicity == 2
    for strict, e in zip(b.strict_transforms, (y, z)):
        assert not e.divides(strict) or strict.is_constant()
    assert b.strict_transforms[1] == y ** 2 - x


def test_blowup_rejects_bad_center():
    x, y, z = gens()
    f = z ** 2 - y ** 2 + x ** 3
    with pytest.raises(rs.BlowupError):
        rs.blowup(3, [x + y], f)
    with pytest.raises(rs.BlowupError):
        rs.blowup(3, [x, y], f + 1)


def test_chart_backsubstitution():
    x, y, z = gens()
    f = z ** 2 - y ** 2 + x ** 3
    b = rs.blowup(3, [x, y, z], f)
    b2 = rs.blowup(3, [x, y, z], b.strict_transforms[0], parent=b.charts[0])
    for ch in b2.charts:
        assert ch.backsubstitution_ok(random.Random(1))
        assert len(ch.provenance) == 2


# -- Jacobian certificates -------------------------------------------------------

def test_jacobian_smooth_examples():
    x, y, z = gens()
    assert rs.jacobian_smooth_check(rs.root_chart(QQ, 3, [z ** 2 - y ** 2 + x])).smooth
    assert rs.jacobian_smooth_check(rs.root_chart(QQ, 3, [x * y - z])).smooth


def test_jacobian_finds_singular_origin():
    x, y, z = gens()
    v = rs.jacobian_smooth_check(rs.root_chart(QQ, 3, [z ** 2 - y ** 2 + x ** 3]))
    assert not v.smooth
    assert v.witness_points is not None
    assert {"point": ["0", "0", "0"], "degree": 1} in v.witness_points


# -- n = 2 -----------------------------------------------------------------------

@pytest.mark.parametrize("K", [QQ, GF(101), GF(10007)])
def test_n2_resolution(K):
    r = rs.verify_n2_local_resolution(K)
    assert r["smooth"] and r["ok"]
    assert r["multiplicity"] == 2
    assert r["exceptional"]["components"] == 2 and r["exceptional"]["reduced"]
    assert r["discrepancy"] == 0
    assert r["self_intersection_adjunction"] == -2
    assert r["total_identity"] and r["chart_compatibility"]


def test_n2_negative_control():
    x, y, z = gens()
    r = rs.verify_n2_local_resolution(QQ, z ** 2 - y ** 2 + x ** 4)
    assert not r["smooth"] and not r["ok"]


def test_exceptional_conic_of_a1():
    # x^2 + y^2 + z^2 has an irreducible exceptional conic over Q
    x, y, z = gens()
    r = rs.exceptional_conic(x ** 2 + y ** 2 + z ** 2)
    assert r["reduced"]


# -- n = 3 -----------------------------------------------------------------------

@pytest.mark.parametrize("K", [QQ, GF(101), GF(10007)])
def test_n3_default_model(K):
    r = rs.verify_n3_local_models(rs.LocalModelSpec.from_text("default", field=K))
    assert r["ok"] and r["final_smooth"]
    assert r["stage1"]["multiplicity"] == 2 and r["stage2"]["multiplicity"] == 2
    assert set(r["slices"]["C"]) == {"node"}
    assert set(r["slices"]["G"]) == {"cusp"}
    assert set(r["slices"]["G_prime"]) == {"cusp"}
    assert r["checks"]["G_prime_smooth"]


def test_n3_alternate_model():
    spec = rs.LocalModelSpec.from_text("alt", "x0*x1 + x1^2", "3*x0^2 + x0*x1 + x1^2", GF(101))
    assert spec.validate() == 3
    assert rs.verify_n3_local_models(spec)["ok"]


def test_n3_model_gap():
    spec = rs.LocalModelSpec.from_text("gap", "0", "x1^2")
    with pytest.raises(rs.ModelGap):
        rs.verify_n3_local_models(spec)
    with pytest.raises(rs.ModelGap):
        rs.LocalModelSpec.from_text("lin", "x0", "x0^2").validate()


def test_slice_types():
    x, y, z = gens()
    assert rs.slice_type(y ** 2 - z ** 2, (QQ.coerce(5), QQ.zero, QQ.zero))[0] == "node"
    assert rs.slice_type(y ** 2 - z ** 3, (QQ.coerce(5), QQ.zero, QQ.zero))[0] == "cusp"


def test_scenarios_meet_expectations():
    for name, sc in rs.load_scenarios().items():
        r = rs.run_scenario(name, sc)
        assert r["ok"], (name, r["outcome"], r["expect"])


# -- divisor class ledger --------------------------------------------------------

def test_divisor_class_arithmetic():
    B = rs.LEDGER_BASIS
    a = rs.DivisorClass.of(B, H=2, B=-1)
    b = rs.DivisorClass.of(B, A1=3)
    assert a + b - b == a
    assert (a * 2).half() == a
    assert (-a + a).is_zero()
    assert str(rs.DivisorClass.of(B, B=2)) == "2B"
    with pytest.raises(KeyError):
        rs.DivisorClass.of(B, Z=1)


def test_ledger_signs():
    assert rs.crepancy_ledger_n3("minus").is_zero()
    assert rs.crepancy_ledger_n3("plus") == rs.DivisorClass.of(rs.LEDGER_BASIS, B=2)
    rep = rs.ledger_report("minus")
    assert rep["trivial"] and rep["trivializing_signs"] == [-2]


def test_ledger_is_affine_in_the_sign():
    # K_Y(s) = K_Z + D''(s)/2 moves by B/2 per unit of s
    KZ = rs.canonical_Z()
    base = rs.double_cover_of(KZ, rs.branch_Dpp(0))
    for s in (-4, -2, 2, 4):
        got = rs.double_cover_of(KZ, rs.branch_Dpp(s))
        assert got - base == rs.DivisorClass.of(rs.LEDGER_BASIS, B=s // 2)
    with pytest.raises(ValueError):
        rs.crepancy_ledger_n3(0)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_double_cover_canonical(n):
    for d in range(2, 4 * (n + 1), 2):
        assert rs.double_cover_canonical(d, n).is_zero() == (d == 2 * (n + 1))
    with pytest.raises(ValueError):
        rs.double_cover_canonical(7, n)
