"""The twelve acceptance criteria, each at its stated tolerance and time limit.

Every test prints one PASS/FAIL line; the lines are repeated in the terminal summary.
"""
import math
import random
import subprocess
import sys
import time
from pathlib import Path

from cyquot import dualgeom as dg
from cyquot import ellkummer as ek
from cyquot import repthy as rt
from cyquot import resolver as rs
from cyquot.exactalg import GF, QQ, parse_poly

GOLDEN = Path(__file__).parent / "golden"


def _timed(fn):
    t0 = time.perf_counter()
    try:
        ok, err = fn(), None
    except Exception as exc:
        ok, err = False, exc
    return ok, err, time.perf_counter() - t0


def _judge(criterion, num, title, limit, fn):
    ok, err, dt = _timed(fn)
    passed = bool(ok) and dt < limit
    criterion(num, title, passed, dt, limit)
    if err is not None:
        raise err
    assert ok, title
    assert dt < limit, "%s took %.2fs, limit %gs" % (title, dt, limit)


def test_ac01_invariant_table(criterion):
    def run():
        return all(rt.prop_b_table(n) == [1] + [0] * (n - 1) + [1] for n in range(2, 7))
    _judge(criterion, 1, "invariant table n=2..6", 10, run)


def test_ac02_bad_characteristic(criterion):
    def run():
        if rt.fixed_subspace_modp(2, 1, 3) != 1:
            return False
        for n in (2, 3, 4):
            order = math.factorial(n + 1) // 2
            for p in (5, 7, 11, 13):
                if order % p == 0:
                    continue
                if any(rt.fixed_subspace_modp(n, m, p) != 0 for m in range(1, n)):
                    return False
        return True
    _judge(criterion, 2, "bad characteristic p=3, good primes vanish", 5, run)


def test_ac03_lemma(criterion):
    def run():
        for n in range(3, 7):
            r = rt.certify_lemma(n)
            if not (r.inner_product == 1 and r.double_cosets == 2 and r.duality_ok):
                return False
        return True
    _judge(criterion, 3, "irreducibility, double cosets, duality", 5, run)


def test_ac04_fixed_locus(criterion):
    def run():
        E = ek.over_torsion_field(ek.WeierstrassCurve(GF(13), 0, 1), 3)
        g = rt.Permutation.from_cycles(3, [(1, 2, 3)])
        pts = ek.fixed_locus(E, 2, g)
        if len(pts) != 9:
            return False
        # every fixed point is (x, x) with 3x = O
        return all(len(set(y.coords)) == 1 and (3 * y.coords[0]).is_zero for y in pts)
    _judge(criterion, 4, "n=2 fixed locus of a 3-cycle", 5, run)


def test_ac05_burnside(criterion):
    def run():
        for n, p in ((2, 5), (2, 7), (3, 5)):
            E = ek.WeierstrassCurve(GF(p), 0, 1)
            if ek.burnside_orbit_count(E, n) != ek.direct_orbit_count(E, n):
                return False
        return True
    _judge(criterion, 5, "Burnside average = direct orbit count", 60, run)


def _sextic_ok(K, golden):
    C = dg.embed_cubic(ek.WeierstrassCurve(K, 0, 1))
    D = dg.dual_curve(C, "A")
    want = parse_poly((GOLDEN / golden).read_text().strip(), K, 3)
    flexes = dg.inflection_points(C)
    cl = dg.classify_dual_singularities(D)
    match = dg.match_cusps_to_flexes(C, flexes, cl["orbits"])
    return (D.degree == 6 and dg.same_up_to_scalar(D.equation, want)
            and cl["total"] == 9 and cl["counts"] == {"cusps": 9, "nodes": 0, "other": 0}
            and dg.count_points(flexes) == 9 and match["matched"])


def test_ac06_dual_sextic(criterion):
    def run():
        return _sextic_ok(GF(101), "dual_sextic_f101.txt") and _sextic_ok(QQ, "dual_sextic_q.txt")
    _judge(criterion, 6, "dual sextic: 9 cusps, 0 nodes, 9 flexes", 60, run)


def test_ac07_tangency_counts(criterion):
    def run():
        K = GF(101)
        C = dg.embed_cubic(ek.WeierstrassCurve(K, 0, 1))
        rng = random.Random(11)
        for i in range(20):
            while True:
                q = (K.coerce(rng.randint(0, 100)), K.coerce(rng.randint(0, 100)), K.one)
                if not K.is_zero(C.F.evaluate(q)):
                    break
            if dg.tangents_from_point(C, q, seed=i)["count"] != 6:
                return False
        Q = dg.embed_quadric_pencil(ek.WeierstrassCurve(K, 0, 1))
        for _ in range(20):
            r = dg.dual_surface_degree(Q, rng)
            if r["degree"] != 8 or not r["squarefree"]:
                return False
        return True
    _judge(criterion, 7, "6 tangents (n=2), octic eliminant (n=3)", 60, run)


def test_ac08_coincidences(criterion):
    def run():
        E = ek.over_torsion_field(ek.WeierstrassCurve(GF(13), 0, 1), 4)
        r = dg.special_divisor_curves(E, random.Random(3))
        return r["coincidences"] == 16 and r["curves"] == 4 and r["disjoint"]
    _judge(criterion, 8, "16 coincidences, 4 disjoint curves", 30, run)


def test_ac09_n2_resolution(criterion):
    def run():
        r = rs.verify_n2_local_resolution(QQ)
        x, y, z = rs.PolyRing(QQ, 3).gens()
        control = rs.verify_n2_local_resolution(QQ, z ** 2 - y ** 2 + x ** 4)
        return (r["smooth"] and r["exceptional"]["components"] == 2 and r["exceptional"]["reduced"]
                and r["discrepancy"] == 0 and not control["smooth"])
    _judge(criterion, 9, "n=2 resolution smooth, crepant; control fails", 5, run)


def test_ac10_n3_models(criterion):
    def run():
        r = rs.verify_n3_local_models()
        c = r["checks"]
        return (r["final_smooth"] and c["G_prime_smooth"]
                and set(r["slices"]["C"]) == {"node"} and set(r["slices"]["G_prime"]) == {"cusp"})
    _judge(criterion, 10, "n=3 two-stage resolution, node/cusp slices", 30, run)


def test_ac11_ledger(criterion):
    def run():
        two_B = rs.DivisorClass.of(rs.LEDGER_BASIS, B=2)
        ok = rs.crepancy_ledger_n3("minus").is_zero() and rs.crepancy_ledger_n3("plus") == two_B
        for n in (2, 3):
            for d in range(2, 4 * (n + 1), 2):
                ok &= rs.double_cover_canonical(d, n).is_zero() == (d == 2 * (n + 1))
        return ok
    _judge(criterion, 11, "crepancy ledger and double-cover degree", 1, run)


def test_ac12_determinism(criterion, tmp_path):
    def run():
        outs = []
        for i in range(2):
            path = tmp_path / ("r%d.json" % i)
            proc = subprocess.run([sys.executable, "-m", "cyquot", "verify-all", "--seed", "7",
                                   "--out", str(path)], capture_output=True, text=True)
            if proc.returncode != 0:
                return False
            outs.append(path.read_bytes())
        return outs[0] == outs[1]
    # no time limit is stated; the bound below only guards against hangs
    _judge(criterion, 12, "verify-all --seed 7 byte-identical twice", 600, run)
