"""The verify-all suite: one function per check, run in manifest order."""
import json
import math
import random
import time
from pathlib import Path

from . import dualgeom as dg
from . import ellkummer as ek
from . import repthy as rt
from . import resolver as rs
from .exactalg.fields import GF, QQ
from .report import CheckRecord, ERROR, EXPECTED_FAIL, FAIL, PASS

MANIFEST = Path(__file__).parent / "data" / "verify_all_manifest.json"


def load_manifest(path=None):
    with open(path or MANIFEST) as fh:
        return json.load(fh)


def _status(ok):
    return PASS if ok else FAIL


# -- representation theory ---------------------------------------------------

def check_invariant_table(seed):
    got = {n: rt.prop_b_table(n) for n in range(2, 7)}
    want = {n: [1] + [0] * (n - 1) + [1] for n in range(2, 7)}
    return _status(got == want), got, want, ""


def check_bad_characteristic(seed):
    bad = rt.fixed_subspace_modp(2, 1, 3)
    good = {}
    for n in (2, 3, 4):
        order = math.factorial(n + 1) // 2
        for p in (5, 7, 11, 13):
            if order % p == 0:
                continue
            for m in range(1, n):
                good["n=%d,m=%d,p=%d" % (n, m, p)] = rt.fixed_subspace_modp(n, m, p)
    ok = bad == 1 and all(v == 0 for v in good.values())
    return _status(ok), {"n=2,m=1,p=3": bad, "good_primes": good}, \
        {"n=2,m=1,p=3": 1, "good_primes": "all 0"}, ""


def check_modulus_probe(seed):
    pred = rt.prop_b_predicates(2, 3)
    dim = rt.fixed_subspace_modp(2, 1, 3)
    computed = {"n": 2, "p": 3, "fixed_dim": dim, **pred}
    # the n!/2 reading admits p = 3 for n = 2, yet the invariants do not vanish
    discrepancy = pred["n_fact_half_hypothesis_holds"] and dim != 0
    status = EXPECTED_FAIL if discrepancy else FAIL
    note = ("p does not divide n!/2 but the invariant line survives; the (n+1)!/2 "
            "reading excludes p = 3" if discrepancy else "probe did not reproduce the discrepancy")
    return status, computed, {"fixed_dim_if_n_fact_half_sufficed": 0}, note


def check_lemma(seed):
    got = {}
    ok = True
    for n in range(3, 7):
        r = rt.certify_lemma(n)
        got[n] = {"inner_product": r.inner_product, "double_cosets": r.double_cosets,
                  "duality_ok": r.duality_ok}
        ok &= r.passed
    return _status(ok), got, {"inner_product": 1, "double_cosets": 2, "duality_ok": True}, ""


def check_decomposition(seed):
    got = {}
    ok = True
    for n in range(3, 7):
        r = rt.decomposition_check(n)
        got[n] = {"stable": r.stable, "line_fixed": r.line_fixed, "spans": r.spans}
        ok &= r.passed
    return _status(ok), got, {"stable": True, "line_fixed": True, "spans": True}, ""


# -- elliptic curve tuples -----------------------------------------------------

def check_fixed_locus_n2(seed):
    E = ek.over_torsion_field(ek.WeierstrassCurve(GF(13), 0, 1), 3)
    r = ek.fixed_set_formula_n2(E)
    computed = {"field": repr(E.field), "fixed_points": r["count"], "all_diagonal_3_torsion": r["ok"]}
    return _status(r["count"] == 9 and r["ok"]), computed, \
        {"fixed_points": 9, "all_diagonal_3_torsion": True}, ""


def check_burnside(seed):
    got = {}
    ok = True
    for n, p in ((2, 5), (2, 7), (3, 5)):
        E = ek.WeierstrassCurve(GF(p), 0, 1)
        b, d = ek.burnside_orbit_count(E, n), ek.direct_orbit_count(E, n)
        got["n=%d,p=%d" % (n, p)] = {"burnside": b, "direct": d}
        ok &= b == d
    return _status(ok), got, "burnside == direct", ""


# -- dual varieties ------------------------------------------------------------

def _dual_sextic(K, seed):
    C = dg.embed_cubic(ek.WeierstrassCurve(K, 0, 1))
    flexes = dg.inflection_points(C, seed)
    DA, DB = dg.dual_curve(C, "A"), dg.dual_curve(C, "B")
    cl = dg.classify_dual_singularities(DA, seed)
    match = dg.match_cusps_to_flexes(C, flexes, cl["orbits"], seed)
    computed = {"degree": DA.degree, "orders_agree": dg.same_up_to_scalar(DA.equation, DB.equation),
                "singular_points": cl["total"], "counts": cl["counts"],
                "inflections": dg.count_points(flexes), "cusp_flex_matched": match["matched"],
                "psi3_consistent": dg.division_polynomial_check(C, flexes)}
    want = {"degree": 6, "orders_agree": True, "singular_points": 9,
            "counts": {"cusps": 9, "nodes": 0, "other": 0}, "inflections": 9,
            "cusp_flex_matched": True, "psi3_consistent": True}
    return _status(computed == want), computed, want, ""


def check_dual_sextic_fp(seed):
    return _dual_sextic(GF(101), seed)


def check_dual_sextic_q(seed):
    return _dual_sextic(QQ, seed)


def check_tangents_n2(seed):
    K = GF(101)
    C = dg.embed_cubic(ek.WeierstrassCurve(K, 0, 1))
    rng = random.Random(seed)
    counts = []
    for i in range(20):
        while True:
            q = (K.coerce(rng.randint(0, 100)), K.coerce(rng.randint(0, 100)), K.one)
            if not K.is_zero(C.F.evaluate(q)):
                break
        r = dg.tangents_from_point(C, q, seed=seed + i)
        counts.append(r["count"])
    return _status(all(c == 6 for c in counts)), counts, [6] * 20, ""


def check_dual_surface_n3(seed):
    K = GF(101)
    Q = dg.embed_quadric_pencil(ek.WeierstrassCurve(K, 0, 1))
    rng = random.Random(seed)
    runs = [dg.dual_surface_degree(Q, rng) for _ in range(20)]
    degrees = [r["degree"] for r in runs]
    sqf = all(r["squarefree"] for r in runs)
    computed = {"degrees": degrees, "squarefree": sqf, "retries": [r["retries"] for r in runs],
                "curve_smooth": dg.is_smooth_pencil(Q, seed)}
    ok = all(d == 8 for d in degrees) and sqf and computed["curve_smooth"]
    return _status(ok), computed, {"degrees": [8] * 20, "squarefree": True, "curve_smooth": True}, \
        "resampled lines: %d" % sum(computed["retries"])


def check_coincidences(seed):
    E = ek.over_torsion_field(ek.WeierstrassCurve(GF(13), 0, 1), 4)
    r = dg.special_divisor_curves(E, random.Random(seed))
    computed = {"field": repr(E.field), "curves": r["curves"], "disjoint": r["disjoint"],
                "involution_ok": r["involution_ok"], "coincidences": r["coincidences"],
                "points_of_exact_order_4": r["points_of_exact_order_4"]}
    ok = r["coincidences"] == 16 and r["curves"] == 4 and r["disjoint"] and r["involution_ok"]
    return _status(ok), computed, {"curves": 4, "disjoint": True, "involution_ok": True,
                                   "coincidences": 16}, ""


# -- resolutions and ledger ----------------------------------------------------

def check_resolver_n2(seed):
    got = {}
    ok = True
    for K in (QQ, GF(101), GF(10007)):
        r = rs.verify_n2_local_resolution(K, seed=seed)
        got[str(K)] = {"smooth": r["smooth"], "components": r["exceptional"]["components"],
                       "reduced": r["exceptional"]["reduced"], "discrepancy": r["discrepancy"],
                       "self_intersection_adjunction": r["self_intersection_adjunction"]}
        ok &= r["ok"]
    return _status(ok), got, {"smooth": True, "components": 2, "reduced": True, "discrepancy": 0,
                              "self_intersection_adjunction": -2}, ""


def check_resolver_n2_control(seed):
    K = QQ
    x, y, z = rs.PolyRing(K, 3).gens()
    r = rs.verify_n2_local_resolution(K, z ** 2 - y ** 2 + x ** 4, seed=seed)
    bad = [c for c in r["charts"] if not c["smooth"]]
    computed = {"smooth": r["smooth"], "singular_charts": [c["chart"] for c in bad],
                "witness_points": bad[0].get("witness_points") if bad else None}
    return _status(not r["smooth"]), computed, {"smooth": False}, ""


def check_resolver_n3(seed):
    got = {}
    ok = True
    for K in (QQ, GF(101)):
        r = rs.verify_n3_local_models(rs.LocalModelSpec.from_text("default", field=K), seed=seed)
        got[str(K)] = {"stage_multiplicities": [r["stage1"]["multiplicity"], r["stage2"]["multiplicity"]],
                       "slices": r["slices"], "G_prime_smooth": r["checks"]["G_prime_smooth"],
                       "final_smooth": r["final_smooth"], "ok": r["ok"]}
        ok &= r["ok"]
    return _status(ok), got, {"stage_multiplicities": [2, 2], "slices": "node on C, cusp on G and G'",
                              "G_prime_smooth": True, "final_smooth": True}, ""


def check_ledger_minus(seed):
    r = rs.ledger_report("minus")
    return _status(r["trivial"]), r["K_Y"], "0", ""


def check_ledger_plus(seed):
    r = rs.ledger_report("plus")
    two_B = rs.DivisorClass.of(rs.LEDGER_BASIS, B=2)
    observed = rs.crepancy_ledger_n3("plus") == two_B
    note = "the +2B sign leaves K_Y = 2B; only -2B trivializes it" if observed else ""
    return (EXPECTED_FAIL if observed else FAIL), r["K_Y"], "0 if +2B were the right sign", note


def check_double_cover(seed):
    got = {}
    ok = True
    for n in (2, 3):
        for d in range(2, 2 * (n + 1) + 5, 2):
            K = rs.double_cover_canonical(d, n)
            got["n=%d,deg=%d" % (n, d)] = str(K)
            ok &= K.is_zero() == (d == 2 * (n + 1))
    return _status(ok), got, "zero exactly at degree 2(n+1)", ""


REGISTRY = {
    "repthy.invariant_table": check_invariant_table,
    "repthy.bad_characteristic": check_bad_characteristic,
    "repthy.modulus_probe": check_modulus_probe,
    "repthy.lemma": check_lemma,
    "repthy.decomposition": check_decomposition,
    "ellkummer.fixed_locus_n2": check_fixed_locus_n2,
    "ellkummer.burnside": check_burnside,
    "dualgeom.dual_sextic_f101": check_dual_sextic_fp,
    "dualgeom.dual_sextic_q": check_dual_sextic_q,
    "dualgeom.tangents_n2": check_tangents_n2,
    "dualgeom.dual_surface_n3": check_dual_surface_n3,
    "dualgeom.coincidences": check_coincidences,
    "resolver.n2": check_resolver_n2,
    "resolver.n2_control": check_resolver_n2_control,
    "resolver.n3": check_resolver_n3,
    "resolver.ledger_minus": check_ledger_minus,
    "resolver.ledger_plus": check_ledger_plus,
    "resolver.double_cover": check_double_cover,
}


def run_check(entry, seed):
    """Run one manifest entry; exceptions become an 'error' record."""
    fn = REGISTRY[entry["id"]]
    t0 = time.perf_counter()
    try:
        status, computed, oracle, note = fn(seed)
    except Exception as exc:  # report still gets written
        status, computed, oracle, note = ERROR, None, None, "%s: %s" % (type(exc).__name__, exc)
    return CheckRecord(entry["id"], entry["anchor"], status, computed, oracle,
                       entry.get("budget_s"), time.perf_counter() - t0, note)
