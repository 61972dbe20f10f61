"""Blow-ups on affine charts, Jacobian smoothness certificates and the
canonical class ledger of the crepant resolutions for n = 2 and n = 3.

Centers must be coordinate aligned: a list of distinct coordinate variables,
possibly after an explicit linear or triangular change of coordinates which
is recorded in the chart provenance.  The chart of a center generator x_e
substitutes x_j -> x_e * x_j for the other center variables.

Smoothness is always decided by elimination: the ideal plus the maximal
minors of the Jacobian is empty over the closure exactly when elimination
produces a nonzero constant.  The certificate is one-sided; a non-constant
outcome is reported as "singular" only together with verified witness points
or a witness ideal.
"""
import configparser
import random
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path

from .dualgeom import classify_local, local_expansion
from .exactalg.elim import PositiveDimensional, NotSeparated, eliminate, resultant, solve
from .exactalg.fields import QQ, GF
from .exactalg.linalg import ExactMatrix
from .exactalg.poly import MPoly, PolyRing, format_poly, parse_poly
from .exactalg import factor_univariate


class BlowupError(ValueError):
    pass


class ModelGap(ValueError):
    """The requested local model cannot realize the prescribed singular structure."""

    def __init__(self, message, attempted=None):
        super().__init__(message)
        self.attempted = attempted


# ---------------------------------------------------------------------------
# charts
# ---------------------------------------------------------------------------

@dataclass
class AffineChart:
    """An affine chart with its defining ideal and the map to the original coordinates.

    ``provenance`` is a list of steps (label, images); images express the
    coordinates of the previous chart in terms of the coordinates of the
    next one.  ``to_original`` composes them.
    """
    field: object
    nvars: int
    ideal: list
    provenance: list = field(default_factory=list)
    names: tuple = None
    label: str = ""

    def to_original(self):
        R = PolyRing(self.field, self.nvars)
        images = list(R.gens())
        for _, step in reversed(self.provenance):
            images = [img.compose(images) for img in step]
        return images

    def child(self, label, images, ideal, names=None):
        return AffineChart(self.field, self.nvars, ideal, self.provenance + [(label, images)],
                           names or self.names, label)

    def backsubstitution_ok(self, rng, trials=5, bound=50):
        """Composite map equals the step-by-step map on random points."""
        K = self.field
        total = self.to_original()
        for _ in range(trials):
            pt = [K.coerce(rng.randint(-bound, bound)) for _ in range(self.nvars)]
            cur = pt
            for _, step in reversed(self.provenance):
                cur = [img.evaluate(cur) for img in step]
            if [img.evaluate(pt) for img in total] != cur:
                return False
        return True

    def describe(self):
        return {"label": self.label, "ideal": [format_poly(p, self.names) for p in self.ideal],
                "steps": [lbl for lbl, _ in self.provenance]}


def root_chart(field, nvars, ideal, names=None, label="origin"):
    return AffineChart(field, nvars, list(ideal), [], names, label)


def coordinate_change(chart, images, label, names=None):
    """Re-coordinatize: images give the old coordinates in the new ones."""
    return chart.child(label, list(images), [p.compose(images) for p in chart.ideal], names)


@dataclass
class BlowupResult:
    center: list
    charts: list
    strict_transforms: list
    exceptional_loci: list
    multiplicity: int
    total_identity_ok: bool = True
    compatibility_ok: bool = True

    def chart(self, label):
        return next(c for c in self.charts if c.label == label)


def _aligned_vars(center):
    out = []
    for g in center:
        if len(g.terms) != 1 or g.total_degree() != 1:
            raise BlowupError("center not in aligned form: %s" % g)
        (e, c), = g.terms.items()
        out.append(e.index(1))
    if len(set(out)) != len(out):
        raise BlowupError("repeated center generator")
    return out


def vanishing_order(f, vars_):
    """Order of f along the coordinate subspace {x_i = 0, i in vars_}."""
    if f.is_zero():
        raise BlowupError("zero hypersurface")
    return f.min_degree(vars_)


def blowup(ambient_nvars, center, hypersurface, parent=None, names=None, rng=None, label=""):
    """Blow up the aligned center and split the total transform in every chart.

    Returns a :class:`BlowupResult`; each chart's ideal is the strict transform.
    """
    f = hypersurface
    K = f.field
    if f.nvars != ambient_nvars:
        raise BlowupError("hypersurface lives in %d variables, not %d" % (f.nvars, ambient_nvars))
    cvars = _aligned_vars(center)
    on_center = f
    for v in cvars:
        on_center = on_center.specialize(v, K.zero)
    if not on_center.is_zero():
        raise BlowupError("hypersurface does not vanish on the center")
    m = vanishing_order(f, cvars)
    parent = parent or root_chart(K, ambient_nvars, [f], names)
    R = PolyRing(K, ambient_nvars)
    X = R.gens()
    charts, stricts, exc = [], [], []
    identity_ok = True
    for e in cvars:
        images = [X[j] * X[e] if (j in cvars and j != e) else X[j] for j in range(ambient_nvars)]
        total = f.compose(images)
        strict = total.exact_div(X[e] ** m)
        identity_ok &= (X[e] ** m) * strict == total
        tag = "%s%s" % (label + ":" if label else "", (names or _default_names(ambient_nvars))[e])
        charts.append(parent.child(tag, images, [strict]))
        stricts.append(strict)
        exc.append([X[e]])
    res = BlowupResult(list(center), charts, stricts, exc, m, identity_ok)
    res.compatibility_ok = chart_compatibility(res, cvars, rng or random.Random(0))
    return res


def _default_names(n):
    return tuple("x%d" % i for i in range(n))


def chart_compatibility(res, cvars, rng, trials=4, bound=40):
    """Strict transforms glue on overlaps: S_j(phi(p)) = S_i(p) * t^-m, t the chart-j ratio."""
    if len(cvars) < 2:
        return True
    K = res.strict_transforms[0].field
    n = res.strict_transforms[0].nvars
    m = res.multiplicity
    for (a, i), (b, j) in combinations(enumerate(cvars), 2):
        Si, Sj = res.strict_transforms[a], res.strict_transforms[b]
        for _ in range(trials):
            pt = [K.coerce(rng.randint(-bound, bound)) for _ in range(n)]
            if K.is_zero(pt[j]):
                pt[j] = K.one
            t = pt[j]
            q = list(pt)
            q[j] = K.mul(pt[i], t)
            for k in cvars:
                if k != j:
                    q[k] = K.div(pt[k], t) if k != i else K.inv(t)
            lhs = Sj.evaluate(q)
            rhs = K.mul(Si.evaluate(pt), K.inv(K.pow(t, m)))
            if lhs != rhs:
                return False
    return True


# ---------------------------------------------------------------------------
# smoothness
# ---------------------------------------------------------------------------

@dataclass
class SmoothnessVerdict:
    smooth: bool
    witness_ideal: list = field(default_factory=list)
    witness_points: list = None
    trace: list = field(default_factory=list)

    def to_json(self, names=None):
        out = {"smooth": self.smooth}
        if not self.smooth:
            out["witness_ideal"] = [format_poly(p, names) for p in self.witness_ideal]
            if self.witness_points is not None:
                out["witness_points"] = self.witness_points
        return out


def jacobian_minors(ideal):
    r = len(ideal)
    n = ideal[0].nvars
    J = [[f.diff(v) for v in range(n)] for f in ideal]
    out = []
    for cols in combinations(range(n), r):
        out.append(_poly_det([[J[i][c] for c in cols] for i in range(r)]))
    return [p for p in out if not p.is_zero()]


def _poly_det(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = None
    for j in range(n):
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = rows[0][j] * _poly_det(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total


def jacobian_smooth_check(chart, over=None, seed=0):
    """Decide smoothness of V(chart.ideal) (hypersurface or complete intersection).

    ``over`` optionally restricts to the fiber over a subvariety (extra
    equations, e.g. pullbacks of the maximal ideal of the origin).
    """
    ideal = [p for p in chart.ideal if not p.is_zero()]
    system = ideal + jacobian_minors(ideal) + list(over or [])
    if any(p.is_constant() for p in system):
        return SmoothnessVerdict(True)
    present = sorted({v for p in system for v in p.variables()})
    res = eliminate(system, present)
    if any(p.is_constant() for p in res.polys):
        return SmoothnessVerdict(True, trace=res.trace)
    pts = None
    try:
        orbits = solve(system, seed=seed)
        K = chart.field
        pts = [{"point": [o.field.to_str(c) for c in o.point], "degree": o.degree} for o in orbits]
        if not orbits:
            return SmoothnessVerdict(True, trace=res.trace)
    except (PositiveDimensional, NotSeparated):
        pass
    return SmoothnessVerdict(False, system, pts, res.trace)


def singular_points(f, over=None, seed=0):
    """Orbits of singular points of a hypersurface (zero-dimensional case)."""
    system = [f] + [f.diff(v) for v in range(f.nvars)] + list(over or [])
    return solve([p for p in system if not p.is_zero()], seed=seed)


# ---------------------------------------------------------------------------
# divisor classes
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DivisorClass:
    basis: tuple
    coeffs: tuple

    @classmethod
    def zero(cls, basis):
        return cls(tuple(basis), (0,) * len(basis))

    @classmethod
    def of(cls, basis, **kw):
        basis = tuple(basis)
        unknown = set(kw) - set(basis)
        if unknown:
            raise KeyError("unknown classes %s" % sorted(unknown))
        return cls(basis, tuple(kw.get(b, 0) for b in basis))

    def _check(self, other):
        if self.basis != other.basis:
            raise ValueError("divisor classes over different bases")

    def __add__(self, other):
        self._check(other)
        return DivisorClass(self.basis, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return DivisorClass(self.basis, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, k):
        return DivisorClass(self.basis, tuple(k * a for a in self.coeffs))

    __rmul__ = __mul__

    def half(self):
        if any(a % 2 for a in self.coeffs):
            raise ValueError("class %s is not divisible by 2" % self)
        return DivisorClass(self.basis, tuple(a // 2 for a in self.coeffs))

    def is_zero(self):
        return not any(self.coeffs)

    def __getitem__(self, label):
        return self.coeffs[self.basis.index(label)]

    def __str__(self):
        parts = []
        for b, a in zip(self.basis, self.coeffs):
            if a:
                parts.append(("%s" % b) if a == 1 else ("-%s" % b if a == -1 else "%d%s" % (a, b)))
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"

    def to_json(self):
        return {"basis": list(self.basis), "coeffs": list(self.coeffs), "class": str(self)}


LEDGER_BASIS = ("H", "A1", "A2", "A3", "A4", "B")


def sum_A(basis=LEDGER_BASIS):
    return DivisorClass(tuple(basis), tuple(1 if b.startswith("A") else 0 for b in basis))


def double_cover_of(K_base, branch):
    """Canonical class of a double cover branched along ``branch``: K + branch/2 (pulled back)."""
    return K_base + branch.half()


def canonical_Z():
    """K_Z = -4H + sum A_a + B (blow-ups of curves and of a surface in P^3)."""
    return DivisorClass.of(LEDGER_BASIS, H=-4, B=1) + sum_A()


def branch_Dpp(sign):
    """D'' = 8H - 2 sum A_a + s B."""
    return DivisorClass.of(LEDGER_BASIS, H=8, B=sign) - 2 * sum_A()


def _sign_value(sign_choice):
    if sign_choice in ("plus", "+", "+2B", 2, "+2"):
        return 2
    if sign_choice in ("minus", "-", "-2B", -2, "-2"):
        return -2
    raise ValueError("sign choice must be plus or minus, not %r" % (sign_choice,))


def crepancy_ledger_n3(sign_choice):
    """Class of K_Y = g*(K_Z + D''/2) for the chosen sign of B in D''."""
    return double_cover_of(canonical_Z(), branch_Dpp(_sign_value(sign_choice)))


def ledger_report(sign_choice):
    s = _sign_value(sign_choice)
    KY = crepancy_ledger_n3(sign_choice)
    trivial_sign = [t for t in (2, -2) if double_cover_of(canonical_Z(), branch_Dpp(t)).is_zero()]
    return {"sign": s, "basis": list(LEDGER_BASIS), "K_Z": canonical_Z().to_json(),
            "D_pp": branch_Dpp(s).to_json(), "K_Y": KY.to_json(), "trivial": KY.is_zero(),
            "trivializing_signs": trivial_sign}


def double_cover_canonical(branch_degree, n):
    """K of the double cover of P^n branched along a hypersurface of the given degree."""
    if branch_degree % 2:
        raise ValueError("branch degree must be even, got %d" % branch_degree)
    K = DivisorClass.of(("H",), H=-(n + 1))
    return double_cover_of(K, DivisorClass.of(("H",), H=branch_degree))


# ---------------------------------------------------------------------------
# n = 2: the A2 point z^2 - y^2 + x^3
# ---------------------------------------------------------------------------

def tangent_cone(f, vars_=None):
    vars_ = list(range(f.nvars)) if vars_ is None else vars_
    m = f.min_degree(vars_)
    return MPoly(f.field, f.nvars, {e: c for e, c in f.terms.items()
                                    if sum(e[v] for v in vars_) == m}), m


def exceptional_conic(f):
    """Exceptional curve of the point blow-up of a surface with a double point.

    It is the projectivized tangent cone, a plane conic; over the closure it is
    two distinct lines iff its symmetric matrix has rank 2, a smooth conic iff
    rank 3, and a double line iff rank 1.
    """
    K = f.field
    q, m = tangent_cone(f)
    if m != 2:
        return {"degree": m, "rank": None, "components": None, "reduced": None}
    n = f.nvars
    two = K.from_int(2)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            e = [0] * n
            e[i] += 1
            e[j] += 1
            c = q.coefficient(tuple(e))
            row.append(K.mul(two, c) if i == j else c)
        rows.append(row)
    rank = ExactMatrix(K, rows).rank()
    comps = {3: 1, 2: 2, 1: 1}[rank]
    return {"degree": 2, "equation": format_poly(q, ("x", "y", "z")[:n] if n <= 3 else None),
            "rank": rank, "components": comps, "reduced": rank >= 2,
            "lines": rank == 2}


def _conic_lines(f):
    """Split the rank-2 tangent cone z^2 - y^2 type into its two lines when rational."""
    q, _ = tangent_cone(f)
    K = f.field
    # restrict to the line x = 0 in P^2 and factor the binary form in (y : z) at z = 1
    g = q.specialize(0, K.zero).specialize(2, K.one)
    if g.is_zero() or g.is_constant():
        return None
    lc, facs = factor_univariate(g)
    return [format_poly(p, ("x", "y", "z")) for p, _ in facs]


def default_n2_surface(K):
    x, y, z = PolyRing(K, 3).gens()
    return z ** 2 - y ** 2 + x ** 3


def verify_n2_local_resolution(K=QQ, f=None, seed=0):
    """Point blow-up of the A2 surface singularity: smooth charts, conic fiber, crepancy."""
    f = default_n2_surface(K) if f is None else f
    names = ("x", "y", "z")
    x, y, z = PolyRing(K, 3).gens()
    rng = random.Random(seed)
    res = blowup(3, [x, y, z], f, names=names, rng=rng)
    charts = []
    all_smooth = True
    for ch in res.charts:
        v = jacobian_smooth_check(ch, seed=seed)
        all_smooth &= v.smooth
        rec = {"chart": ch.label, "strict_transform": format_poly(ch.ideal[0], names),
               "backsubstitution": ch.backsubstitution_ok(rng)}
        rec.update(v.to_json(names))
        charts.append(rec)
    conic = exceptional_conic(f)
    codim = 3
    discrepancy = (codim - 1) - res.multiplicity
    # adjunction: K_S' . L = 0 and L = P^1, so L^2 = 2g - 2 - K.L = -2
    self_int = -2 if discrepancy == 0 and conic.get("lines") else None
    ok = (all_smooth and res.total_identity_ok and res.compatibility_ok and conic["components"] == 2
          and conic["reduced"] and discrepancy == 0)
    return {"field": str(K), "hypersurface": format_poly(f, names), "multiplicity": res.multiplicity,
            "charts": charts, "smooth": all_smooth, "total_identity": res.total_identity_ok,
            "chart_compatibility": res.compatibility_ok, "exceptional": conic,
            "exceptional_lines": _conic_lines(f) if conic.get("lines") else None,
            "discrepancy": discrepancy, "self_intersection_adjunction": self_int, "ok": ok}


# ---------------------------------------------------------------------------
# n = 3: the swallowtail-type model along C and G
# ---------------------------------------------------------------------------

@dataclass
class LocalModelSpec:
    """Local surface data h, h' (polynomials in x, y) and the prescribed singular curves.

    C = {y = z + h = 0} carries a transverse node, G = {x^3 + y^2 = z + h' = 0}
    a transverse cusp.
    """
    name: str
    field: object
    h: MPoly
    hprime: MPoly

    @classmethod
    def from_text(cls, name, h="0", hprime="x0^2", field=QQ):
        return cls(name, field, parse_poly(h, field, 3), parse_poly(hprime, field, 3))

    def validate(self):
        K = self.field
        for label, p in (("h", self.h), ("h'", self.hprime)):
            if p.degree(2) > 0:
                raise ModelGap("%s must not involve z" % label)
            if not p.is_zero() and p.min_degree([0, 1]) < 2:
                raise ModelGap("%s must have terms of degree >= 2 only" % label)
        if self.h == self.hprime:
            raise ModelGap("h and h' must be distinct")
        diff = self.hprime - self.h
        x = MPoly.var(K, 3, 0)
        q, r = diff.divmod(x ** 2)
        if not r.is_zero() or not q.is_constant():
            raise ModelGap("h' - h = %s is not a constant multiple of x^2; no model of the "
                           "required shape" % format_poly(diff, ("x", "y", "z")))
        return q.constant_value()


def swallowtail_aligned(K, c):
    """D in aligned coordinates (x, y, w = z + h): the discriminant in s of
    s^4 + 6x s^2 + 8y s + (12/c) w + 9x^2, normalized monic."""
    R = PolyRing(K, 4)
    x, y, w, s = R.gens()
    quart = s ** 4 + (x * s ** 2).scale(K.from_int(6)) + (y * s).scale(K.from_int(8)) \
        + w.scale(K.div(K.from_int(12), c)) + (x ** 2).scale(K.from_int(9))
    D = resultant(quart, quart.diff(3), 3).monic()
    return MPoly(K, 3, {e[:3]: v for e, v in D.terms.items()})


def naive_model(spec):
    """(z + h)(z + h') - y^2 (z + h') - (x^3 + y^2)(z + h), the naive assembly."""
    x, y, z = PolyRing(spec.field, 3).gens()
    a, b = z + spec.h, z + spec.hprime
    return a * b - y ** 2 * b - (x ** 3 + y ** 2) * a


def naive_model_probe(spec, rng):
    """Is the naive model singular at a general point of C?  (It is not: that is the gap.)"""
    K = spec.field
    D = naive_model(spec)
    x0 = K.coerce(rng.randint(2, 60))
    pt = [x0, K.zero, K.neg(spec.h.evaluate([x0, K.zero, K.zero]))]
    grad = [D.diff(i).evaluate(pt) for i in range(3)]
    return {"model": format_poly(D, ("x", "y", "z")), "point": [K.to_str(c) for c in pt],
            "gradient": [K.to_str(c) for c in grad],
            "singular_along_C": all(K.is_zero(g) for g in grad)}


def _bivariate_slice(f, var, value, keep):
    """Fix coordinate ``var`` and return f as a bivariate polynomial in ``keep``."""
    g = f.specialize(var, value)
    return MPoly(f.field, 2, {(e[keep[0]], e[keep[1]]): c for e, c in g.terms.items()})


def slice_type(f, point, var=0):
    """Classify the plane section {x_var = point[var]} of V(f) at ``point``."""
    K = f.field
    keep = [i for i in range(3) if i != var]
    g = _bivariate_slice(f, var, point[var], keep)
    kind, wit = classify_local(local_expansion(g, [point[keep[0]], point[keep[1]]], K))
    return kind, wit


def _nonzero(K, rng, lo=2, hi=60):
    return K.coerce(rng.randint(lo, hi))


def verify_n3_local_models(spec=None, seed=0, slices=3):
    """Two-stage blow-up of the local model, with every certificate recorded."""
    spec = spec or LocalModelSpec.from_text("default")
    K = spec.field
    rng = random.Random(seed)
    names = ("x", "y", "w")
    report = {"model": spec.name, "field": str(K), "h": format_poly(spec.h, ("x", "y", "z")),
              "hprime": format_poly(spec.hprime, ("x", "y", "z"))}
    report["naive_model"] = naive_model_probe(spec, rng)
    c = spec.validate()
    report["c"] = K.to_str(c)
    D = swallowtail_aligned(K, c)
    report["D_aligned"] = format_poly(D, names)
    R = PolyRing(K, 3)
    x, y, w = R.gens()
    X, Y, Z = R.gens()
    origin = root_chart(K, 3, [D.compose([X, Y, Z])], ("x", "y", "z"), "xyz")
    # w = z + h: old coordinates in terms of new ones
    aligned = coordinate_change(origin, [x, y, w - spec.h], "align C", names)
    aligned.ideal = [D]
    checks = {}

    # singular structure of D along C and G
    c2, c3 = K.mul(c, c), K.mul(c, K.mul(c, c))
    grads = [D] + [D.diff(i) for i in range(3)]
    Rt = PolyRing(K, 3)
    t = Rt.gens()[0]
    C_par = [t, Rt.zero(), Rt.zero()]
    G_par = [-(t ** 2), t ** 3, (t ** 4).scale(K.neg(c))]
    checks["singular_along_C"] = all(g.compose(C_par).is_zero() for g in grads)
    checks["singular_along_G"] = all(g.compose(G_par).is_zero() for g in grads)
    x0 = _nonzero(K, rng)
    sl = [p.specialize(0, x0) for p in grads]
    sl = [MPoly(K, 2, {(e[1], e[2]): v for e, v in p.terms.items()}) for p in sl]
    sl = [p for p in sl if not p.is_zero()]
    slice_pts = solve(sl, seed=seed)
    checks["singular_points_on_x_slice"] = sum(o.degree for o in slice_pts)

    node_kinds, cusp_kinds, cusp1_kinds = [], [], []
    for _ in range(slices):
        a = _nonzero(K, rng)
        node_kinds.append(slice_type(D, [a, K.zero, K.zero])[0])
        G_pt = [K.neg(K.mul(a, a)), K.pow(a, 3), K.neg(K.mul(c, K.pow(a, 4)))]
        cusp_kinds.append(slice_type(D, G_pt)[0])

    # stage 1: blow up C = (y, w)
    st1 = blowup(3, [y, w], D, parent=aligned, names=names, rng=rng, label="stage1")
    chart_y, chart_w = st1.charts
    S = chart_y.ideal[0]
    # G' in chart y (w = y z1): (-a^2, a^3, -c a)
    Gp_par = [-(t ** 2), t ** 3, t.scale(K.neg(c))]
    Sgrads = [S] + [S.diff(i) for i in range(3)]
    checks["stage1_G_prime_singular"] = all(g.compose(Gp_par).is_zero() for g in Sgrads)
    # singular points on the exceptional divisor y = 0 of chart y
    onE = [p.specialize(1, K.zero) for p in Sgrads]
    onE = [MPoly(K, 2, {(e[0], e[2]): v for e, v in p.terms.items()}) for p in onE]
    try:
        sing_E = solve([p for p in onE if not p.is_zero()], seed=seed)
        x2, z2 = PolyRing(K, 2).gens()
        Gp_E = [x2 + (z2 ** 2).scale(K.inv(c2)), (z2 ** 3).scale(K.inv(c3))]
        on_Gp = all(o.field.is_zero(o.evaluate(g)) for o in sing_E for g in Gp_E)
        checks["stage1_sing_on_E_chart_y"] = [[o.field.to_str(v) for v in o.point] for o in sing_E]
        checks["stage1_sing_on_E_lies_on_G_prime"] = on_Gp
    except PositiveDimensional:
        checks["stage1_sing_on_E_chart_y"] = "positive-dimensional"
        checks["stage1_sing_on_E_lies_on_G_prime"] = False
    Sw = chart_w.ideal[0]
    vw = jacobian_smooth_check(AffineChart(K, 3, [Sw]), over=[R.gens()[2]], seed=seed)
    checks["stage1_chart_w_smooth_along_E"] = vw.smooth
    # G' = V(x + z1^2/c^2, y + z1^3/c^3) is a smooth complete intersection
    Gp = [x + (w ** 2).scale(K.inv(c2)), y + (w ** 3).scale(K.inv(c3))]
    checks["G_prime_smooth"] = jacobian_smooth_check(AffineChart(K, 3, Gp)).smooth
    checks["G_prime_in_strict_transform"] = all(g.compose(Gp_par).is_zero() for g in [S])
    # the surface w + c x^2 = 0 (i.e. z + h' = 0) meets C only at the origin
    meet = solve([y, w, w + (x ** 2).scale(c)], seed=seed)
    checks["surface_meets_C_at_origin_only"] = (len(meet) == 1 and all(
        K.is_zero(v) for v in meet[0].point))
    for _ in range(slices):
        a = _nonzero(K, rng)
        cusp1_kinds.append(slice_type(S, [K.neg(K.mul(a, a)), K.pow(a, 3), K.neg(K.mul(c, a))])[0])

    # stage 2: u = x + z1^2/c^2, v = y + z1^3/c^3 in chart y, then blow up (u, v)
    u, v, w2 = R.gens()
    back = [u - (w2 ** 2).scale(K.inv(c2)), v - (w2 ** 3).scale(K.inv(c3)), w2]
    names2 = ("u", "v", "w")
    aligned2 = coordinate_change(chart_y, back, "align G'", names2)
    S_al = aligned2.ideal[0]
    st2 = blowup(3, [u, v], S_al, parent=aligned2, names=names2, rng=rng, label="stage2")
    final = []
    for ch in st2.charts:
        orig = ch.to_original()
        fiber = list(orig)  # x, y, z all vanish: fiber over the origin
        loc = jacobian_smooth_check(ch, over=fiber, seed=seed)
        glob = jacobian_smooth_check(ch, seed=seed)
        final.append({"chart": ch.label, "strict_transform": format_poly(ch.ideal[0], names2),
                      "smooth_over_origin": loc.smooth, "smooth_globally": glob.smooth,
                      "backsubstitution": ch.backsubstitution_ok(rng)})
    fiber_w = chart_w.to_original()
    vwz = jacobian_smooth_check(chart_w, over=fiber_w, seed=seed)
    final.append({"chart": chart_w.label, "strict_transform": format_poly(Sw, names),
                  "smooth_over_origin": vwz.smooth, "smooth_globally": None,
                  "backsubstitution": chart_w.backsubstitution_ok(rng)})

    report["stage1"] = {"center": ["y", "w"], "multiplicity": st1.multiplicity,
                        "total_identity": st1.total_identity_ok,
                        "chart_compatibility": st1.compatibility_ok,
                        "strict_transform_chart_y": format_poly(S, ("x", "y", "z1"))}
    report["stage2"] = {"center": ["u", "v"], "multiplicity": st2.multiplicity,
                        "total_identity": st2.total_identity_ok,
                        "chart_compatibility": st2.compatibility_ok}
    report["checks"] = checks
    report["slices"] = {"C": node_kinds, "G": cusp_kinds, "G_prime": cusp1_kinds}
    report["final_charts"] = final
    report["final_smooth"] = all(r["smooth_over_origin"] for r in final)
    report["ok"] = bool(
        checks["singular_along_C"] and checks["singular_along_G"]
        and checks["singular_points_on_x_slice"] == 3
        and st1.multiplicity == 2 and st2.multiplicity == 2
        and st1.total_identity_ok and st2.total_identity_ok
        and st1.compatibility_ok and st2.compatibility_ok
        and checks["stage1_G_prime_singular"] and checks["stage1_sing_on_E_lies_on_G_prime"]
        and checks["stage1_chart_w_smooth_along_E"] and checks["G_prime_smooth"]
        and checks["surface_meets_C_at_origin_only"]
        and all(k == "node" for k in node_kinds) and all(k == "cusp" for k in cusp_kinds)
        and all(k == "cusp" for k in cusp1_kinds) and report["final_smooth"])
    return report



# ---------------------------------------------------------------------------
# scenario files
# ---------------------------------------------------------------------------

DEFAULT_SCENARIOS = Path(__file__).parent / "data" / "resolver_scenarios.ini"


def field_for(prime):
    return QQ if not int(prime) else GF(int(prime))


def load_scenarios(path=None):
    cp = configparser.ConfigParser()
    with open(path or DEFAULT_SCENARIOS) as fh:
        cp.read_file(fh)
    return {name: dict(cp[name]) for name in cp.sections()}


def run_scenario(name, sc, seed=0):
    """Run one scenario; 'outcome' is resolved, singular or model-gap."""
    K = field_for(sc.get("prime", "0"))
    if sc["kind"] == "n2":
        f = parse_poly(sc["hypersurface"], K, 3)
        rep = verify_n2_local_resolution(K, f, seed=seed)
        outcome = "resolved" if rep["ok"] else ("singular" if not rep["smooth"] else "failed")
    elif sc["kind"] == "n3":
        spec = LocalModelSpec.from_text(name, sc.get("h", "0"), sc.get("hprime", "x0^2"), K)
        try:
            rep = verify_n3_local_models(spec, seed=seed)
            outcome = "resolved" if rep["ok"] else "failed"
        except ModelGap as exc:
            rep = {"model": name, "model_gap": str(exc)}
            outcome = "model-gap"
    else:
        raise ValueError("unknown scenario kind %r" % sc["kind"])
    expect = sc.get("expect")
    return {"scenario": name, "outcome": outcome, "expect": expect,
            "ok": expect is None or outcome == expect, "report": rep}
