"""Projective models of E, dual varieties and their singularities.

n = 2: E is the plane cubic F = Y^2 Z - X^3 - a X Z^2 - b Z^3 and its dual is a
sextic with 9 cusps, the tangent lines at the 9 flexes.

n = 3: E is the quadric pencil Q1 = z1^2 - z0 z3, Q2 = z2^2 - z1 z3 - a z0 z1 - b z0^2
in P^3 via (1 : x : y : x^2); its dual surface has degree 8, measured by the
number of tangent lines of E meeting a generic line.

Counting "over the closure" means summing orbit degrees of the squarefree
eliminant, so no splitting towers are ever built.
"""
import random
from dataclasses import dataclass, field

from .exactalg import upoly
from .exactalg.elim import (PositiveDimensional, eliminate, mgcd, mgcd_list, resultant, solve,
                            squarefree_part, count_points)
from .exactalg.fields import FieldElement, QQ
from .exactalg.linalg import ExactMatrix, characteristic_polynomial
from .exactalg.poly import MPoly, PolyRing
from .ellkummer import CurveError, CurvePoint, IndexedGroup, WeierstrassCurve, torsion_points


# ---------------------------------------------------------------------------
# helpers
# ---------------------------------------------------------------------------

def _rand(F, rng, bound=30):
    return F.coerce(rng.randint(-bound, bound))


def _det(rows):
    """Determinant of a small square matrix of MPolys by cofactor expansion."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = None
    for j in range(n):
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = rows[0][j] * _det(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total


def dehomogenize(f, var, nvars_out=None):
    """Set variable ``var`` to 1 and drop it: result lives in nvars-1 variables."""
    F = f.field
    terms = {}
    for e, c in f.terms.items():
        e2 = e[:var] + e[var + 1:]
        terms[e2] = F.add(terms.get(e2, F.zero), c)
    terms = {e: c for e, c in terms.items() if not F.is_zero(c)}
    return MPoly(F, f.nvars - 1, terms)


def normalize_projective(K, coords):
    """Scale so the first nonzero coordinate is 1 (well defined on Galois orbits)."""
    for c in coords:
        if not K.is_zero(c):
            inv = K.inv(c)
            return tuple(K.mul(inv, x) for x in coords)
    raise ValueError("zero vector is not a projective point")


@dataclass
class ProjectiveOrbit:
    field: object
    coords: tuple
    degree: int

    def to_json(self):
        K = self.field
        return {"point": [K.to_str(c) for c in self.coords], "field_ext_degree": self.degree}


def orbit_signature(orbits, weights, base):
    """prod over orbits of the norm form of sum w_i * coord_i (a base-field polynomial)."""
    out = [base.one]
    for o in orbits:
        K = o.field
        ell = K.zero
        for w, c in zip(weights, o.coords):
            ell = K.add(ell, K.mul(K.coerce(FieldElement(base, w)) if K != base else w, c))
        out = upoly.mul(base, out, characteristic_polynomial(K, ell))
    return out


# ---------------------------------------------------------------------------
# plane curve singularity classification
# ---------------------------------------------------------------------------

@dataclass
class PlanarSingularity:
    location: object
    type: str
    witness: dict = field(default_factory=dict)


def local_expansion(f, point, K):
    """f(point + (X, Y)) over K as a bivariate polynomial."""
    g = f.change_field(K)
    n = g.nvars
    shifts = [MPoly.var(K, n, i) + MPoly.const(K, n, point[i]) for i in range(n)]
    return g.compose(shifts)


def classify_local(g):
    """Classify the bivariate germ of g at the origin (K = g.field).

    smooth: nonzero linear part; node: nondegenerate quadratic part;
    cusp: rank-one quadratic part whose kernel direction meets the cubic part;
    other: anything else (including a point not on the curve).
    """
    K = g.field
    coeff = lambda i, j: g.coefficient((i, j))
    if not K.is_zero(coeff(0, 0)):
        return "not-on-curve", {}
    if not (K.is_zero(coeff(1, 0)) and K.is_zero(coeff(0, 1))):
        return "smooth", {}
    two = K.from_int(2)
    a, b, c = coeff(2, 0), coeff(1, 1), coeff(0, 2)
    Q = ExactMatrix(K, [[K.mul(two, a), b], [b, K.mul(two, c)]])
    rank = Q.rank()
    wit = {"quadratic": [K.to_str(a), K.to_str(b), K.to_str(c)], "rank": rank}
    if rank == 2:
        return "node", wit
    if rank == 0:
        return "other", wit
    alpha, beta = Q.nullspace()[0]
    cubic = K.zero
    for i in range(4):
        cubic = K.add(cubic, K.mul(coeff(i, 3 - i), K.mul(K.pow(alpha, i), K.pow(beta, 3 - i))))
    wit["kernel"] = [K.to_str(alpha), K.to_str(beta)]
    wit["cubic_on_kernel"] = K.to_str(cubic)
    return ("cusp" if not K.is_zero(cubic) else "other"), wit


def classify_point(f, point, K):
    return classify_local(local_expansion(f, point, K))


# ---------------------------------------------------------------------------
# n = 2: the plane cubic
# ---------------------------------------------------------------------------

@dataclass
class PlaneCubic:
    curve: WeierstrassCurve
    F: MPoly

    @property
    def field(self):
        return self.curve.field

    def gradient(self):
        return [self.F.diff(i) for i in range(3)]

    def affine(self):
        return dehomogenize(self.F, 2)


def embed_cubic(E):
    R = PolyRing(E.field, 3)
    X, Y, Z = R.gens()
    F = Y ** 2 * Z - X ** 3 - (X * Z ** 2).scale(E.a) - (Z ** 3).scale(E.b)
    return PlaneCubic(E, F)


def point_image(C, P):
    """(x, y) -> (x : y : 1) and O -> (0 : 1 : 0)."""
    F = C.field
    if P.raw is None:
        return (F.zero, F.one, F.zero)
    return (P.raw[0], P.raw[1], F.one)


def _projective_solve(homog, nvars, seed):
    """All common zeros in P^{nvars-1} of homogeneous polys, chart by chart.

    Chart k has x_k = 1 and x_j = 0 for j > k, so every point is found once.
    """
    out = []
    F = homog[0].field
    for k in range(nvars - 1, -1, -1):
        polys = []
        for h in homog:
            g = h
            for j in range(k + 1, nvars):
                g = g.specialize(j, F.zero)
            g = g.specialize(k, F.one)
            polys.append(g)
        if k == 0:
            pt = tuple([F.one] + [F.zero] * (nvars - 1))
            if all(F.is_zero(h.evaluate(pt)) for h in homog):
                out.append(ProjectiveOrbit(F, pt, 1))
            continue
        polys = [MPoly(F, k, {e[:k]: c for e, c in p.terms.items()}) for p in polys]
        for o in solve(polys, seed=seed):
            K = o.field
            pt = tuple(list(o.point) + [K.one] + [K.zero] * (nvars - 1 - k))
            out.append(ProjectiveOrbit(K, pt, o.degree))
    return out


def singular_locus_plane(C, seed=0):
    grads = C.gradient()
    return _projective_solve([C.F] + grads, 3, seed)


def hessian(F):
    rows = [[F.diff(i).diff(j) for j in range(F.nvars)] for i in range(F.nvars)]
    return _det(rows)


def inflection_points(C, seed=0):
    """Orbits of flexes: common zeros of F and its Hessian."""
    H = hessian(C.F)
    orbits = _projective_solve([C.F, H], 3, seed)
    return orbits


def tangent_line(C, orbit):
    K = orbit.field
    return normalize_projective(K, tuple(g.evaluate(orbit.coords, K) for g in C.gradient()))


@dataclass
class DualCurve:
    field: object
    equation: MPoly
    trace: dict

    @property
    def degree(self):
        return self.equation.total_degree()


_DUAL_ORDERS = {
    # scaling pivot (index of u, v, w) and the order for (x, y)
    "A": (1, [1, 0]),
    "B": (0, [0, 1]),
}


def dual_curve(C, order="A"):
    """Dual curve by elimination with a scaling variable t in the chart Z = 1.

    System: f(x, y) = 0 and (u, v, w) = t * grad F(x, y, 1).  The scaling
    equation for coordinate c is the first pivot; where it degenerates the
    resultants vanish identically, which adds the line {c = 0}.  Pivots whose
    leading coefficient involves only (u, v, w) add their own components.
    Both are removed (saturation), leaving the reduced dual curve.
    """
    Fd = C.field
    R = PolyRing(Fd, 6)
    x, y, t, u, v, w = R.gens()
    grads = [dehomogenize(g, 2) for g in C.gradient()]
    lift = lambda p: MPoly(Fd, 6, {e + (0,) * 4: c for e, c in p.terms.items()})
    f = lift(C.affine())
    A, B, Cz = (lift(g) for g in grads)
    scal = [u - t * A, v - t * B, w - t * Cz]
    piv_idx, xy_order = _DUAL_ORDERS[order]
    pivot = scal[piv_idx]
    res = [resultant(pivot, s, 2) for i, s in enumerate(scal) if i != piv_idx]
    elim = eliminate([f] + res, None, order=xy_order)
    g = mgcd_list([p for p in elim.polys if not p.is_zero()])
    g = squarefree_part(g)
    coords = [u, v, w]
    stripped = []
    strip = [coords[piv_idx]] + [lc for lc in elim.lead_coeffs if not lc.is_constant()
                                 and set(lc.variables()) <= {3, 4, 5}]
    for s in strip:
        while True:
            h = mgcd(g, s)
            if h.is_constant():
                break
            g = g.exact_div(h)
            stripped.append(str(_to_dual_ring(h)))
    eq = _to_dual_ring(g).monic()
    trace = {"order": order, "scaling_pivot": "uvw"[piv_idx], "xy_order": ["xy"[i] for i in xy_order],
             "steps": elim.trace, "stripped": stripped}
    return DualCurve(Fd, eq, trace)


def _to_dual_ring(p):
    return MPoly(p.field, 3, {e[3:]: c for e, c in p.terms.items()})


def same_up_to_scalar(f, g):
    if f.is_zero() or g.is_zero():
        return f.is_zero() and g.is_zero()
    return f.monic() == g.monic()


def dual_singular_points(D, seed=0, max_tries=6):
    """Singular points of the dual curve, in a random projective frame."""
    K = D.field
    rng = random.Random(seed)
    for attempt in range(max_tries):
        while True:
            M = ExactMatrix(K, [[_rand(K, rng, 9) for _ in range(3)] for _ in range(3)])
            if not K.is_zero(M.det()):
                break
        R = PolyRing(K, 3)
        g = R.gens()
        images = [sum((g[j].scale(M.rows[i][j]) for j in range(3)), R.zero()) for i in range(3)]
        Dt = D.equation.compose(images)
        homog = [Dt] + [Dt.diff(i) for i in range(3)]
        # reject frames with singular points on the line w' = 0
        at_inf = [h.specialize(2, K.zero) for h in homog]
        if _has_projective_zero_on_line(at_inf, seed):
            continue
        chart = [dehomogenize(h, 2) for h in homog]
        orbits = solve(chart, seed=seed + attempt)
        out = []
        for o in orbits:
            L = o.field
            pt_t = (o.point[0], o.point[1], L.one)
            pt = tuple(_mat_apply(M, L, pt_t))
            kind, wit = classify_point(chart[0], o.point, L)
            out.append((ProjectiveOrbit(L, normalize_projective(L, pt), o.degree), kind, wit))
        return out, {"frame": [[K.to_str(c) for c in r] for r in M.rows], "attempts": attempt + 1}
    raise ArithmeticError("no admissible projective frame found")


def _mat_apply(M, L, vec):
    K = M.field
    out = []
    for row in M.rows:
        acc = L.zero
        for c, x in zip(row, vec):
            acc = L.add(acc, L.mul(L.coerce(FieldElement(K, c)) if L != K else c, x))
        out.append(acc)
    return out


def _has_projective_zero_on_line(polys, seed):
    """Common zeros with the last coordinate 0 (polys already specialized)."""
    K = polys[0].field
    # points (s : 1 : 0) and (1 : 0 : 0)
    uni = [dehomogenize(p, 1) for p in polys]
    uni = [MPoly(K, 1, {(e[0],): c for e, c in p.terms.items()}) for p in uni]
    g = None
    for p in uni:
        u = p.to_upoly(0) if not p.is_zero() else []
        g = u if g is None else upoly.gcd(K, g, u)
    if g and len(g) > 1:
        return True
    return all(p.evaluate((K.one, K.zero, K.zero), K) == K.zero for p in polys)


def classify_dual_singularities(D, seed=0):
    sing, meta = dual_singular_points(D, seed)
    counts = {"cusps": 0, "nodes": 0, "other": 0}
    records = []
    for orb, kind, wit in sing:
        key = {"cusp": "cusps", "node": "nodes"}.get(kind, "other")
        counts[key] += orb.degree
        rec = orb.to_json()
        rec["type"] = kind
        if key == "other":
            rec["witness"] = wit
        records.append(rec)
    return {"singular_points": records, "counts": counts, "total": count_points([o for o, _, _ in sing]),
            "orbits": [o for o, _, _ in sing], "meta": meta}


def match_cusps_to_flexes(C, flexes, cusps, seed=0):
    """Compare tangent lines at flexes with cusp points through a generic linear form."""
    K = C.field
    rng = random.Random(seed)
    tangents = [ProjectiveOrbit(o.field, tangent_line(C, o), o.degree) for o in flexes]
    for _ in range(10):
        wts = [_rand(K, rng, 50) for _ in range(3)]
        s1 = orbit_signature(tangents, wts, K)
        s2 = orbit_signature(cusps, wts, K)
        if upoly.squarefree_part(K, s1) == upoly.monic(K, s1):
            return {"matched": s1 == s2, "weights": [K.to_str(c) for c in wts], "count": len(s1) - 1}
    return {"matched": False, "weights": None, "count": None}


def division_polynomial_check(C, flexes):
    """Affine flex x-coordinates are exactly the roots of psi_3."""
    K = C.field
    sig = [K.one]
    for o in flexes:
        L = o.field
        if L.is_zero(o.coords[2]):
            continue
        xo = L.div(o.coords[0], o.coords[2])
        sig = upoly.mul(K, sig, characteristic_polynomial(L, xo))
    psi3 = C.curve.division_xpoly(3)
    return upoly.squarefree_part(K, sig) == upoly.monic(K, upoly.squarefree_part(K, psi3))


def polar(C, q):
    out = None
    for c, g in zip(q, C.gradient()):
        term = g.scale(c)
        out = term if out is None else out + term
    return out


def tangents_from_point(C, q, seed=0):
    """Number of tangent lines to C through q (with multiplicity, and distinct).

    The eliminant is Res_y of F and the polar conic of q in the chart Z = 1
    after a random shear x -> x + c*y that separates x-coordinates.
    """
    K = C.field
    if K.is_zero(C.F.evaluate(q)):
        raise ValueError("q lies on the curve")
    if K.is_zero(q[2]):
        raise ValueError("q must have Z != 0 so that O is not a tangency point")
    rng = random.Random(seed)
    f = C.affine()
    pq = dehomogenize(polar(C, q), 2)
    best = None
    for attempt in range(8):
        c = K.coerce(rng.randint(1, 50))
        R = PolyRing(K, 2)
        x, y = R.gens()
        shear = [x + y.scale(c), y]
        fs, ps = f.compose(shear), pq.compose(shear)
        elim = resultant(fs, ps, 1)
        u = elim.to_upoly(0)
        deg = len(u) - 1
        distinct = len(upoly.squarefree_part(K, u)) - 1
        # Verify the shear separates: distinct x-roots equal the number of distinct solutions.
        sols = count_points(solve([fs, ps], seed=seed))
        best = {"count": deg, "distinct": distinct, "solutions": sols, "squarefree": distinct == deg,
                "shear": K.to_str(c), "attempts": attempt + 1}
        if distinct == sols:
            return best
    return best


def flex_tangent_point(C, rng):
    """A point q (Z = 1) on the tangent line at a rational flex, off the curve."""
    K = C.field
    for o in inflection_points(C):
        if o.degree == 1 and not K.is_zero(o.coords[2]):
            line = tangent_line(C, o)
            for _ in range(100):
                # solve line . (s, t, 1) = 0 for one coordinate
                s = _rand(K, rng, 50)
                if not K.is_zero(line[1]):
                    t = K.div(K.neg(K.add(K.mul(line[0], s), line[2])), line[1])
                    q = (s, t, K.one)
                else:
                    continue
                if not K.is_zero(C.F.evaluate(q)):
                    return q, o
    raise ArithmeticError("no rational flex with a usable tangent")


def is_smooth_cubic(C, seed=0):
    return not singular_locus_plane(C, seed)


# ---------------------------------------------------------------------------
# n = 3: the quadric pencil
# ---------------------------------------------------------------------------

@dataclass
class QuadricPencilCurve:
    curve: WeierstrassCurve
    Q1: MPoly
    Q2: MPoly

    @property
    def field(self):
        return self.curve.field

    def jacobian_at(self, pt):
        K = self.field
        rows = [[q.diff(i).evaluate(pt) for i in range(4)] for q in (self.Q1, self.Q2)]
        return ExactMatrix(K, rows)


def embed_quadric_pencil(E):
    R = PolyRing(E.field, 4)
    z0, z1, z2, z3 = R.gens()
    Q1 = z1 ** 2 - z0 * z3
    Q2 = z2 ** 2 - z1 * z3 - (z0 * z1).scale(E.a) - (z0 ** 2).scale(E.b)
    return QuadricPencilCurve(E, Q1, Q2)


def pencil_singular_points(Q, seed=0):
    """Points of Q1 = Q2 = 0 where the 2 x 4 Jacobian drops rank (all 2 x 2 minors vanish)."""
    J = [[q.diff(i) for i in range(4)] for q in (Q.Q1, Q.Q2)]
    minors = []
    for i in range(4):
        for j in range(i + 1, 4):
            m = J[0][i] * J[1][j] - J[0][j] * J[1][i]
            if not m.is_zero():
                minors.append(m)
    return _projective_solve([Q.Q1, Q.Q2] + minors, 4, seed)


def is_smooth_pencil(Q, seed=0):
    return not pencil_singular_points(Q, seed)


def pencil_point(Q, P):
    K = Q.field
    if P.raw is None:
        return (K.zero, K.zero, K.zero, K.one)
    x, y = P.raw
    return (K.one, x, y, K.mul(x, x))


def incidence_polynomial(Q, A, B):
    """Tangent line of E at (1 : x : y : x^2) meets the line AB (2x2 determinant)."""
    K = Q.field
    R = PolyRing(K, 2)
    x, y = R.gens()
    P = [R.one(), x, y, x * x]
    grads = []
    for q in (Q.Q1, Q.Q2):
        grads.append([q.diff(i).compose(P) for i in range(4)])

    def dot(g, pt):
        return sum((gi.scale(c) for gi, c in zip(g, pt)), R.zero())

    return _det([[dot(grads[0], A), dot(grads[0], B)], [dot(grads[1], A), dot(grads[1], B)]])


def plucker_incidence_polynomial(Q, A, B):
    """Same condition as a 4x4 determinant: both tangent planes and two planes through AB."""
    K = Q.field
    planes = ExactMatrix(K, [list(A), list(B)]).nullspace()
    R = PolyRing(K, 2)
    x, y = R.gens()
    P = [R.one(), x, y, x * x]
    rows = [[q.diff(i).compose(P) for i in range(4)] for q in (Q.Q1, Q.Q2)]
    rows += [[MPoly.const(K, 2, c) for c in h] for h in planes]
    return _det(rows)


def dual_surface_degree(Q, rng, max_retries=20):
    """Degree of the eliminant of {y^2 = f(x), incidence with a random line L}."""
    K = Q.field
    E = Q.curve
    R = PolyRing(K, 2)
    x, y = R.gens()
    weier = y ** 2 - x ** 3 - x.scale(E.a) - R(1).scale(E.b)
    for attempt in range(1, max_retries + 1):
        A = tuple(_rand(K, rng, 50) for _ in range(4))
        B = tuple(_rand(K, rng, 50) for _ in range(4))
        if ExactMatrix(K, [list(A), list(B)]).rank() < 2:
            continue
        if any(K.is_zero(Q.Q1.evaluate(p)) and K.is_zero(Q.Q2.evaluate(p)) for p in (A, B)):
            continue
        inc = incidence_polynomial(Q, A, B)
        elim = resultant(weier, inc, 1)
        u = elim.to_upoly(0)
        deg = len(u) - 1
        sqf = len(upoly.squarefree_part(K, u)) - 1 == deg
        if deg == 8 and sqf:
            return {"degree": deg, "squarefree": True, "retries": attempt - 1,
                    "line": [[K.to_str(c) for c in A], [K.to_str(c) for c in B]]}
    return {"degree": deg, "squarefree": sqf, "retries": max_retries, "line": None}


# ---------------------------------------------------------------------------
# n = 3: the special curves of the projective bundle P
# ---------------------------------------------------------------------------

def _bundle_point(p, divisor):
    """A point of P: base point p and an unordered pair [q] + [r] with 2p + q + r = O."""
    return (p, tuple(sorted(divisor)))


def special_divisor_curves(E, rng=None, samples=50):
    """Sections sigma_a (a in E[2]) and tau over a field containing E[4]."""
    rng = rng or random.Random(0)
    G = IndexedGroup(E)
    N = G.N
    two = [i for i in range(N) if G.mul(2, i) == 0]
    four = [i for i in range(N) if G.mul(4, i) == 0]
    if len(two) != 4 or len(four) != 16:
        raise CurveError("the field does not contain E[4]")

    def sub(i, j):
        return G.add(i, G.neg[j])

    def sigma(a, p):
        return _bundle_point(p, (sub(a, p), sub(a, p)))

    def tau(p):
        return _bundle_point(p, (G.neg[G.mul(3, p)], p))

    def valid(pt):
        p, (q, r) = pt
        return G.add(G.add(G.mul(2, p), q), r) == 0

    def hyperplane(pt):
        p, (q, r) = pt
        return tuple(sorted((p, p, q, r)))

    images = {a: {sigma(a, p) for p in range(N)} for a in two}
    sections_ok = all(valid(sigma(a, p)) and valid(tau(p)) for a in two for p in range(N))
    disjoint = all(not (images[a] & images[b]) for a in two for b in two if a < b)
    inv_ok = True
    for _ in range(samples):
        p = rng.randrange(N)
        for a in two:
            if hyperplane(sigma(a, p)) != hyperplane(sigma(a, sub(a, p))):
                inv_ok = False
    coincidences = [(a, p) for a in two for p in range(N) if tau(p) == sigma(a, p)]
    rule_ok = all(G.mul(2, p) == a for a, p in coincidences) and \
        len(coincidences) == sum(1 for a in two for p in range(N) if G.mul(2, p) == a)
    exact4 = [p for p in four if G.mul(2, p) != 0]
    nonzero_a = [(a, p) for a, p in coincidences if a != 0]
    return {
        "curves": len(images),
        "sections_in_bundle": sections_ok,
        "disjoint": disjoint,
        "involution_ok": inv_ok,
        "coincidences": len(coincidences),
        "coincidence_rule_2b_eq_a": rule_ok,
        "coincidence_points_are_E4": sorted({p for _, p in coincidences}) == sorted(four),
        "points_of_exact_order_4": len(exact4),
        "coincidences_with_a_of_order_2": len(nonzero_a),
    }
