"""Resultants, multivariate gcd and resultant-based elimination and solving.

Elimination scheme
------------------
Variables are removed one at a time.  The pivot for variable v is a
polynomial of least positive degree in v, preferring among those one whose
leading coefficient in v is a constant; it is replaced, together with every
other polynomial involving v, by the resultants Res_v(pivot, q).  Polynomials
free of v pass through.  Each resultant lies in the ideal of the system, so
the final eliminant vanishes on the projection of the solution set; it may
carry extraneous factors where both leading coefficients vanish.  Those are
detected by comparing with the recorded pivot leading coefficients and are
removed only when back-substitution proves the fiber over them empty (the
"saturation step").

Zero-dimensional systems are solved orbit by orbit: every irreducible factor
phi of the eliminant in the first variable gives one Galois orbit of
solutions, represented by a single point over K = F[t]/(phi).  A random shear
of the first coordinate makes it separate the solutions, so that the other
coordinates are rational over K and no extension towers are needed.
"""
import random
from dataclasses import dataclass, field

from . import upoly
from .factor import factor_raw
from .fields import ExtensionField
from .poly import MPoly


class EliminationError(ArithmeticError):
    """Elimination collapsed to the zero polynomial."""


class PositiveDimensional(ArithmeticError):
    pass


class NotSeparated(ArithmeticError):
    pass


# ---------------------------------------------------------------------------
# resultants
# ---------------------------------------------------------------------------

def _check_pair(f, g):
    if f.field != g.field or f.nvars != g.nvars:
        raise ValueError("resultant of polynomials over different rings")


def sylvester_matrix(f, g, var):
    m, n = f.degree(var), g.degree(var)
    zero = MPoly.zero(f.field, f.nvars)
    a = f.coeff_list(var)[::-1]
    b = g.coeff_list(var)[::-1]
    size = m + n
    rows = []
    for i in range(n):
        rows.append([zero] * i + a + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + b + [zero] * (size - n - 1 - i))
    return rows


def _bareiss_det(M):
    n = len(M)
    if n == 0:
        return None
    M = [list(r) for r in M]
    sign = 1
    prev = None
    for k in range(n - 1):
        if M[k][k].is_zero():
            swap = next((i for i in range(k + 1, n) if not M[i][k].is_zero()), None)
            if swap is None:
                return MPoly.zero(M[0][0].field, M[0][0].nvars)
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        pk = M[k][k]
        for i in range(k + 1, n):
            mik = M[i][k]
            for j in range(k + 1, n):
                val = M[i][j] * pk - mik * M[k][j]
                if prev is not None:
                    val = _exact_div(val, prev)
                M[i][j] = val
        prev = pk
    det = M[n - 1][n - 1]
    return -det if sign < 0 else det


def _exact_div(f, g):
    if g.is_constant():
        return f.scale(g.field.inv(g.constant_value()))
    return f.exact_div(g)


def resultant(f, g, var):
    """Sylvester resultant Res_var(f, g); the result is free of ``var``."""
    _check_pair(f, g)
    m, n = f.degree(var), g.degree(var)
    if f.is_zero() or g.is_zero():
        return MPoly.zero(f.field, f.nvars)
    if m <= 0 and n <= 0:
        raise ValueError("variable x%d absent from both polynomials" % var)
    if m == 0:
        return g.__class__.const(f.field, f.nvars, 1) * (f ** n)
    if n == 0:
        return g ** m
    if set(f.variables()) | set(g.variables()) == {var}:
        F = f.field
        r = upoly.resultant(F, f.to_upoly(var), g.to_upoly(var))
        return MPoly.const(F, f.nvars, r)
    return _bareiss_det(sylvester_matrix(f, g, var))


def resultant_info(f, g, var):
    """Resultant together with the leading-coefficient degeneration flag.

    The flag is set when the leading coefficients of f and g in ``var`` share
    a nonconstant factor, i.e. both vanish on a common component, where the
    resultant vanishes without a finite common root.
    """
    r = resultant(f, g, var)
    lf, lg = f.lead_coeff_in(var), g.lead_coeff_in(var)
    degenerate = not mgcd(lf, lg).is_constant()
    return r, {"lc_degenerate": degenerate}


# ---------------------------------------------------------------------------
# gcd and squarefree part
# ---------------------------------------------------------------------------

def _one(f):
    return MPoly.const(f.field, f.nvars, 1)


def _from_coeff_list(coeffs, var, like):
    terms = {}
    for k, c in enumerate(coeffs):
        for e, a in c.terms.items():
            terms[e[:var] + (k,) + e[var + 1:]] = a
    return MPoly(like.field, like.nvars, terms)


def prem(a, b, var):
    """Pseudo-remainder of a by b in ``var`` (up to a unit of the coefficient ring)."""
    A = a.coeff_list(var)
    B = b.coeff_list(var)
    db = len(B) - 1
    lb = B[-1]
    while A and len(A) - 1 >= db:
        c = A[-1]
        s = len(A) - 1 - db
        A = [x * lb for x in A]
        for j in range(db + 1):
            A[s + j] = A[s + j] - c * B[j]
        while A and A[-1].is_zero():
            A.pop()
    return _from_coeff_list(A, var, a)


def content(f, var):
    g = None
    for c in f.coeffs_in(var).values():
        g = c.monic() if g is None else mgcd(g, c)
        if g.is_constant():
            return _one(f)
    return g if g is not None else _one(f)


def primitive_part(f, var):
    if f.is_zero():
        return f
    return _exact_div(f, content(f, var))


def mgcd(f, g):
    """Monic (grlex) gcd of two multivariate polynomials over a field."""
    if f.is_zero():
        return g.monic()
    if g.is_zero():
        return f.monic()
    if f.is_constant() or g.is_constant():
        return _one(f)
    vs = sorted(set(f.variables()) | set(g.variables()))
    v = vs[-1]
    if f.degree(v) == 0:
        return mgcd(f, content(g, v))
    if g.degree(v) == 0:
        return mgcd(content(f, v), g)
    if len(vs) == 1:
        F = f.field
        h = upoly.gcd(F, f.to_upoly(v), g.to_upoly(v))
        return MPoly.from_upoly(F, f.nvars, v, h)
    cf, cg = content(f, v), content(g, v)
    a, b = _exact_div(f, cf), _exact_div(g, cg)
    c = mgcd(cf, cg)
    if a.degree(v) < b.degree(v):
        a, b = b, a
    while True:
        r = prem(a, b, v)
        if r.is_zero():
            h = b
            break
        if r.degree(v) == 0:
            h = _one(f)
            break
        a, b = b, primitive_part(r, v)
    h = primitive_part(h, v)
    return (c * h).monic()


def mgcd_list(polys):
    g = None
    for p in polys:
        g = p.monic() if g is None else mgcd(g, p)
    return g


def squarefree_part(f):
    """Product of the distinct irreducible factors (monic).

    Exact in characteristic 0 and whenever every partial degree is below the
    characteristic.
    """
    if f.is_zero():
        return f
    if f.is_constant():
        return _one(f)
    v = f.variables()[-1]
    c = content(f, v)
    pp = _exact_div(f, c)
    d = pp.diff(v)
    core = pp if d.is_zero() else _exact_div(pp, mgcd(pp, d))
    return (squarefree_part(c) * core).monic()


# ---------------------------------------------------------------------------
# elimination
# ---------------------------------------------------------------------------

@dataclass
class EliminationResult:
    polys: list
    trace: list = field(default_factory=list)
    lead_coeffs: list = field(default_factory=list)


def _normalize_set(polys):
    seen = {}
    for p in polys:
        if p.is_zero():
            continue
        q = squarefree_part(p) if not p.is_constant() else _one(p)
        seen.setdefault(q, q)
    return sorted(seen.values(), key=lambda q: (q.total_degree(), len(q.terms), str(q)))


def _pivot_key(p, v):
    # among pivots of least degree, a constant leading coefficient never degenerates
    return (p.degree(v), 0 if p.lead_coeff_in(v).is_constant() else 1, p.total_degree(),
            len(p.terms), str(p))


def _pick_var(polys, candidates):
    best = None
    for v in candidates:
        with_v = [p for p in polys if p.degree(v) > 0]
        if not with_v:
            key = (0, 0, 0, v)
        else:
            pk = min(_pivot_key(p, v) for p in with_v)
            key = (pk[0], pk[1], len(with_v), v)  # degree, then monic
        if best is None or key < best[0]:
            best = (key, v)
    return best[1]


def eliminate(system, elim_vars, order=None):
    """Remove ``elim_vars`` from the system by pivot resultants.

    ``order`` fixes the elimination order; by default the variable with the
    cheapest pivot is eliminated first.
    """
    polys = _normalize_set(system)
    result = EliminationResult(polys)
    remaining = list(order) if order is not None else list(elim_vars)
    while remaining:
        if any(p.is_constant() for p in polys):
            break
        v = remaining[0] if order is not None else _pick_var(polys, remaining)
        remaining.remove(v)
        with_v = [p for p in polys if p.degree(v) > 0]
        without = [p for p in polys if p.degree(v) <= 0]
        if not with_v:
            continue
        pivot = min(with_v, key=lambda p: _pivot_key(p, v))
        others = [q for q in with_v if q is not pivot]
        res = [resultant(pivot, q, v) for q in others]
        result.lead_coeffs.append(pivot.lead_coeff_in(v))
        result.trace.append({"var": v, "pivot_degree": pivot.degree(v), "resultants": len(res),
                             "vanishing": sum(1 for r in res if r.is_zero())})
        polys = _normalize_set(without + res)
    result.polys = polys
    return result


@dataclass
class Eliminant:
    poly: MPoly
    keep_var: int
    trace: list
    lc_factor_detected: bool = False
    removed_factors: list = field(default_factory=list)


def eliminate_to_univariate(system, keep_var, order=None, saturate=True, seed=0):
    """Nonzero univariate eliminant in ``keep_var`` (monic; constant 1 if inconsistent)."""
    system = [p for p in system if not p.is_zero()]
    if not system:
        raise EliminationError("empty system")
    F = system[0].field
    nvars = system[0].nvars
    present = sorted({v for p in system for v in p.variables()} - {keep_var})
    res = eliminate(system, present, order)
    uni = [p for p in res.polys if set(p.variables()) <= {keep_var}]
    if not uni:
        raise EliminationError("elimination collapsed to the zero polynomial")
    g = None
    for p in uni:
        u = p.to_upoly(keep_var)
        g = upoly.monic(F, u) if g is None else upoly.gcd(F, g, u)
    out = Eliminant(MPoly.from_upoly(F, nvars, keep_var, g), keep_var, res.trace)
    if len(g) <= 1 or not saturate:
        return out
    lcs = [lc for lc in res.lead_coeffs if set(lc.variables()) <= {keep_var} and not lc.is_constant()]
    shared = [F.one]
    for lc in lcs:
        h = upoly.gcd(F, g, lc.to_upoly(keep_var))
        if len(h) > 1:
            shared = upoly.mul(F, shared, h)
    if len(shared) <= 1:
        return out
    out.lc_factor_detected = True
    shared = upoly.squarefree_part(F, shared)
    _, facs = factor_raw(F, shared, seed=seed)
    for phi, _ in facs:
        if _fiber_empty(system, keep_var, phi):
            out.removed_factors.append(MPoly.from_upoly(F, nvars, keep_var, phi))
            while True:
                q, r = upoly.divmod_(F, g, phi)
                if r:
                    break
                g = q
    out.poly = MPoly.from_upoly(F, nvars, keep_var, g)
    return out


def _root_field(F, phi):
    if len(phi) == 2:
        return F, F.neg(upoly.monic(F, phi)[0])
    K = ExtensionField(F, phi, check=False)
    return K, K.gen


def _fiber_empty(system, var, phi):
    """True when the system has provably no solution with var a root of phi."""
    K, t = _root_field(system[0].field, phi)
    spec = [p.change_field(K).specialize(var, t) for p in system]
    spec = [p for p in spec if not p.is_zero()]
    if not spec:
        return False
    rest = sorted({v for p in spec for v in p.variables()})
    res = eliminate(spec, rest)
    return any(p.is_constant() for p in res.polys)


# ---------------------------------------------------------------------------
# zero-dimensional solving
# ---------------------------------------------------------------------------

@dataclass
class Orbit:
    """One Galois orbit of solutions, as a point over K = F[t]/(minpoly)."""
    field: object
    point: tuple
    degree: int

    def evaluate(self, f):
        return f.evaluate(self.point, self.field)


def _apply_shear(polys, keep, others, coeffs):
    """Substitute x_keep -> x_keep - sum c_i x_i (new first coordinate is a generic form)."""
    if not any(coeffs):
        return polys
    F = polys[0].field
    n = polys[0].nvars
    img = MPoly.var(F, n, keep)
    for v, c in zip(others, coeffs):
        img = img - MPoly.var(F, n, v).scale(F.coerce(c))
    return [p.subs({keep: img}) for p in polys]


def _univariate_root(K, polys, var):
    """Roots in K of the gcd of the univariate members; raises if not pinned down."""
    g = None
    for p in polys:
        u = p.to_upoly(var)
        g = upoly.monic(K, u) if g is None else upoly.gcd(K, g, u)
    if g is None:
        raise PositiveDimensional("coordinate x%d is unconstrained" % var)
    if len(g) <= 1:
        return []
    if len(g) == 2:
        return [K.neg(g[0])]
    if K.is_finite:
        roots = upoly.roots_finite(K, g)
        if len(roots) == len(g) - 1:
            return roots
    raise NotSeparated("fiber is not separated by the first coordinate")


def _solve_fiber(K, polys, vars_):
    polys = [p for p in polys if not p.is_zero()]
    if any(p.is_constant() for p in polys):
        return []
    if not vars_:
        return [{}]
    if not polys:
        raise PositiveDimensional("no equations left for %s" % vars_)
    v = vars_[0]
    rest = vars_[1:]
    res = eliminate(polys, rest)
    if any(p.is_constant() for p in res.polys):
        return []
    uni = [p for p in res.polys if set(p.variables()) <= {v}]
    if not uni:
        raise PositiveDimensional("fiber collapsed")
    out = []
    for r in _univariate_root(K, uni, v):
        sub = [p.specialize(v, r) for p in polys]
        for tail in _solve_fiber(K, sub, rest):
            tail = dict(tail)
            tail[v] = r
            out.append(tail)
    return out


def solve(system, seed=0, max_tries=8):
    """All solutions over the closure, as Galois orbits (list of :class:`Orbit`).

    Every variable of the ambient ring must be constrained; a positive
    dimensional solution set raises :class:`PositiveDimensional`.
    """
    system = [p for p in system if not p.is_zero()]
    if not system:
        raise PositiveDimensional("empty system")
    F = system[0].field
    n = system[0].nvars
    if any(p.is_constant() for p in system):
        return []
    present = sorted({v for p in system for v in p.variables()})
    quick = eliminate(system, present)
    if any(p.is_constant() for p in quick.polys):
        return []
    if len(present) < n:
        raise PositiveDimensional("variables %s are unconstrained" % sorted(set(range(n)) - set(present)))
    keep, others = present[0], present[1:]
    rng = random.Random(seed)
    last = None
    for attempt in range(max_tries):
        coeffs = [0] * len(others) if attempt == 0 else [rng.randint(-7, 7) or 1 for _ in others]
        sheared = _apply_shear(system, keep, others, coeffs)
        try:
            elim = eliminate_to_univariate(sheared, keep, saturate=False)
        except EliminationError as exc:
            raise PositiveDimensional(str(exc))
        g = elim.poly.to_upoly(keep)
        if len(g) <= 1:
            return []
        _, facs = factor_raw(F, upoly.squarefree_part(F, g), seed=seed)
        orbits = []
        try:
            for phi, _ in facs:
                K, t = _root_field(F, phi)
                spec = [p.change_field(K).specialize(keep, t) for p in sheared]
                for tail in _solve_fiber(K, spec, others):
                    pt = [K.zero] * n
                    pt[keep] = t
                    for v, val in tail.items():
                        pt[v] = val
                    for v, c in zip(others, coeffs):
                        if c:
                            pt[keep] = K.sub(pt[keep], K.mul(K.coerce(c), pt[v]))
                    if all(K.is_zero(p.evaluate(pt, K)) for p in system):
                        orbits.append(Orbit(K, tuple(pt), K.degree))
        except NotSeparated as exc:
            last = exc
            continue
        return orbits
    raise NotSeparated("no separating shear found after %d tries (%s)" % (max_tries, last))


def count_points(orbits):
    return sum(o.degree for o in orbits)
