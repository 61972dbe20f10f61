"""Elliptic curves over exact fields, the variety of zero-sum tuples and its symmetries.

A point of the tuple variety is (y_1, ..., y_{n+1}) with sum O; it is
determined by its first n entries.  Even permutations act by moving
coordinates, ``(g.y)_{g(i)} = y_i``.

Hot loops work on point *indices* into the enumerated group E(F) with cached
addition, so a census over E(F)^n touches field arithmetic only once per
distinct pair.
"""
import itertools
import json
import math
import random
from collections import Counter, defaultdict
from dataclasses import dataclass, field as dc_field
from pathlib import Path

from .exactalg import upoly
from .exactalg.fields import GF, FieldElement, FieldError, MAX_EXTENSION_DEGREE, PrimeField, lcm_degrees
from .repthy import Permutation, alternating_group

ENUMERATION_CAP = 10 ** 6
CENSUS_CAP = 10 ** 7
CENSUS_CURVES = Path(__file__).parent / "data" / "census_curves.json"


class CurveError(ValueError):
    pass


class WeierstrassCurve:
    """y^2 = x^3 + a x + b over a field of characteristic not 2 or 3."""

    def __init__(self, field, a, b):
        if field.characteristic in (2, 3):
            raise CurveError("characteristic %d is not supported" % field.characteristic)
        self.field = field
        self.a = field.coerce(a)
        self.b = field.coerce(b)
        F = field
        disc = F.add(F.mul(F.from_int(4), F.pow(self.a, 3)), F.mul(F.from_int(27), F.mul(self.b, self.b)))
        if F.is_zero(disc):
            raise CurveError("4a^3 + 27b^2 = 0: singular curve")
        self._points = None
        self._index = None

    def __eq__(self, other):
        return (isinstance(other, WeierstrassCurve) and self.field == other.field
                and self.a == other.a and self.b == other.b)

    def __hash__(self):
        return hash((self.field, self.a, self.b))

    def __repr__(self):
        F = self.field
        return "y^2 = x^3 + %s*x + %s over %r" % (F.to_str(self.a), F.to_str(self.b), F)

    def base_change(self, K):
        F = self.field
        return WeierstrassCurve(K, K.coerce(FieldElement(F, self.a)), K.coerce(FieldElement(F, self.b)))

    # -- raw arithmetic on (x, y) tuples, None for the origin ------------------
    def rhs(self, x):
        F = self.field
        return F.add(F.add(F.pow(x, 3), F.mul(self.a, x)), self.b)

    def contains_raw(self, P):
        if P is None:
            return True
        F = self.field
        return F.mul(P[1], P[1]) == self.rhs(P[0])

    def neg_raw(self, P):
        if P is None:
            return None
        return (P[0], self.field.neg(P[1]))

    def add_raw(self, P, Q):
        if P is None:
            return Q
        if Q is None:
            return P
        F = self.field
        x1, y1 = P
        x2, y2 = Q
        if x1 == x2:
            if F.is_zero(F.add(y1, y2)):
                return None
            # doubling
            num = F.add(F.mul(F.from_int(3), F.mul(x1, x1)), self.a)
            lam = F.div(num, F.mul(F.from_int(2), y1))
        else:
            lam = F.div(F.sub(y2, y1), F.sub(x2, x1))
        x3 = F.sub(F.sub(F.mul(lam, lam), x1), x2)
        y3 = F.sub(F.mul(lam, F.sub(x1, x3)), y1)
        return (x3, y3)

    def mul_raw(self, k, P):
        if k < 0:
            return self.mul_raw(-k, self.neg_raw(P))
        out, base = None, P
        while k:
            if k & 1:
                out = self.add_raw(out, base)
            k >>= 1
            if k:
                base = self.add_raw(base, base)
        return out

    # -- user-facing points ----------------------------------------------------
    def point(self, x=None, y=None):
        if x is None:
            return CurvePoint(self, None)
        P = (self.field.coerce(x), self.field.coerce(y))
        if not self.contains_raw(P):
            raise CurveError("point not on the curve")
        return CurvePoint(self, P)

    @property
    def O(self):
        return CurvePoint(self, None)

    def raw_points(self):
        """All of E(F), origin first, then affine points sorted by the field order."""
        if self._points is not None:
            return self._points
        F = self.field
        if not F.is_finite:
            raise CurveError("point enumeration needs a finite field")
        if F.order > ENUMERATION_CAP:
            raise CurveError("field of size %d exceeds the enumeration cap" % F.order)
        roots = defaultdict(list)
        for y in F.elements():
            y = tuple(y) if isinstance(y, tuple) else y
            roots[F.mul(y, y)].append(y)
        pts = [None]
        for x in F.elements():
            x = tuple(x) if isinstance(x, tuple) else x
            for y in sorted(roots.get(self.rhs(x), ()), key=F.sort_key):
                pts.append((x, y))
        self._points = pts
        self._index = {P: i for i, P in enumerate(pts)}
        return pts

    def points(self):
        return [CurvePoint(self, P) for P in self.raw_points()]

    def order(self):
        return len(self.raw_points())

    def random_point(self, rng):
        pts = self.raw_points()
        return CurvePoint(self, pts[rng.randrange(len(pts))])

    def hasse_ok(self):
        q = self.field.order
        return (self.order() - q - 1) ** 2 <= 4 * q

    # -- division polynomials (x-parts, m <= 4) ----------------------------------
    def division_xpoly(self, m):
        """Polynomial whose roots are the x-coordinates of E[m] minus the origin."""
        F = self.field
        a, b = self.a, self.b
        c = F.from_int

        def lin(*terms):
            return upoly.trim(F, list(terms))

        f = lin(b, a, F.zero, F.one)
        if m == 1:
            return [F.one]
        if m == 2:
            return f
        if m == 3:
            return lin(F.neg(F.mul(a, a)), F.mul(c(12), b), F.mul(c(6), a), F.zero, c(3))
        if m == 4:
            a2, a3 = F.mul(a, a), F.pow(a, 3)
            psi4 = lin(F.sub(F.neg(F.mul(c(2), a3)), F.mul(c(16), F.mul(b, b))),
                       F.neg(F.mul(c(8), F.mul(a, b))),
                       F.neg(F.mul(c(10), a2)),
                       F.mul(c(40), b),
                       F.mul(c(10), a),
                       F.zero,
                       c(2))
            return upoly.mul(F, f, psi4)
        raise CurveError("division polynomials are hard-coded for m <= 4 only")


class CurvePoint:
    __slots__ = ("curve", "raw")

    def __init__(self, curve, raw):
        self.curve = curve
        self.raw = raw

    @property
    def is_zero(self):
        return self.raw is None

    @property
    def x(self):
        return None if self.raw is None else FieldElement(self.curve.field, self.raw[0])

    @property
    def y(self):
        return None if self.raw is None else FieldElement(self.curve.field, self.raw[1])

    def __add__(self, other):
        if other.curve != self.curve:
            raise CurveError("points on different curves")
        return CurvePoint(self.curve, self.curve.add_raw(self.raw, other.raw))

    def __neg__(self):
        return CurvePoint(self.curve, self.curve.neg_raw(self.raw))

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, k):
        return CurvePoint(self.curve, self.curve.mul_raw(k, self.raw))

    def __eq__(self, other):
        return isinstance(other, CurvePoint) and self.raw == other.raw and self.curve == other.curve

    def __hash__(self):
        return hash(self.raw)

    def on_curve(self):
        return self.curve.contains_raw(self.raw)

    def __repr__(self):
        if self.raw is None:
            return "O"
        F = self.curve.field
        return "(%s, %s)" % (F.to_str(self.raw[0]), F.to_str(self.raw[1]))


# ---------------------------------------------------------------------------
# torsion
# ---------------------------------------------------------------------------

def torsion_field_degree(E, m, cap=MAX_EXTENSION_DEGREE):
    """Least k with E[m] defined over F_{p^k} (E over a prime field)."""
    F = E.field
    if not isinstance(F, PrimeField):
        raise CurveError("torsion fields are computed from a prime base field")
    if math.gcd(m, F.characteristic) != 1:
        raise CurveError("m must be prime to the characteristic")
    if m == 1:
        return 1
    xpoly = E.division_xpoly(m)
    _, facs = upoly.factor_finite(F, xpoly)
    k = lcm_degrees(len(g) - 1 for g, _ in facs)
    while k <= cap:
        K = GF(F.p, k)
        Ek = E.base_change(K)
        xs = upoly.roots_finite(K, Ek.division_xpoly(m))
        if all(K.is_square(Ek.rhs(x)) for x in xs):
            return k
        k *= 2
    raise FieldError("E[%d] needs an extension beyond the degree cap %d" % (m, cap))


def torsion_points(E, m, allow_extension=False, cap=MAX_EXTENSION_DEGREE):
    """(field used, points P with mP = O) over the base field or the m-torsion field."""
    if m == 1:
        return E.field, [E.O]
    if allow_extension:
        k = torsion_field_degree(E, m, cap)
        K = GF(E.field.p, k) if k > 1 else E.field
        E = E.base_change(K) if k > 1 else E
    K = E.field
    xs = upoly.roots_finite(K, E.division_xpoly(m))
    pts = [E.O]
    for x in xs:
        y = K.sqrt(E.rhs(x))
        if y is None:
            continue
        for yy in sorted({y, K.neg(y)}, key=K.sort_key):
            P = (x, yy)
            if E.mul_raw(m, P) is None:
                pts.append(CurvePoint(E, P))
    return K, pts


def over_torsion_field(E, m, cap=MAX_EXTENSION_DEGREE):
    k = torsion_field_degree(E, m, cap)
    return E if k == 1 else E.base_change(GF(E.field.p, k))


# ---------------------------------------------------------------------------
# indexed group
# ---------------------------------------------------------------------------

class IndexedGroup:
    """E(F) as indices 0..N-1 (0 is the origin) with cached addition."""

    def __init__(self, E):
        self.E = E
        self.pts = E.raw_points()
        self.index = {P: i for i, P in enumerate(self.pts)}
        self.N = len(self.pts)
        self._add = {}
        self.neg = [self.index[E.neg_raw(P)] for P in self.pts]

    def add(self, i, j):
        if i == 0:
            return j
        if j == 0:
            return i
        key = (i, j) if i <= j else (j, i)
        r = self._add.get(key)
        if r is None:
            r = self.index[self.E.add_raw(self.pts[i], self.pts[j])]
            self._add[key] = r
        return r

    def mul(self, k, i):
        return self.index[self.E.mul_raw(k, self.pts[i])]

    def sum(self, idxs):
        acc = 0
        for i in idxs:
            acc = self.add(acc, i)
        return acc

    def preimages(self, k):
        """Map target index -> list of indices i with k*i = target."""
        out = defaultdict(list)
        for i in range(self.N):
            out[self.mul(k, i)].append(i)
        return out


# ---------------------------------------------------------------------------
# the tuple variety and the group action
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TildeYPoint:
    coords: tuple

    def check(self, E):
        acc = None
        for P in self.coords:
            acc = E.add_raw(acc, P.raw)
        return acc is None


def lift(first):
    """Reconstruct (y_1..y_{n+1}) from the first n coordinates."""
    first = list(first)
    E = first[0].curve
    total = E.O
    for P in first:
        total = total + P
    return TildeYPoint(tuple(first) + (-total,))


def project(y):
    return tuple(y.coords[:-1])


def act(g, y):
    if not g.is_even():
        raise ValueError("odd permutation")
    if g.size != len(y.coords):
        raise ValueError("permutation size does not match the tuple")
    return TildeYPoint(tuple(g.act(list(y.coords))))


def fixed_locus_indices(G, n, g):
    """Index tuples (length n+1) of zero-sum tuples fixed by g: constant on cycles."""
    cycles = g.cycles()
    *head, last = cycles
    pre = G.preimages(len(last))
    out = []
    for vals in itertools.product(range(G.N), repeat=len(head)):
        acc = 0
        for c, z in zip(head, vals):
            acc = G.add(acc, G.mul(len(c), z) if len(c) > 1 else z)
        for zl in pre.get(G.neg[acc], ()):
            y = [0] * (n + 1)
            for c, z in zip(head, vals):
                for i in c:
                    y[i] = z
            for i in last:
                y[i] = zl
            out.append(tuple(y))
    out.sort()
    return out


def fixed_locus(E, n, g):
    """Points of the tuple variety over E's field fixed by g."""
    G = IndexedGroup(E)
    return [TildeYPoint(tuple(CurvePoint(E, G.pts[i]) for i in t)) for t in fixed_locus_indices(G, n, g)]


def fixed_count(G, n, g):
    """Number of fixed tuples, without materializing them."""
    cycles = g.cycles()
    *head, last = cycles
    pre = G.preimages(len(last))
    count = 0
    for vals in itertools.product(range(G.N), repeat=len(head)):
        acc = 0
        for c, z in zip(head, vals):
            acc = G.add(acc, G.mul(len(c), z) if len(c) > 1 else z)
        count += len(pre.get(G.neg[acc], ()))
    return count


# ---------------------------------------------------------------------------
# stabilizers, Burnside
# ---------------------------------------------------------------------------

STABILIZER_LABELS = {
    3: {(3,): "A3"},
    4: {(4,): "A4", (3, 1): "<(123)>", (2, 2): "<(12)(34)>"},
}


def block_type(t):
    return tuple(sorted(Counter(t).values(), reverse=True))


def stabilizer_label(N, btype):
    return STABILIZER_LABELS.get(N, {}).get(btype, "trivial")


def stabilizer_order(N, btype):
    """|A_N intersected with the Young subgroup of the block type|."""
    young = 1
    for k in btype:
        young *= math.factorial(k)
    return young if young == 1 else young // 2


def all_tuples(G, n):
    """Every zero-sum index tuple (y_1..y_{n+1})."""
    for head in itertools.product(range(G.N), repeat=n):
        yield head + (G.neg[G.sum(head)],)


@dataclass
class StabilizerCensus:
    field: str
    n: int
    curve_order: int
    entries: dict
    total: int

    def nontrivial(self):
        return sum(c for k, (c, _) in self.entries.items() if k != "trivial")


def stabilizer_census(E, n):
    if n not in (2, 3):
        raise ValueError("census is implemented for n in {2, 3}")
    G = IndexedGroup(E)
    if G.N ** n > CENSUS_CAP:
        raise CurveError("census of size %d exceeds the cap" % G.N ** n)
    counts = Counter()
    for t in all_tuples(G, n):
        counts[block_type(t)] += 1
    entries = {}
    for bt, c in counts.items():
        label = stabilizer_label(n + 1, bt)
        tag = len(bt) - 1
        if label in entries:
            prev, ptag = entries[label]
            entries[label] = (prev + c, max(ptag, tag))
        else:
            entries[label] = (c, tag)
    entries = dict(sorted(entries.items()))
    return StabilizerCensus(repr(E.field), n, G.N, entries, sum(counts.values()))


def burnside_orbit_count(E, n, group=None):
    G = IndexedGroup(E)
    group = group if group is not None else alternating_group(n + 1)
    total = sum(fixed_count(G, n, g) for g in group)
    if total % len(group):
        raise ArithmeticError("non-integral Burnside average")
    return total // len(group)


def direct_orbit_count(E, n, group=None):
    G = IndexedGroup(E)
    group = group if group is not None else alternating_group(n + 1)
    seen = set()
    orbits = 0
    for t in all_tuples(G, n):
        if t in seen:
            continue
        orbits += 1
        for g in group:
            seen.add(tuple(g.act(list(t))))
    return orbits


def fixed_set_formula_n2(E):
    """The 3-cycle's fixed tuples are exactly (x, x, x) with 3x = O."""
    G = IndexedGroup(E)
    g = Permutation.from_cycles(3, [(1, 2, 3)])
    fixed = fixed_locus_indices(G, 2, g)
    three = {i for i in range(G.N) if G.mul(3, i) == 0}
    ok = (all(t[0] == t[1] == t[2] for t in fixed) and {t[0] for t in fixed} == three)
    return {"count": len(fixed), "three_torsion": len(three), "ok": ok}


def double_transposition_components(E):
    """n = 3, g = (12)(34): fixed tuples grouped by the 2-torsion value y_1 + y_3."""
    G = IndexedGroup(E)
    g = Permutation.from_cycles(4, [(1, 2), (3, 4)])
    comps = Counter()
    for t in fixed_locus_indices(G, 3, g):
        comps[G.add(t[0], t[2])] += 1
    two = sorted(i for i in range(G.N) if G.mul(2, i) == 0)
    return {"components": len(comps), "two_torsion": len(two),
            "values_are_two_torsion": set(comps) <= set(two),
            "sizes": [comps[i] for i in two]}


def load_census_curves(path=None):
    """(curve name, WeierstrassCurve, [n ...]) for every pinned curve and prime."""
    with open(path or CENSUS_CURVES) as fh:
        data = json.load(fh)
    out = []
    for entry in data["curves"]:
        for p, ns in sorted(entry["primes"].items(), key=lambda kv: int(kv[0])):
            out.append((entry["name"], WeierstrassCurve(GF(int(p)), entry["a"], entry["b"]), list(ns)))
    return out
