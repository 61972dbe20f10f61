"""The alternating group, its standard representation and exterior-power invariants.

Permutations act on {1, ..., n+1} (stored 0-based).  Products compose as maps,
``(g*h)(i) = g(h(i))``, and the group acts on W^{n+1} by moving coordinates,
``(g.w)_{g(i)} = w_i``.  The standard representation is the sum-zero
subspace in the basis e_i - e_{n+1}, i = 1..n.
"""
import itertools
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .exactalg.fields import QQ, GF
from .exactalg.linalg import ExactMatrix

MAX_LETTERS = 8


# ---------------------------------------------------------------------------
# permutations
# ---------------------------------------------------------------------------

class Permutation:
    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError("not a bijection of {0..%d}: %r" % (len(images) - 1, images))
        self.images = images

    @classmethod
    def identity(cls, size):
        return cls(range(size))

    @classmethod
    def from_cycles(cls, size, cycles):
        """Build from 1-based cycles, e.g. ``from_cycles(4, [(1, 2), (3, 4)])``."""
        img = list(range(size))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                img[a - 1] = b - 1
        return cls(img)

    @property
    def size(self):
        return len(self.images)

    def __call__(self, i):
        return self.images[i]

    def __mul__(self, other):
        return Permutation(self.images[j] for j in other.images)

    def inverse(self):
        inv = [0] * self.size
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv)

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = Permutation.identity(self.size)
        for _ in range(k):
            out = out * self
        return out

    def cycles(self):
        seen, out = set(), []
        for i in range(self.size):
            if i in seen:
                continue
            cyc, j = [], i
            while j not in seen:
                seen.add(j)
                cyc.append(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def cycle_type(self):
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def sign(self):
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def is_even(self):
        return self.sign() == 1

    def fixed_points(self):
        return sum(1 for i, j in enumerate(self.images) if i == j)

    def act(self, w):
        """(g.w)_{g(i)} = w_i on a coordinate vector."""
        out = [None] * self.size
        for i, j in enumerate(self.images):
            out[j] = w[i]
        return out

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __lt__(self, other):
        return self.images < other.images

    def __repr__(self):
        cyc = [c for c in self.cycles() if len(c) > 1]
        if not cyc:
            return "()"
        return "".join("(" + " ".join(str(i + 1) for i in c) + ")" for c in cyc)


def alternating_group(n_plus_1):
    """All even permutations of {1..n_plus_1}, in lexicographic order of images."""
    if not 3 <= n_plus_1 <= MAX_LETTERS:
        raise ValueError("alternating_group needs 3 <= n+1 <= %d" % MAX_LETTERS)
    out = []
    for p in itertools.permutations(range(n_plus_1)):
        g = Permutation(p)
        if g.is_even():
            out.append(g)
    return out


def generators(n_plus_1):
    """Fixed generating set {(1 2 3), (1 2 ... N) if N odd else (2 3 ... N)}."""
    c3 = Permutation.from_cycles(n_plus_1, [(1, 2, 3)])
    if n_plus_1 == 3:
        return [c3]
    if n_plus_1 % 2:
        long = Permutation.from_cycles(n_plus_1, [tuple(range(1, n_plus_1 + 1))])
    else:
        long = Permutation.from_cycles(n_plus_1, [tuple(range(2, n_plus_1 + 1))])
    return [c3, long]


def generated_subgroup(gens):
    size = gens[0].size
    seen = {Permutation.identity(size)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = s * g
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return sorted(seen)


# ---------------------------------------------------------------------------
# the standard representation
# ---------------------------------------------------------------------------

def standard_rep_matrix(g, field=QQ):
    """Matrix of g on the sum-zero subspace in the basis e_i - e_{n+1}."""
    if not g.is_even():
        raise ValueError("odd permutation %r is not in the alternating group" % (g,))
    N = g.size
    n = N - 1
    rows = [[field.zero] * n for _ in range(n)]
    last = g(n)
    for i in range(n):
        # g(e_i - e_N) = e_{g(i)} - e_{g(N)}
        gi = g(i)
        if gi < n:
            rows[gi][i] = field.add(rows[gi][i], field.one)
        if last < n:
            rows[last][i] = field.sub(rows[last][i], field.one)
    return ExactMatrix(field, rows, n)


def exterior_power_matrix(g, m, field=QQ):
    return standard_rep_matrix(g, field).compound(m)


# ---------------------------------------------------------------------------
# class functions
# ---------------------------------------------------------------------------

def partitions(total, largest=None):
    largest = total if largest is None else largest
    if total == 0:
        yield ()
        return
    for k in range(min(total, largest), 0, -1):
        for rest in partitions(total - k, k):
            yield (k,) + rest


def is_even_type(lam):
    return sum(k - 1 for k in lam) % 2 == 0


def class_size(lam):
    """Size of the S_N conjugacy class of cycle type lam (the set of such permutations)."""
    N = sum(lam)
    denom = 1
    for k, mult in Counter(lam).items():
        denom *= k ** mult * math.factorial(mult)
    return math.factorial(N) // denom


def power_type(lam, k):
    """Cycle type of g^k for g of type lam."""
    out = []
    for ell in lam:
        d = math.gcd(ell, k)
        out.extend([ell // d] * d)
    return tuple(sorted(out, reverse=True))


def power_maps(n, kmax):
    return {(lam, k): power_type(lam, k)
            for lam in partitions(n + 1) if is_even_type(lam) for k in range(1, kmax + 1)}


def type_label(lam):
    return ",".join(str(k) for k in lam)


@dataclass
class ClassFunction:
    """Values on the cycle types of even permutations of n+1 letters (over Q)."""
    n: int
    values: dict

    @classmethod
    def constant(cls, n, c):
        return cls(n, {lam: Fraction(c) for lam in even_types(n)})

    def __call__(self, lam):
        return self.values[lam]

    def __mul__(self, other):
        return ClassFunction(self.n, {lam: v * other.values[lam] for lam, v in self.values.items()})

    def inner(self, other):
        """<self, other> over A_{n+1}; characters here are real so no conjugation is needed."""
        order = math.factorial(self.n + 1) // 2
        total = sum(class_size(lam) * v * other.values[lam] for lam, v in self.values.items())
        return Fraction(total, order)

    def as_labels(self):
        return {type_label(lam): str(v) for lam, v in sorted(self.values.items(), reverse=True)}


def even_types(n):
    return [lam for lam in partitions(n + 1) if is_even_type(lam)]


def character_of_standard(n):
    if not 2 <= n <= MAX_LETTERS - 1:
        raise ValueError("n out of range")
    return ClassFunction(n, {lam: Fraction(lam.count(1) - 1) for lam in even_types(n)})


def exterior_power_character(chi, m, pmaps=None):
    """Character of Lambda^m via Newton's identities on the power sums chi(g^k)."""
    n = chi.n
    if not 0 <= m <= n:
        raise ValueError("exterior power index out of range")
    pmaps = pmaps or power_maps(n, max(m, 1))
    out = {}
    for lam in chi.values:
        p = [None] + [chi.values[pmaps[(lam, k)]] for k in range(1, m + 1)]
        e = [Fraction(1)]
        for j in range(1, m + 1):
            s = sum((-1) ** (i - 1) * e[j - i] * p[i] for i in range(1, j + 1))
            e.append(s / j)
        out[lam] = e[m]
    return ClassFunction(n, out)


def invariant_dimension_char0(n, m):
    chi = character_of_standard(n)
    lam_m = exterior_power_character(chi, m)
    d = lam_m.inner(ClassFunction.constant(n, 1))
    if d.denominator != 1:
        raise ArithmeticError("non-integral invariant dimension %s: character bug" % d)
    return int(d)


def invariant_dimension_projector(n, m):
    """Rank of (1/|G|) sum_g Lambda^m rho(g) over Q; brute-force cross-check."""
    G = alternating_group(n + 1)
    acc = None
    for g in G:
        M = exterior_power_matrix(g, m, QQ)
        acc = M if acc is None else acc + M
    return acc.scale(Fraction(1, len(G))).rank()


def prop_b_table(n):
    return [invariant_dimension_char0(n, m) for m in range(n + 1)]


# ---------------------------------------------------------------------------
# modular fixed subspaces
# ---------------------------------------------------------------------------

def fixed_subspace_modp(n, m, p):
    """dim over F_p of the common kernel of Lambda^m rho(s) - I, s in the generating set."""
    if n > 5:
        raise ValueError("fixed_subspace_modp materializes matrices only for n <= 5")
    F = GF(p)
    blocks = []
    for s in generators(n + 1):
        M = exterior_power_matrix(s, m, F)
        blocks.append(M - ExactMatrix.identity(F, M.nrows))
    stacked = ExactMatrix.vstack(blocks)
    return stacked.ncols - stacked.rank()


def prop_b_predicates(n, p):
    """Both readings of the characteristic hypothesis, never conflated."""
    half_n = math.factorial(n) // 2
    order = math.factorial(n + 1) // 2
    return {
        "p_divides_n_fact_half": half_n % p == 0,
        "p_divides_group_order": order % p == 0,
        "n_fact_half_hypothesis_holds": half_n % p != 0,
        "group_order_hypothesis_holds": order % p != 0,
    }


# ---------------------------------------------------------------------------
# Lemma checks
# ---------------------------------------------------------------------------

def stabilizer_of_first(G):
    return [g for g in G if g(0) == 0]


def double_coset_count(n):
    """|G'\\G/G'| by orbits of G' on the left cosets of G' (G' = stabilizer of 1)."""
    G = alternating_group(n + 1)
    H = stabilizer_of_first(G)

    key_of = {}
    cosets = {}
    for g in G:
        if g in key_of:
            continue
        members = [g * h for h in H]
        k = min(x.images for x in members)
        cosets[k] = g
        for x in members:
            key_of[x] = k

    def coset_key(g):
        return key_of[g]
    orbits = 0
    seen = set()
    for k in sorted(cosets):
        if k in seen:
            continue
        orbits += 1
        stack = [k]
        seen.add(k)
        while stack:
            cur = cosets[stack.pop()]
            for h in H:
                k2 = coset_key(h * cur)
                if k2 not in seen:
                    seen.add(k2)
                    stack.append(k2)
    return orbits


@dataclass
class LemmaReport:
    n: int
    inner_product: Fraction
    irreducible: bool
    duality_ok: bool
    duality_failures: list
    double_cosets: int
    flags: list = field(default_factory=list)

    @property
    def passed(self):
        return self.irreducible and self.duality_ok and self.double_cosets == 2


def certify_lemma(n):
    """Irreducibility, Lambda^{n-1} = dual x det, and the double-coset count."""
    chi = character_of_standard(n)
    ip = chi.inner(chi)
    lam_top = exterior_power_character(chi, n)
    lam_sub = exterior_power_character(chi, n - 1)
    failures = []
    for lam in chi.values:
        # chi(g^-1) = chi(g): inverse has the same cycle type
        if lam_sub(lam) != chi(lam) * lam_top(lam):
            failures.append(type_label(lam))
    dc = double_coset_count(n)
    flags = []
    if n == 2:
        flags.append("n=2: A_3 is abelian, the 2-dim representation splits over "
                     "Q(zeta_3); <chi,chi> = %s and the stabilizer of 1 is trivial" % ip)
    return LemmaReport(n, ip, ip == 1, not failures, failures, dc, flags)


@dataclass
class DecompositionReport:
    n: int
    stable: bool
    line_fixed: bool
    spans: bool
    wedge_dims: list
    offending: list

    @property
    def passed(self):
        return self.stable and self.line_fixed and self.spans and all(a == b + c for a, b, c in self.wedge_dims)


def _to_basis(w):
    """Ambient sum-zero vector -> coordinates in e_i - e_N."""
    return list(w[:-1])


def decomposition_check(n):
    """W_{1,n} = W' + L, stable under the stabilizer G' of the first coordinate."""
    if not 3 <= n <= MAX_LETTERS - 1:
        raise ValueError("n out of range")
    N = n + 1
    F = QQ
    primed = []
    for j in range(1, N - 1):
        w = [Fraction(0)] * N
        w[j], w[N - 1] = Fraction(1), Fraction(-1)
        primed.append(w)
    line = [Fraction(n)] + [Fraction(-1)] * n
    G = alternating_group(N)
    Gp = stabilizer_of_first(G)
    offending = []
    line_fixed = True
    for g in Gp:
        for w in primed:
            gw = g.act(w)
            if gw[0] != 0 or sum(gw) != 0:
                offending.append(repr(g))
                break
        if g.act(line) != line:
            line_fixed = False
            offending.append(repr(g))
    basis = ExactMatrix(F, [_to_basis(w) for w in primed] + [_to_basis(line)])
    spans = basis.rank() == n
    wedge_dims = []
    for m in range(n + 1):
        full = basis.compound(m) if m else ExactMatrix.identity(F, 1)
        rank_full = full.rank()
        # wedges avoiding L span Lambda^m W', those containing L give Lambda^{m-1} W' ^ L
        prim = ExactMatrix(F, [_to_basis(w) for w in primed], n)
        r1 = prim.compound(m).rank() if 0 < m <= n - 1 else (1 if m == 0 else 0)
        r2 = prim.compound(m - 1).rank() if 1 < m <= n else (1 if m == 1 else 0)
        wedge_dims.append((rank_full, r1, r2))
    return DecompositionReport(n, not offending, line_fixed, spans, wedge_dims, sorted(set(offending)))
