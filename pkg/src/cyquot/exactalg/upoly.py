"""Dense univariate polynomials over an exact field.

A polynomial is a list of raw field values, lowest degree first, with no
trailing zeros; the zero polynomial is ``[]``.  Every function takes the
field as its first argument so the same code runs over Q, F_p and F_p[t]/(m).
"""
import random


def trim(F, f):
    f = list(f)
    while f and F.is_zero(f[-1]):
        f.pop()
    return f


def deg(f):
    return len(f) - 1


def add(F, f, g):
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] = F.add(out[i], c)
    return trim(F, out)


def neg(F, f):
    return [F.neg(c) for c in f]


def sub(F, f, g):
    return add(F, f, neg(F, g))


def scale(F, f, c):
    if F.is_zero(c):
        return []
    return [F.mul(c, a) for a in f]


def mul(F, f, g):
    if not f or not g:
        return []
    out = [F.zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if F.is_zero(a):
            continue
        for j, b in enumerate(g):
            out[i + j] = F.add(out[i + j], F.mul(a, b))
    return trim(F, out)


def monic(F, f):
    if not f:
        return []
    return scale(F, f, F.inv(f[-1]))


def divmod_(F, f, g):
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(f)
    dg = len(g) - 1
    if len(r) - 1 < dg:
        return [], trim(F, r)
    inv_lc = F.inv(g[-1])
    q = [F.zero] * (len(r) - dg)
    for k in range(len(r) - 1, dg - 1, -1):
        c = r[k]
        if F.is_zero(c):
            continue
        c = F.mul(c, inv_lc)
        q[k - dg] = c
        for j in range(dg + 1):
            r[k - dg + j] = F.sub(r[k - dg + j], F.mul(c, g[j]))
    return trim(F, q), trim(F, r[:dg])


def rem(F, f, g):
    return divmod_(F, f, g)[1]


def gcd(F, f, g):
    f, g = trim(F, f), trim(F, g)
    while g:
        f, g = g, rem(F, f, g)
    return monic(F, f)


def xgcd(F, f, g):
    """Return (d, s, t) with s*f + t*g = d monic."""
    r0, r1 = trim(F, f), trim(F, g)
    s0, s1 = [F.one], []
    t0, t1 = [], [F.one]
    while r1:
        q, r = divmod_(F, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(F, s0, mul(F, q, s1))
        t0, t1 = t1, sub(F, t0, mul(F, q, t1))
    if not r0:
        return [], [], []
    c = F.inv(r0[-1])
    return scale(F, r0, c), scale(F, s0, c), scale(F, t0, c)


def mulmod(F, f, g, m):
    return rem(F, mul(F, f, g), m)


def powmod(F, f, e, m):
    result = [F.one]
    base = rem(F, f, m)
    while e:
        if e & 1:
            result = mulmod(F, result, base, m)
        e >>= 1
        if e:
            base = mulmod(F, base, base, m)
    return rem(F, result, m)


def derivative(F, f):
    return trim(F, [F.mul(F.from_int(i), c) for i, c in enumerate(f)][1:])


def evaluate(F, f, x):
    acc = F.zero
    for c in reversed(f):
        acc = F.add(F.mul(acc, x), c)
    return acc


def resultant(F, f, g):
    """Resultant of two univariate polynomials by the Euclidean algorithm."""
    f, g = trim(F, f), trim(F, g)
    if not f or not g:
        return F.zero
    df, dg = deg(f), deg(g)
    if df == 0:
        return F.pow(f[0], dg)
    if dg == 0:
        return F.pow(g[0], df)
    res = F.one
    while True:
        df, dg = deg(f), deg(g)
        if dg == 0:
            return F.mul(res, F.pow(g[0], df))
        r = rem(F, f, g)
        if not r:
            return F.zero
        if (df * dg) % 2:
            res = F.neg(res)
        res = F.mul(res, F.pow(g[-1], df - deg(r)))
        f, g = g, r


def squarefree_part(F, f):
    f = trim(F, f)
    if F.characteristic == 0:
        return monic(F, divmod_(F, f, gcd(F, f, derivative(F, f)))[0])
    out = [F.one]
    for g, _ in squarefree_decomposition(F, f):
        out = mul(F, out, g)
    return out


def _pth_root(F, f):
    """Coefficientwise p-th root of a polynomial in x^p over a finite field."""
    p = F.characteristic
    # a -> a^(q/p) inverts Frobenius on F_q.
    e = F.order // p
    return trim(F, [F.pow(f[i], e) for i in range(0, len(f), p)])


def squarefree_decomposition(F, f):
    """Yun's algorithm (with the p-th power step in positive characteristic).

    Returns [(g, m), ...] with g monic squarefree, pairwise coprime, and
    f = lc(f) * prod g**m.
    """
    f = monic(F, trim(F, f))
    if len(f) <= 1:
        return []
    out = []
    p = F.characteristic
    df = derivative(F, f)
    if not df:
        return [(g, m * p) for g, m in squarefree_decomposition(F, _pth_root(F, f))]
    c = gcd(F, f, df)
    w = divmod_(F, f, c)[0]
    i = 1
    while len(w) > 1:
        y = gcd(F, w, c)
        z = divmod_(F, w, y)[0]
        if len(z) > 1:
            out.append((z, i))
        i += 1
        w = y
        c = divmod_(F, c, y)[0]
        if p and len(w) <= 1 and len(c) > 1:
            # leftover part is a p-th power
            for g, m in squarefree_decomposition(F, _pth_root(F, c)):
                out.append((g, m * p))
            break
    return _merge(F, out)


def _merge(F, pairs):
    acc = {}
    for g, m in pairs:
        acc[m] = mul(F, acc.get(m, [F.one]), g)
    return [(acc[m], m) for m in sorted(acc)]


def distinct_degree(F, f):
    """Split a monic squarefree f over F_q into products of equal-degree factors."""
    q = F.order
    out = []
    x = [F.zero, F.one]
    h = x
    d = 0
    while deg(f) >= 2 * (d + 1):
        d += 1
        h = powmod(F, h, q, f)
        g = gcd(F, f, sub(F, h, x))
        if len(g) > 1:
            out.append((g, d))
            f = divmod_(F, f, g)[0]
            h = rem(F, h, f)
    if len(f) > 1:
        out.append((f, deg(f)))
    return out


def equal_degree(F, f, d, rng):
    """Cantor-Zassenhaus splitting of f into its monic irreducible factors of degree d."""
    n = deg(f)
    if n == d:
        return [monic(F, f)]
    q = F.order
    if q % 2 == 0:
        raise ValueError("characteristic 2 is not supported")
    e = (q ** d - 1) // 2
    while True:
        a = trim(F, [F.random(rng) for _ in range(n)])
        if len(a) <= 1:
            continue
        g = gcd(F, a, f)
        if 1 < len(g) < len(f):
            break
        b = sub(F, powmod(F, a, e, f), [F.one])
        g = gcd(F, b, f)
        if 1 < len(g) < len(f):
            break
    h = divmod_(F, f, g)[0]
    return equal_degree(F, g, d, rng) + equal_degree(F, h, d, rng)


def factor_finite(F, f, seed=0):
    """Factor over a finite field: returns (lc, [(monic irreducible, multiplicity), ...])."""
    f = trim(F, f)
    if not f:
        raise ValueError("cannot factor the zero polynomial")
    lc = f[-1]
    rng = random.Random(seed)
    out = []
    for g, m in squarefree_decomposition(F, f):
        for h, d in distinct_degree(F, g):
            for piece in equal_degree(F, h, d, rng):
                out.append((piece, m))
    out.sort(key=lambda t: (deg(t[0]), t[1], [F.sort_key(c) for c in t[0]]))
    return lc, out


def is_irreducible_finite(F, f):
    """Rabin's test over F_q."""
    f = monic(F, trim(F, f))
    n = deg(f)
    if n < 1:
        return False
    if n == 1:
        return True
    q = F.order
    x = [F.zero, F.one]
    if rem(F, sub(F, powmod(F, x, q ** n, f), x), f):
        return False
    for r in _prime_divisors(n):
        h = sub(F, powmod(F, x, q ** (n // r), f), x)
        if len(gcd(F, f, h)) > 1:
            return False
    return True


def roots_finite(F, f, seed=0):
    """Distinct roots in F_q of f (coefficients already in F)."""
    f = monic(F, trim(F, f))
    if len(f) <= 1:
        return []
    x = [F.zero, F.one]
    lin = gcd(F, f, sub(F, powmod(F, x, F.order, f), x))
    if len(lin) <= 1:
        return []
    rng = random.Random(seed)
    pieces = equal_degree(F, lin, 1, rng)
    roots = [F.neg(p[0]) for p in pieces]
    roots.sort(key=F.sort_key)
    return roots


def _prime_divisors(n):
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out
