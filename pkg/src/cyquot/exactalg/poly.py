"""Sparse multivariate polynomials with exact coefficients.

Terms are stored as ``{exponent tuple: raw coefficient}`` with no zero
coefficients.  The global monomial order is graded lexicographic with
x0 > x1 > ...; it fixes both the leading term used in exact division and
the byte-exact text serialization::

    x0^2*x1 - 3/2*x1 + 1
"""
import re
from fractions import Fraction

from . import upoly
from .fields import FieldElement, PrimeField, QQ, RationalField


def grlex_key(e):
    return (sum(e), e)


class MPoly:
    __slots__ = ("field", "nvars", "terms")

    def __init__(self, field, nvars, terms=None):
        self.field = field
        self.nvars = nvars
        self.terms = {} if terms is None else terms

    # -- constructors --------------------------------------------------------
    @classmethod
    def zero(cls, field, nvars):
        return cls(field, nvars, {})

    @classmethod
    def const(cls, field, nvars, c):
        c = field.coerce(c)
        if field.is_zero(c):
            return cls(field, nvars, {})
        return cls(field, nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, field, nvars, i, power=1):
        e = [0] * nvars
        e[i] = power
        return cls(field, nvars, {tuple(e): field.one})

    @classmethod
    def from_dict(cls, field, nvars, d):
        terms = {}
        for e, c in d.items():
            c = field.coerce(c)
            if not field.is_zero(c):
                terms[tuple(e)] = c
        return cls(field, nvars, terms)

    @classmethod
    def from_upoly(cls, field, nvars, var, coeffs):
        terms = {}
        for k, c in enumerate(coeffs):
            if not field.is_zero(c):
                e = [0] * nvars
                e[var] = k
                terms[tuple(e)] = c
        return cls(field, nvars, terms)

    def _new(self, terms):
        return MPoly(self.field, self.nvars, terms)

    def _lift(self, other):
        if isinstance(other, MPoly):
            if other.nvars != self.nvars or other.field != self.field:
                raise ValueError("polynomials from different rings")
            return other
        return MPoly.const(self.field, self.nvars, other)

    # -- predicates / accessors ---------------------------------------------
    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and (0,) * self.nvars in self.terms)

    def constant_value(self):
        return self.terms.get((0,) * self.nvars, self.field.zero)

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), self.field.zero)

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree(self, var=None):
        if var is None:
            return self.total_degree()
        if not self.terms:
            return -1
        return max(e[var] for e in self.terms)

    def min_degree(self, vars_):
        """Least total degree in the variables ``vars_`` over all terms (vanishing order)."""
        if not self.terms:
            return float("inf")
        return min(sum(e[v] for v in vars_) for e in self.terms)

    def variables(self):
        present = set()
        for e in self.terms:
            for i, k in enumerate(e):
                if k:
                    present.add(i)
        return sorted(present)

    def is_homogeneous(self, vars_=None):
        vars_ = range(self.nvars) if vars_ is None else vars_
        degs = {sum(e[v] for v in vars_) for e in self.terms}
        return len(degs) <= 1

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def leading_term(self):
        e = max(self.terms, key=grlex_key)
        return e, self.terms[e]

    def leading_coefficient(self):
        return self.leading_term()[1]

    def monic(self):
        if not self.terms:
            return self
        return self.scale(self.field.inv(self.leading_coefficient()))

    # -- arithmetic ----------------------------------------------------------
    def __add__(self, other):
        other = self._lift(other)
        F = self.field
        out = dict(self.terms)
        for e, c in other.terms.items():
            if e in out:
                s = F.add(out[e], c)
                if F.is_zero(s):
                    del out[e]
                else:
                    out[e] = s
            else:
                out[e] = c
        return self._new(out)

    __radd__ = __add__

    def __neg__(self):
        F = self.field
        return self._new({e: F.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def scale(self, c):
        F = self.field
        if F.is_zero(c):
            return self._new({})
        return self._new({e: F.mul(c, a) for e, a in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, MPoly):
            return self.scale(self.field.coerce(other))
        other = self._lift(other)
        F = self.field
        if not self.terms or not other.terms:
            return self._new({})
        if len(other.terms) == 1:
            (e2, c2), = other.terms.items()
            return self._new({tuple(a + b for a, b in zip(e, e2)): F.mul(c, c2)
                              for e, c in self.terms.items()})
        acc = {}
        fast = type(F) is PrimeField or type(F) is RationalField
        items2 = list(other.terms.items())
        for e1, c1 in self.terms.items():
            for e2, c2 in items2:
                e = tuple(a + b for a, b in zip(e1, e2))
                if fast:
                    acc[e] = acc.get(e, 0) + c1 * c2
                elif e in acc:
                    acc[e] = F.add(acc[e], F.mul(c1, c2))
                else:
                    acc[e] = F.mul(c1, c2)
        if type(F) is PrimeField:
            p = F.p
            return self._new({e: c % p for e, c in acc.items() if c % p})
        return self._new({e: c for e, c in acc.items() if not F.is_zero(c)})

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        result = MPoly.const(self.field, self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self.nvars == other.nvars and self.field == other.field and self.terms == other.terms
        try:
            return self.terms == self._lift(other).terms
        except Exception:
            return False

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # -- calculus & evaluation -----------------------------------------------
    def diff(self, var):
        F = self.field
        out = {}
        for e, c in self.terms.items():
            k = e[var]
            if k == 0:
                continue
            c2 = F.mul(F.from_int(k), c)
            if F.is_zero(c2):
                continue
            e2 = list(e)
            e2[var] -= 1
            out[tuple(e2)] = c2
        return self._new(out)

    def evaluate(self, point, field=None):
        """Value at ``point`` (raw values of ``field``, default the coefficient field)."""
        K = field or self.field
        embed = K.coerce if K != self.field else (lambda c: c)
        powers = [dict() for _ in range(self.nvars)]

        def pw(i, k):
            cache = powers[i]
            if k not in cache:
                cache[k] = K.pow(point[i], k)
            return cache[k]

        acc = K.zero
        for e, c in self.terms.items():
            term = embed(c)
            for i, k in enumerate(e):
                if k:
                    term = K.mul(term, pw(i, k))
            acc = K.add(acc, term)
        return acc

    def change_field(self, K):
        """Image under the coefficient embedding into ``K`` (e.g. F_p into F_p^k)."""
        if K == self.field:
            return self
        terms = {}
        for e, c in self.terms.items():
            c2 = K.coerce(FieldElement(self.field, c)) if not isinstance(c, FieldElement) else K.coerce(c)
            if not K.is_zero(c2):
                terms[e] = c2
        return MPoly(K, self.nvars, terms)

    def compose(self, images):
        """Substitute ``images[i]`` (MPolys in a common ring) for variable i."""
        if len(images) != self.nvars:
            raise ValueError("need one image per variable")
        ring_field = images[0].field
        n2 = images[0].nvars
        embed = ring_field.coerce if ring_field != self.field else (lambda c: c)
        cache = [dict() for _ in range(self.nvars)]

        def pw(i, k):
            if k not in cache[i]:
                cache[i][k] = images[i] ** k
            return cache[i][k]

        total = MPoly.zero(ring_field, n2)
        # group by grlex so output is deterministic
        for e, c in self.sorted_terms():
            term = MPoly.const(ring_field, n2, embed(FieldElement(self.field, c)) if ring_field != self.field else c)
            for i, k in enumerate(e):
                if k:
                    term = term * pw(i, k)
            total = total + term
        return total

    def subs(self, mapping):
        """Substitute polynomials (or constants) for some variables."""
        images = []
        for i in range(self.nvars):
            if i in mapping:
                images.append(self._lift(mapping[i]))
            else:
                images.append(MPoly.var(self.field, self.nvars, i))
        return self.compose(images)

    def specialize(self, var, value):
        """Set variable ``var`` to the raw value ``value`` (exponent dropped to 0)."""
        F = self.field
        out = {}
        for e, c in self.terms.items():
            k = e[var]
            c2 = F.mul(c, F.pow(value, k)) if k else c
            if F.is_zero(c2):
                continue
            e2 = e[:var] + (0,) + e[var + 1:]
            if e2 in out:
                s = F.add(out[e2], c2)
                if F.is_zero(s):
                    del out[e2]
                else:
                    out[e2] = s
            else:
                out[e2] = c2
        return self._new(out)

    # -- structure in one variable -------------------------------------------
    def coeffs_in(self, var):
        """Dict k -> coefficient of var^k (an MPoly free of var)."""
        out = {}
        for e, c in self.terms.items():
            k = e[var]
            e2 = e[:var] + (0,) + e[var + 1:]
            out.setdefault(k, {})[e2] = c
        return {k: self._new(t) for k, t in out.items()}

    def coeff_list(self, var):
        d = self.degree(var)
        cs = self.coeffs_in(var)
        zero = self._new({})
        return [cs.get(k, zero) for k in range(d + 1)]

    def lead_coeff_in(self, var):
        return self.coeffs_in(var)[self.degree(var)]

    def to_upoly(self, var=None):
        """Raw coefficient list of a univariate polynomial (in ``var``)."""
        vs = self.variables()
        if var is None:
            if len(vs) > 1:
                raise ValueError("polynomial is not univariate")
            var = vs[0] if vs else 0
        elif any(v != var for v in vs):
            raise ValueError("polynomial involves variables other than x%d" % var)
        d = max(self.degree(var), -1)
        out = [self.field.zero] * (d + 1)
        for e, c in self.terms.items():
            out[e[var]] = c
        return out

    # -- division ------------------------------------------------------------
    def divmod(self, g):
        """Multivariate division by a single divisor (grlex leading terms)."""
        g = self._lift(g)
        if g.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        F = self.field
        ge, gc = g.leading_term()
        inv = F.inv(gc)
        r = dict(self.terms)
        q = {}
        rem = {}
        gitems = list(g.terms.items())
        while r:
            e = max(r, key=grlex_key)
            c = r.pop(e)
            if all(a >= b for a, b in zip(e, ge)):
                qe = tuple(a - b for a, b in zip(e, ge))
                qc = F.mul(c, inv)
                q[qe] = F.add(q.get(qe, F.zero), qc)
                for e2, c2 in gitems:
                    if e2 == ge:
                        continue
                    te = tuple(a + b for a, b in zip(qe, e2))
                    v = F.sub(r.get(te, F.zero), F.mul(qc, c2))
                    if F.is_zero(v):
                        r.pop(te, None)
                    else:
                        r[te] = v
            else:
                rem[e] = c
        q = {e: c for e, c in q.items() if not F.is_zero(c)}
        return self._new(q), self._new(rem)

    def exact_div(self, g):
        q, r = self.divmod(g)
        if not r.is_zero():
            raise ArithmeticError("division is not exact")
        return q

    def divides(self, g):
        """True when self divides g."""
        return g.divmod(self)[1].is_zero()

    # -- text ---------------------------------------------------------------
    def to_str(self, names=None):
        return format_poly(self, names)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return "MPoly(%s)" % format_poly(self)


# ---------------------------------------------------------------------------
# text format
# ---------------------------------------------------------------------------

def _coeff_parts(F, c):
    if isinstance(F, RationalField):
        return c < 0, str(abs(c))
    if isinstance(F, PrimeField):
        s = F.signed(c)
        return s < 0, str(abs(s))
    return False, F.to_str(c)


def format_poly(f, names=None):
    names = names or ["x%d" % i for i in range(f.nvars)]
    if f.is_zero():
        return "0"
    out = []
    for idx, (e, c) in enumerate(f.sorted_terms()):
        negative, mag = _coeff_parts(f.field, c)
        mono = "*".join(names[i] if k == 1 else "%s^%d" % (names[i], k) for i, k in enumerate(e) if k)
        if not mono:
            body = mag
        elif mag == "1":
            body = mono
        else:
            body = "%s*%s" % (mag, mono)
        if idx == 0:
            out.append(("-" if negative else "") + body)
        else:
            out.append((" - " if negative else " + ") + body)
    return "".join(out)


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


class ParseError(ValueError):
    pass


def parse_poly(text, field=QQ, nvars=None, names=None):
    """Parse the plain-text format (variables x0..x{n-1}, or custom ``names``)."""
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            break
        pos = m.end()
        if m.group(1) is not None:
            tokens.append(("num", int(m.group(1))))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2)))
        else:
            tokens.append(("op", m.group(3)))
    if names is None:
        found = [int(t[1][1:]) for t in tokens if t[0] == "name" and re.fullmatch(r"x\d+", t[1])]
        bad = [t[1] for t in tokens if t[0] == "name" and not re.fullmatch(r"x\d+", t[1])]
        if bad:
            raise ParseError("unknown variable %r" % bad[0])
        if nvars is None:
            nvars = (max(found) + 1) if found else 1
        index = {"x%d" % i: i for i in range(nvars)}
    else:
        nvars = len(names) if nvars is None else nvars
        index = {n: i for i, n in enumerate(names)}
    state = {"i": 0}

    def peek():
        return tokens[state["i"]] if state["i"] < len(tokens) else (None, None)

    def take():
        t = peek()
        state["i"] += 1
        return t

    def expr():
        node = term()
        while peek() in (("op", "+"), ("op", "-")):
            op = take()[1]
            rhs = term()
            node = node + rhs if op == "+" else node - rhs
        return node

    def term():
        node = factor()
        while peek() == ("op", "*"):
            take()
            node = node * factor()
        return node

    def factor():
        if peek() == ("op", "-"):
            take()
            return -factor()
        if peek() == ("op", "+"):
            take()
            return factor()
        base = atom()
        if peek() == ("op", "^"):
            take()
            kind, val = take()
            if kind != "num":
                raise ParseError("exponent must be a nonnegative integer")
            base = base ** val
        return base

    def atom():
        kind, val = take()
        if kind == "num":
            if peek() == ("op", "/"):
                take()
                k2, den = take()
                if k2 != "num":
                    raise ParseError("bad rational literal")
                return MPoly.const(field, nvars, Fraction(val, den))
            return MPoly.const(field, nvars, val)
        if kind == "name":
            if val not in index:
                raise ParseError("unknown variable %r" % val)
            return MPoly.var(field, nvars, index[val])
        if (kind, val) == ("op", "("):
            node = expr()
            if take() != ("op", ")"):
                raise ParseError("unbalanced parentheses")
            return node
        raise ParseError("unexpected token %r" % (val,))

    result = expr()
    if state["i"] != len(tokens):
        raise ParseError("trailing input at token %d" % state["i"])
    return result


def parse_lines(text, field=QQ, nvars=None):
    """One polynomial per non-empty, non-comment line."""
    out = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            out.append(parse_poly(line, field, nvars))
    if out and nvars is None:
        n = max(p.nvars for p in out)
        out = [p if p.nvars == n else _widen(p, n) for p in out]
    return out


def _widen(p, n):
    return MPoly(p.field, n, {e + (0,) * (n - p.nvars): c for e, c in p.terms.items()})


class PolyRing:
    """Convenience factory: ``R = PolyRing(GF(101), 3); x, y, z = R.gens()``."""

    def __init__(self, field, nvars):
        self.field = field
        self.nvars = nvars

    def gens(self):
        return [MPoly.var(self.field, self.nvars, i) for i in range(self.nvars)]

    def __call__(self, value):
        if isinstance(value, str):
            return parse_poly(value, self.field, self.nvars)
        return MPoly.const(self.field, self.nvars, value)

    def zero(self):
        return MPoly.zero(self.field, self.nvars)

    def one(self):
        return MPoly.const(self.field, self.nvars, 1)

    def from_upoly(self, var, coeffs):
        return MPoly.from_upoly(self.field, self.nvars, var, coeffs)

    def __repr__(self):
        return "PolyRing(%r, %d)" % (self.field, self.nvars)


def upoly_of(f, var):
    return upoly.trim(f.field, f.to_upoly(var))
