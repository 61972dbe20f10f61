"""Exact coefficient fields.

Three kinds are supported: the rationals, prime fields F_p, and simple
extensions K = B[t]/(m) of either, with m monic and irreducible over B.
Field objects double as descriptors (``kind``, ``characteristic``,
``modulus``, ``degree``) and carry the arithmetic on *raw* values:

* Q: ``fractions.Fraction``
* F_p: ``int`` in ``[0, p)``
* B[t]/(m): tuple of base raw values of length ``degree``

Polynomials and matrices store raw values; :class:`FieldElement` wraps one
for convenient interactive use.
"""
import itertools
import math
from fractions import Fraction

from . import upoly

MAX_EXTENSION_DEGREE = 24


class FieldError(ValueError):
    pass


def is_prime(n):
    if n < 2:
        return False
    for d in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % d == 0:
            return n == d
    # deterministic Miller-Rabin for n < 3.3e24
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Field:
    kind = None
    characteristic = 0
    degree = 1
    modulus = None
    order = None

    def __call__(self, value):
        return FieldElement(self, self.coerce(value))

    @property
    def is_finite(self):
        return self.order is not None

    @property
    def prime_field(self):
        return self

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a):
        return a == self.zero

    def pow(self, a, e):
        if e < 0:
            a, e = self.inv(a), -e
        result = self.one
        while e:
            if e & 1:
                result = self.mul(result, a)
            e >>= 1
            if e:
                a = self.mul(a, a)
        return result

    def gen_poly(self, coeffs):
        """Raw univariate polynomial from arbitrary coercible coefficients."""
        return upoly.trim(self, [self.coerce(c) for c in coeffs])

    # -- finite field helpers ------------------------------------------------
    def is_square(self, a):
        if self.is_zero(a):
            return True
        if not self.is_finite:
            raise FieldError("square test only implemented for finite fields")
        return self.pow(a, (self.order - 1) // 2) == self.one

    def sqrt(self, a):
        """A square root of ``a`` (Tonelli-Shanks), or None when a is a non-square."""
        if self.is_zero(a):
            return self.zero
        if not self.is_square(a):
            return None
        q = self.order
        s, t = 0, q - 1
        while t % 2 == 0:
            s += 1
            t //= 2
        z = self._nonresidue()
        m, c = s, self.pow(z, t)
        r = self.pow(a, (t + 1) // 2)
        u = self.pow(a, t)
        while u != self.one:
            i, uu = 0, u
            while uu != self.one:
                uu = self.mul(uu, uu)
                i += 1
            b = self.pow(c, 1 << (m - i - 1))
            m, c = i, self.mul(b, b)
            r, u = self.mul(r, b), self.mul(u, c)
        return r

    def _nonresidue(self):
        cached = getattr(self, "_nonres", None)
        if cached is None:
            for cand in self.elements():
                if not self.is_zero(cand) and not self.is_square(cand):
                    cached = cand
                    break
            self._nonres = cached
        return cached

    def descriptor(self):
        return {
            "kind": self.kind,
            "characteristic": self.characteristic,
            "degree": self.degree,
            "modulus": None if self.modulus is None else [self.base.to_str(c) for c in self.modulus],
        }


class RationalField(Field):
    kind = "rationals"
    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, v):
        if isinstance(v, FieldElement):
            if v.field is not self:
                raise FieldError("element of another field")
            return v.value
        if isinstance(v, (int, Fraction)):
            return Fraction(v)
        if isinstance(v, str):
            return Fraction(v)
        raise FieldError("cannot coerce %r into Q" % (v,))

    def from_int(self, n):
        return Fraction(n)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def div(self, a, b):
        return a / b

    def pow(self, a, e):
        return a ** e

    def random(self, rng, bound=9):
        return Fraction(rng.randint(-bound, bound))

    def sort_key(self, a):
        return (a.denominator, abs(a.numerator), a.numerator < 0)

    def to_str(self, a):
        return str(a)

    def to_int_or_fraction(self, a):
        return a

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


QQ = RationalField()


class PrimeField(Field):
    kind = "prime-field"

    def __init__(self, p):
        if not is_prime(p):
            raise FieldError("%d is not prime" % p)
        self.characteristic = p
        self.order = p
        self.p = p
        self.zero = 0
        self.one = 1

    def coerce(self, v):
        if isinstance(v, FieldElement):
            if v.field != self:
                raise FieldError("element of another field")
            return v.value
        if isinstance(v, bool):
            return int(v)
        if isinstance(v, int):
            return v % self.p
        if isinstance(v, Fraction):
            if v.denominator % self.p == 0:
                raise FieldError("denominator divisible by p")
            return v.numerator * pow(v.denominator, -1, self.p) % self.p
        if isinstance(v, str):
            return self.coerce(Fraction(v))
        raise FieldError("cannot coerce %r into F_%d" % (v, self.p))

    def from_int(self, n):
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def pow(self, a, e):
        return pow(a, e, self.p)

    def random(self, rng):
        return rng.randrange(self.p)

    def elements(self):
        return range(self.p)

    def sort_key(self, a):
        return a

    def to_str(self, a):
        # symmetric representative
        return str(a - self.p if a > self.p // 2 else a)

    def signed(self, a):
        return a - self.p if a > self.p // 2 else a

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return "GF(%d)" % self.p


class ExtensionField(Field):
    """K = base[t]/(modulus); the class of t is ``gen``."""

    kind = "extension-field"

    def __init__(self, base, modulus, check=True, name="t"):
        if isinstance(base, ExtensionField):
            raise FieldError("only simple extensions of a prime field or Q are supported")
        m = upoly.trim(base, [base.coerce(c) for c in modulus])
        if len(m) < 2:
            raise FieldError("modulus must have positive degree")
        m = upoly.monic(base, m)
        if len(m) - 1 > MAX_EXTENSION_DEGREE:
            raise FieldError("extension degree %d exceeds cap %d" % (len(m) - 1, MAX_EXTENSION_DEGREE))
        self.base = base
        self.modulus = tuple(m)
        self.degree = len(m) - 1
        self.characteristic = base.characteristic
        self.order = None if base.order is None else base.order ** self.degree
        self.name = name
        if check and not _is_irreducible(base, list(m)):
            raise FieldError("modulus %s is not irreducible" % (m,))
        self.zero = tuple([base.zero] * self.degree)
        self.one = tuple([base.one] + [base.zero] * (self.degree - 1))
        self.gen = self._pad([base.zero, base.one]) if self.degree > 1 else self._reduce([base.zero, base.one])

    @property
    def prime_field(self):
        return self.base

    def _pad(self, f):
        f = list(f) + [self.base.zero] * (self.degree - len(f))
        return tuple(f)

    def _reduce(self, f):
        B = self.base
        m = self.modulus
        d = self.degree
        f = list(f)
        for k in range(len(f) - 1, d - 1, -1):
            c = f[k]
            if B.is_zero(c):
                continue
            for j in range(d):
                f[k - d + j] = B.sub(f[k - d + j], B.mul(c, m[j]))
            f[k] = B.zero
        return self._pad(f[:d])

    def coerce(self, v):
        if isinstance(v, FieldElement):
            if v.field == self:
                return v.value
            if v.field == self.base:
                return self.from_base(v.value)
            raise FieldError("element of another field")
        if isinstance(v, tuple) and len(v) == self.degree:
            return tuple(self.base.coerce(c) for c in v)
        return self.from_base(self.base.coerce(v))

    def from_base(self, b):
        return tuple([b] + [self.base.zero] * (self.degree - 1))

    def from_int(self, n):
        return self.from_base(self.base.from_int(n))

    def add(self, a, b):
        B = self.base
        return tuple(B.add(x, y) for x, y in zip(a, b))

    def sub(self, a, b):
        B = self.base
        return tuple(B.sub(x, y) for x, y in zip(a, b))

    def neg(self, a):
        B = self.base
        return tuple(B.neg(x) for x in a)

    def mul(self, a, b):
        B = self.base
        d = self.degree
        if isinstance(B, PrimeField):
            p = B.p
            prod = [0] * (2 * d - 1)
            for i, x in enumerate(a):
                if x:
                    for j, y in enumerate(b):
                        prod[i + j] += x * y
            m = self.modulus
            for k in range(2 * d - 2, d - 1, -1):
                c = prod[k] % p
                if c:
                    for j in range(d):
                        prod[k - d + j] -= c * m[j]
            return tuple(c % p for c in prod[:d])
        prod = [B.zero] * (2 * d - 1)
        for i, x in enumerate(a):
            if B.is_zero(x):
                continue
            for j, y in enumerate(b):
                prod[i + j] = B.add(prod[i + j], B.mul(x, y))
        return self._reduce(prod)

    def inv(self, a):
        B = self.base
        f = upoly.trim(B, list(a))
        if not f:
            raise ZeroDivisionError("inverse of zero")
        g, s, _ = upoly.xgcd(B, f, list(self.modulus))
        if len(g) != 1:
            raise FieldError("modulus not irreducible (zero divisor found)")
        return self._pad(s)

    def random(self, rng):
        return tuple(self.base.random(rng) for _ in range(self.degree))

    def elements(self):
        if self.order is None:
            raise FieldError("infinite field")
        return itertools.product(range(self.base.p), repeat=self.degree)

    def sort_key(self, a):
        return tuple(self.base.sort_key(c) for c in reversed(a))

    def to_str(self, a):
        terms = []
        for i, c in enumerate(a):
            if self.base.is_zero(c):
                continue
            cs = self.base.to_str(c)
            if i == 0:
                terms.append(cs)
            else:
                mon = self.name if i == 1 else "%s^%d" % (self.name, i)
                terms.append(mon if cs == "1" else "%s*%s" % (cs, mon))
        if not terms:
            return "0"
        if len(terms) == 1:
            return terms[0]
        return "(" + " + ".join(terms) + ")"

    def in_base(self, a):
        """The base-field value of ``a`` if it lies in the base field, else None."""
        if all(self.base.is_zero(c) for c in a[1:]):
            return a[0]
        return None

    def __eq__(self, other):
        return (isinstance(other, ExtensionField) and other.base == self.base
                and other.modulus == self.modulus)

    def __hash__(self):
        return hash(("ext", self.base, self.modulus))

    def __repr__(self):
        return "%r[%s]/(%s)" % (self.base, self.name, _poly_str(self.base, self.modulus, self.name))


def _poly_str(B, coeffs, name):
    parts = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if B.is_zero(c):
            continue
        cs = B.to_str(c)
        mon = "" if i == 0 else (name if i == 1 else "%s^%d" % (name, i))
        if not mon:
            parts.append(cs)
        elif cs == "1":
            parts.append(mon)
        else:
            parts.append("%s*%s" % (cs, mon))
    return " + ".join(parts) or "0"


def _is_irreducible(base, m):
    if base.is_finite:
        return upoly.is_irreducible_finite(base, m)
    from .factor import factor_rational
    _, facs = factor_rational(m)
    return len(facs) == 1 and facs[0][1] == 1


def GF(p, k=1):
    """F_p, or F_{p^k} presented by the least monic irreducible of degree k."""
    base = PrimeField(p)
    if k == 1:
        return base
    return ExtensionField(base, conway_like_modulus(p, k), check=False)


def conway_like_modulus(p, k):
    """Lexicographically least monic irreducible polynomial of degree k over F_p."""
    if k > MAX_EXTENSION_DEGREE:
        raise FieldError("extension degree %d exceeds cap %d" % (k, MAX_EXTENSION_DEGREE))
    base = PrimeField(p)
    for tail in itertools.product(range(p), repeat=k):
        # tail = (c_{k-1}, ..., c_0) so the search is lexicographic from the top
        m = list(reversed(tail)) + [1]
        if m[0] == 0:
            continue
        if upoly.is_irreducible_finite(base, m):
            return tuple(m)
    raise FieldError("no irreducible polynomial found")  # unreachable


class FieldElement:
    """An immutable element of a :class:`Field`, with operator overloading."""

    __slots__ = ("field", "value")

    def __init__(self, field, value):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, *_):
        raise AttributeError("FieldElement is immutable")

    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldError("mixed fields: %r and %r" % (self.field, other.field))
            return other.value
        return self.field.coerce(other)

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return FieldElement(self.field, self.field.sub(self._other(other), self.value))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.value, self._other(other)))

    def __rtruediv__(self, other):
        return FieldElement(self.field, self.field.div(self._other(other), self.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, e):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def inverse(self):
        return FieldElement(self.field, self.field.inv(self.value))

    def is_zero(self):
        return self.field.is_zero(self.value)

    def __eq__(self, other):
        try:
            return self.value == self._other(other)
        except FieldError:
            return False

    def __hash__(self):
        return hash((self.field, self.value))

    def __repr__(self):
        return self.field.to_str(self.value)


def lcm_degrees(degrees):
    out = 1
    for d in degrees:
        out = out * d // math.gcd(out, d)
    return out
