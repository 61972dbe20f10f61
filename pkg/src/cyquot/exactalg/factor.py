"""Univariate factorization into irreducibles.

Finite fields use squarefree decomposition, distinct-degree splitting and
Cantor-Zassenhaus (see :mod:`upoly`).  Over Q the irreducible factors come
from sympy; nothing in the verification suite depends on Q-factorization
beyond splitting eliminants into Galois orbits.
"""
from fractions import Fraction

from . import upoly
from .fields import QQ


def factor_rational(f):
    """Factor a raw Q-polynomial (list of Fractions, low degree first).

    Returns (lc, [(monic irreducible, multiplicity), ...]).
    """
    import sympy

    f = upoly.trim(QQ, f)
    if not f:
        raise ValueError("cannot factor the zero polynomial")
    x = sympy.Symbol("x")
    expr = sympy.Poly(list(reversed([sympy.Rational(c.numerator, c.denominator) for c in f])), x, domain="QQ")
    _, facs = expr.factor_list()
    out = []
    for g, m in facs:
        coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(g.all_coeffs())]
        out.append((upoly.monic(QQ, coeffs), m))
    out.sort(key=lambda t: (len(t[0]), t[1], [QQ.sort_key(c) for c in t[0]]))
    return f[-1], out


def factor_raw(F, f, seed=0):
    if F.is_finite:
        return upoly.factor_finite(F, f, seed=seed)
    if F == QQ:
        return factor_rational(f)
    raise ValueError("factorization over %r is not supported" % (F,))
