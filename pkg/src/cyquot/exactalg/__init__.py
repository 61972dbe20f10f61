"""Exact fields, polynomials, linear algebra and elimination."""
from .fields import (QQ, GF, ExtensionField, FieldElement, FieldError, PrimeField,
                     RationalField, MAX_EXTENSION_DEGREE, is_prime)
from .poly import MPoly, PolyRing, parse_poly, parse_lines, format_poly
from .linalg import ExactMatrix
from .elim import (resultant, resultant_info, mgcd, squarefree_part, eliminate,
                   eliminate_to_univariate, solve, Orbit, EliminationError,
                   PositiveDimensional)
from .factor import factor_raw


def factor_univariate(f, seed=0):
    """Factor a univariate MPoly: returns (unit, [(irreducible monic MPoly, multiplicity)])."""
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    vs = f.variables()
    if len(vs) > 1:
        raise ValueError("factor_univariate needs a univariate polynomial")
    var = vs[0] if vs else 0
    lc, facs = factor_raw(f.field, f.to_upoly(var), seed=seed)
    return lc, [(MPoly.from_upoly(f.field, f.nvars, var, g), m) for g, m in facs]


def nullspace(M):
    return M.nullspace()
