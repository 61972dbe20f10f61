from fractions import Fraction

import pytest

from cyquot.exactalg import (GF, QQ, ExactMatrix, ExtensionField, FieldError, PolyRing,
                             PositiveDimensional, eliminate_to_univariate, factor_univariate,
                             format_poly, is_prime, parse_poly, resultant, solve, squarefree_part)
from cyquot.exactalg import upoly
from cyquot.exactalg.elim import count_points, mgcd


def P(text, K=QQ, n=2):
    return parse_poly(text, K, n)


# -- fields ----------------------------------------------------------------------

def test_prime_field_arithmetic():
    F = GF(7)
    assert F.mul(F.coerce(3), F.inv(F.coerce(3))) == F.one
    assert F.coerce(-1) == F.coerce(6)
    assert F.pow(F.coerce(3), 6) == F.one


def test_rational_field_arithmetic():
    assert QQ.div(QQ.coerce(1), QQ.coerce(3)) == Fraction(1, 3)
    with pytest.raises(ZeroDivisionError):
        QQ.inv(QQ.zero)


def test_is_prime():
    assert [p for p in range(30) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert is_prime(10007)
    with pytest.raises(FieldError):
        GF(4)


def test_extension_field_rejects_reducible_modulus():
    F = GF(5)
    with pytest.raises(FieldError):
        ExtensionField(F, [4, 0, 1])        # x^2 - 1
    K = ExtensionField(F, [2, 0, 1])        # x^2 + 2, irreducible since -2 is a non-square mod 5
    assert K.order == 25
    t = K.gen
    assert K.mul(t, t) == K.coerce(-2)


def test_gf_power_field():
    K = GF(13, 2)
    assert K.order == 169
    x = K.gen
    assert K.pow(x, 168) == K.one


# -- polynomials -----------------------------------------------------------------

def test_parse_format_roundtrip():
    f = P("3*x0^2*x1 - 1/2*x1 + 7", QQ, 2)
    assert parse_poly(format_poly(f), QQ, 2) == f
    assert format_poly(P("x0^2 - 1", QQ, 1)) == "x0^2 - 1"


def test_poly_ring_arithmetic():
    x, y = PolyRing(QQ, 2).gens()
    f = (x + y) ** 2
    assert f == x ** 2 + 2 * x * y + y ** 2
    assert f.diff(0) == 2 * x + 2 * y
    q, r = f.divmod(x + y)
    assert r.is_zero() and q == x + y


# -- resultants ------------------------------------------------------------------

def test_resultant_examples():
    # hand-computed Sylvester determinants: Res(f, g) = prod of g over the roots of f
    x, t = PolyRing(QQ, 2).gens()
    assert resultant(x ** 2 - t, x - 1, 0) == 1 - t
    assert resultant(x, x, 0).is_zero()
    X, Y = PolyRing(QQ, 2).gens()
    assert resultant(Y ** 2 - X ** 3, 2 * Y, 1) == -4 * X ** 3


def test_resultant_vanishes_on_common_factor():
    x, y = PolyRing(GF(101), 2).gens()
    f = (x - y) * (x + 1)
    g = (x - y) * (x + y + 3)
    assert resultant(f, g, 0).is_zero()
    assert mgcd(f, g).total_degree() == 1


# -- factoring -------------------------------------------------------------------

def test_factor_finite_examples():
    unit, facs = factor_univariate(P("x0^2 - 1", GF(5), 1))
    assert sorted(format_poly(g) for g, _ in facs) == ["x0 + 1", "x0 - 1"]
    unit, facs = factor_univariate(P("x0^2 + 1", GF(7), 1))
    assert len(facs) == 1 and facs[0][0].total_degree() == 2
    unit, facs = factor_univariate(P("3*x0^4 + 12*x0", GF(13), 1))
    assert unit == 3
    assert sorted(format_poly(g) for g, _ in facs) == ["x0", "x0^3 + 4"]


def test_factor_rational():
    unit, facs = factor_univariate(P("2*x0^3 - 2*x0", QQ, 1))
    assert unit == 2
    assert sorted(g.total_degree() for g, _ in facs) == [1, 1, 1]
    with pytest.raises(ValueError):
        factor_univariate(P("0", QQ, 1))


def test_roots_finite():
    F = GF(13)
    roots = upoly.roots_finite(F, [F.coerce(c) for c in (-1, 0, 0, 1)])   # x^3 - 1
    assert sorted(roots) == [1, 3, 9]


def test_squarefree_part():
    f = P("(x0 - 1)^2*(x0 + 2)", QQ, 1)
    assert squarefree_part(f).monic() == P("(x0 - 1)*(x0 + 2)", QQ, 1)


# -- linear algebra --------------------------------------------------------------

def test_nullspace_examples():
    F = GF(3)
    assert ExactMatrix.identity(F, 2).nullspace() == []
    assert len(ExactMatrix.zeros(F, 2, 2).nullspace()) == 2
    ns = ExactMatrix.from_values(F, [[1, 2], [1, 2]]).nullspace()
    assert len(ns) == 1
    v = ns[0]
    assert F.add(v[0], F.mul(F.coerce(2), v[1])) == F.zero


def test_det_and_inverse():
    M = ExactMatrix.from_values(QQ, [[2, 1], [7, 4]])
    assert M.det() == 1
    assert M * M.inverse() == ExactMatrix.identity(QQ, 2)


# -- elimination and solving -----------------------------------------------------

def test_eliminate_to_univariate_examples():
    x, y = PolyRing(QQ, 2).gens()
    assert eliminate_to_univariate([x + y, x - y], 0).poly == x
    assert eliminate_to_univariate([y ** 2 - x ** 3 - 1, y], 0).poly == x ** 3 + 1


def test_solve_counts_with_extensions():
    # x^2 + 1 = 0 has no roots over F_7 but two over F_49
    x, y = PolyRing(GF(7), 2).gens()
    orbits = solve([x ** 2 + 1, y - x])
    assert count_points(orbits) == 2
    assert len(orbits) == 1 and orbits[0].degree == 2
    for o in orbits:
        assert o.field.is_zero(o.evaluate(y - x))


def test_solve_positive_dimensional():
    x, y = PolyRing(QQ, 2).gens()
    with pytest.raises(PositiveDimensional):
        solve([x * y])
