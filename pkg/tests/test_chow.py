import random

import pytest

from chowobstruct.chow import (
    AmbientMismatchError,
    AmbientSpace,
    ChowClass,
    class_str,
    cup,
    divisor_multiplication_matrix,
    parse_class,
    reduce_mod2,
)
from chowobstruct.intlinalg import IntegerMatrix

P1xP3 = AmbientSpace((1, 3))
P4 = AmbientSpace((4,))


def random_class(rng, ambient, degree):
    basis = ambient.monomial_basis(degree)
    return ChowClass(ambient, degree, {e: rng.randint(-4, 4) for e in basis})


def test_monomial_basis_degree2():
    # x1*x2 before x2^2: powers of the first factor sort first
    assert P1xP3.monomial_basis(2) == ((1, 1), (0, 2))


def test_monomial_basis_degree0_and_top():
    assert P1xP3.monomial_basis(0) == ((0, 0),)
    assert P4.monomial_basis(3) == ((3,),)
    assert P1xP3.monomial_basis(5) == ()
    assert P1xP3.monomial_basis(4) == ((1, 3),)


def test_cup_monomials():
    xi = ChowClass.monomial(P1xP3, (1, 0))
    tau = ChowClass.monomial(P1xP3, (0, 1))
    assert cup(xi, tau) == ChowClass.monomial(P1xP3, (1, 1))
    # x1^2 = 0 in P^1 x P^3
    assert cup(xi, ChowClass.monomial(P1xP3, (1, 1))).is_zero()


def test_cup_divisor():
    z = parse_class(P1xP3, "3*x1 + 4*x2")
    tau = parse_class(P1xP3, "x2")
    assert cup(z, tau) == parse_class(P1xP3, "3*x1*x2 + 4*x2^2")


def test_divisor_matrix_bezout_shape():
    z = parse_class(P1xP3, "3*x1 + 4*x2")
    assert divisor_multiplication_matrix(P1xP3, z, 2) == IntegerMatrix([[4, 3], [0, 4]])
    assert divisor_multiplication_matrix(P1xP3, z, 1) == IntegerMatrix([[3], [4]])
    zero = ChowClass.zero(P1xP3, 1)
    assert divisor_multiplication_matrix(P1xP3, zero, 2) == IntegerMatrix.zeros(2, 2)


def test_divisor_matrix_agrees_with_cup():
    rng = random.Random(61)
    for ambient in (P1xP3, P4, AmbientSpace((2, 2))):
        z = random_class(rng, ambient, 1)
        for j in range(1, ambient.total_dim + 1):
            mat = divisor_multiplication_matrix(ambient, z, j)
            for _ in range(5):
                alpha = random_class(rng, ambient, j - 1)
                col = IntegerMatrix([[c] for c in alpha.coords()], cols=1)
                assert tuple(r[0] for r in (mat @ col).entries) == cup(z, alpha).coords()


def test_cup_ring_laws():
    rng = random.Random(67)
    for _ in range(40):
        da = rng.randint(0, 3)
        db = rng.randint(0, 3)
        dc = rng.randint(0, 2)
        a = random_class(rng, P1xP3, da)
        b = random_class(rng, P1xP3, db)
        c = random_class(rng, P1xP3, dc)
        assert cup(a, b) == cup(b, a)
        assert cup(cup(a, b), c) == cup(a, cup(b, c))
        b2 = random_class(rng, P1xP3, db)
        assert cup(a, b + b2) == cup(a, b) + cup(a, b2)
    unit = ChowClass.monomial(P1xP3, (0, 0))
    x = random_class(random.Random(1), P1xP3, 2)
    assert cup(unit, x) == x


def test_cup_vanishes_beyond_total_dimension():
    rng = random.Random(71)
    for _ in range(20):
        a = random_class(rng, P1xP3, 3)
        b = random_class(rng, P1xP3, 2)
        assert cup(a, b).is_zero()


def test_ambient_mismatch():
    with pytest.raises(AmbientMismatchError):
        cup(ChowClass.monomial(P1xP3, (1, 0)), ChowClass.monomial(P4, (1,)))


def test_parse_and_str_roundtrip():
    for text in ("3*x1 + 4*x2", "x1*x2^2", "0", "x2^3", "2*x1*x2^2 + x2^3"):
        c = parse_class(P1xP3, text)
        assert parse_class(P1xP3, class_str(c)) == c


def test_parse_aliases():
    assert parse_class(P1xP3, "ξ*τ") == ChowClass.monomial(P1xP3, (1, 1))
    assert parse_class(P1xP3, "xi*tau") == ChowClass.monomial(P1xP3, (1, 1))
    assert parse_class(P1xP3, "3*xi + 4*tau") == parse_class(P1xP3, "3*x1 + 4*x2")


def test_parse_truncated_monomials_vanish():
    c = parse_class(P1xP3, "x1^2")
    assert c.is_zero() and c.degree == 2


def test_parse_signs_and_degree_checks():
    c = parse_class(P1xP3, "x1*x2 - 2*x2^2")
    assert c.coefficient((0, 2)) == -2
    with pytest.raises(ValueError):
        parse_class(P1xP3, "x1 + x1*x2")
    with pytest.raises(ValueError):
        parse_class(P1xP3, "x1", degree=2)
    with pytest.raises(ValueError):
        parse_class(P1xP3, "x3")
    zero2 = parse_class(P1xP3, "0", degree=2)
    assert zero2.is_zero() and zero2.degree == 2


def test_reduce_mod2():
    c = parse_class(P1xP3, "3*x1 + 4*x2")
    assert reduce_mod2(c) == parse_class(P1xP3, "x1")


def test_class_validation():
    with pytest.raises(ValueError):
        ChowClass(P1xP3, 2, {(2, 0): 1})
    with pytest.raises(ValueError):
        ChowClass(P1xP3, 2, {(1, 0): 1})
    with pytest.raises(ValueError):
        AmbientSpace(())
    with pytest.raises(ValueError):
        AmbientSpace((0, 3))
