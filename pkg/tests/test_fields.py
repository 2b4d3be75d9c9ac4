from fractions import Fraction

import pytest

from sl2calc.errors import FieldMismatchError, ParameterError
from sl2calc.fields import QQ, PrimeField, field_of_characteristic, is_prime


def test_rational_ops():
    assert QQ.of(3) == Fraction(3)
    assert QQ.add(Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)
    assert QQ.inv(Fraction(-2, 3)) == Fraction(-3, 2)
    assert QQ.as_pair(Fraction(-4, 6)) == (-2, 3)


def test_prime_field_ops():
    f7 = PrimeField(7)
    assert f7.of(10) == 3
    assert f7.of(Fraction(1, 2)) == 4    # 2 * 4 = 8 = 1 mod 7
    assert f7.mul(3, 5) == 1
    assert f7.inv(3) == 5
    assert f7.as_pair(-1) == (6, 1)


def test_modulus_must_be_prime():
    with pytest.raises(ParameterError):
        PrimeField(6)
    with pytest.raises(ParameterError):
        PrimeField(1)
    assert is_prime(2) and is_prime(97) and not is_prime(91)


def test_fraction_not_liftable_mod_p():
    f3 = PrimeField(3)
    with pytest.raises(FieldMismatchError):
        f3.of(Fraction(1, 3))


def test_field_of_characteristic():
    assert field_of_characteristic(0) is QQ
    assert field_of_characteristic(5) == PrimeField(5)
    assert PrimeField(5) == PrimeField(5)
    assert PrimeField(5) != PrimeField(7)
