"""Exact scalars: arbitrary-precision rationals and prime fields F_p.

A field context owns the element representation: rationals are
``fractions.Fraction`` (always in lowest terms, positive denominator),
prime-field elements are plain ints in ``[0, p)``.  All matrix code talks to
the context instead of overloading element types, so elements stay cheap and
hashable.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import FieldMismatchError, ParameterError

# Largest admitted modulus; bigger moduli are out of scope.
MAX_PRIME = 2**61


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for n < 3.3e24 (covers MAX_PRIME)."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Rationals:
    """The field Q.  Singleton; use the module-level ``QQ``."""

    characteristic = 0
    name = "QQ"

    def of(self, value):
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        raise ParameterError(f"cannot coerce {value!r} into QQ")

    zero = Fraction(0)
    one = Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in QQ")
        return 1 / Fraction(a)

    def div(self, a, b):
        return Fraction(a) / b

    def as_pair(self, a):
        """(numerator, denominator), lowest terms, denominator > 0."""
        a = self.of(a)
        return (a.numerator, a.denominator)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("sl2calc.QQ")


class PrimeField:
    """The field F_p for a machine-word prime p."""

    def __init__(self, p: int):
        if not isinstance(p, int) or not 2 <= p < MAX_PRIME:
            raise ParameterError(f"modulus must be an int in [2, 2^61), got {p!r}")
        if not is_prime(p):
            raise ParameterError(f"modulus {p} is not prime")
        self.p = p
        self.characteristic = p
        self.name = f"GF({p})"
        self.zero = 0
        self.one = 1 % p

    def of(self, value):
        if isinstance(value, int):
            return value % self.p
        if isinstance(value, Fraction):
            den = value.denominator % self.p
            if den == 0:
                raise FieldMismatchError(
                    f"denominator {value.denominator} not invertible mod {self.p}"
                )
            return value.numerator * pow(den, -1, self.p) % self.p
        raise ParameterError(f"cannot coerce {value!r} into {self.name}")

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError(f"inverse of zero in {self.name}")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    def as_pair(self, a):
        return (a % self.p, 1)

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("sl2calc.GF", self.p))


QQ = Rationals()


def field_of_characteristic(char: int):
    """char 0 -> QQ, prime p -> GF(p)."""
    if char == 0:
        return QQ
    return PrimeField(char)


def check_same_field(a, b):
    if a != b:
        raise FieldMismatchError(f"mixed field contexts: {a} vs {b}")
