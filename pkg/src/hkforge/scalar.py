"""Exact arithmetic: prime fields F_p and arbitrary-precision rationals.

Field elements are plain integers in [0, p); the `PrimeField` object owns
the modulus and does all reductions.  `FpElement` wraps a value together
with its field for code that wants operator syntax and cross-field safety
checks.  Rationals are `fractions.Fraction`, which already keeps the
canonical reduced form with a positive denominator.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DivisionByZero, PreconditionViolated, RingMismatch

MAX_MODULUS = 2**31


def is_prime(n: int) -> bool:
    """Trial-division primality test; exact for every n we accept."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class PrimeField:
    """The field F_p.  Member values are ints reduced into [0, p)."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        if not isinstance(p, int) or not is_prime(p):
            raise PreconditionViolated(f"modulus {p!r} is not prime")
        if p >= MAX_MODULUS:
            raise PreconditionViolated(f"modulus {p} exceeds 2^31")
        self.p = p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and self.p == other.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"F_{self.p}"

    def normalize(self, a: int) -> int:
        return a % self.p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def neg(self, a: int) -> int:
        return -a % self.p

    def inv(self, a: int) -> int:
        """Multiplicative inverse by the extended Euclidean algorithm."""
        a %= self.p
        if a == 0:
            raise DivisionByZero(f"inverse of 0 in F_{self.p}")
        # Invariant: r = s*a (mod p) for both tracked pairs.
        r0, r1 = self.p, a
        s0, s1 = 0, 1
        while r1:
            q = r0 // r1
            r0, r1 = r1, r0 - q * r1
            s0, s1 = s1, s0 - q * s1
        return s0 % self.p

    def pow(self, a: int, e: int) -> int:
        """a**e by square-and-multiply; negative e inverts first."""
        a %= self.p
        if e < 0:
            return self.pow(self.inv(a), -e)
        result = 1
        base = a
        while e:
            if e & 1:
                result = result * base % self.p
            base = base * base % self.p
            e >>= 1
        return result

    def element(self, value: int) -> "FpElement":
        return FpElement(self, value)


class FpElement:
    """A value of F_p bound to its field; arithmetic rejects mixed moduli."""

    __slots__ = ("field", "value")

    def __init__(self, field: PrimeField, value: int):
        self.field = field
        self.value = value % field.p

    def _coerce(self, other) -> int:
        if isinstance(other, FpElement):
            if other.field.p != self.field.p:
                raise RingMismatch(
                    f"mixed moduli {self.field.p} and {other.field.p}"
                )
            return other.value
        if isinstance(other, int):
            return other % self.field.p
        return NotImplemented

    def __add__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return FpElement(self.field, self.value + b)

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return FpElement(self.field, self.value - b)

    def __rsub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return FpElement(self.field, b - self.value)

    def __mul__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return FpElement(self.field, self.value * b)

    __rmul__ = __mul__

    def __neg__(self):
        return FpElement(self.field, -self.value)

    def __pow__(self, e: int):
        return FpElement(self.field, self.field.pow(self.value, e))

    def inverse(self) -> "FpElement":
        return FpElement(self.field, self.field.inv(self.value))

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return self * FpElement(self.field, b).inverse()

    def __eq__(self, other):
        if isinstance(other, FpElement):
            return self.field.p == other.field.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.field.p
        return NotImplemented

    def __hash__(self):
        return hash((self.field.p, self.value))

    def __repr__(self):
        return f"{self.value} (mod {self.field.p})"


def rational(num: int, den: int = 1) -> Fraction:
    """Canonical reduced rational with positive denominator."""
    if den == 0:
        raise DivisionByZero("rational with zero denominator")
    return Fraction(num, den)


def render_rational(q: Fraction) -> str:
    """Fixed "num/den" rendering used by every serializer."""
    return f"{q.numerator}/{q.denominator}"
