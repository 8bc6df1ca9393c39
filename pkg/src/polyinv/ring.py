"""Exact coefficient domains: QQ, ZZ and GF(p).

Coefficients are plain Python numbers. Integers and prime-field elements are
``int`` (prime-field values always in ``[0, p-1]``); rationals are ``int`` when
integral and :class:`fractions.Fraction` otherwise, which keeps them in lowest
terms with a positive denominator.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational


class DomainMismatch(TypeError):
    """Raised when a value or operation does not belong to the expected domain."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class Domain:
    """A coefficient domain. Build instances with :data:`QQ`, :data:`ZZ` or :func:`GF`."""

    kind: str  # "QQ", "ZZ" or "GF"
    p: int = 0

    def __post_init__(self):
        if self.kind not in ("QQ", "ZZ", "GF"):
            raise ValueError(f"unknown domain kind {self.kind!r}")
        if self.kind == "GF" and not is_prime(self.p):
            raise ValueError(f"GF({self.p}): modulus must be prime")
        if self.kind != "GF" and self.p:
            raise ValueError(f"{self.kind} takes no modulus")

    @property
    def is_field(self) -> bool:
        return self.kind != "ZZ"

    @property
    def modulus(self) -> int:
        return self.p

    def __str__(self):
        return f"GF({self.p})" if self.kind == "GF" else self.kind

    __repr__ = __str__

    def convert(self, value):
        """Coerce ``value`` into its canonical form in this domain."""
        if isinstance(value, bool):
            value = int(value)
        if self.kind == "ZZ":
            if isinstance(value, int):
                return value
            if isinstance(value, Rational) and value.denominator == 1:
                return int(value.numerator)
            raise DomainMismatch(f"{value!r} is not an integer")
        if self.kind == "QQ":
            if isinstance(value, int):
                return value
            if isinstance(value, Rational):
                value = Fraction(value.numerator, value.denominator)
                return int(value) if value.denominator == 1 else value
            raise DomainMismatch(f"{value!r} is not rational")
        if isinstance(value, int):
            return value % self.p
        if isinstance(value, Rational):
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        raise DomainMismatch(f"{value!r} cannot be mapped into GF({self.p})")

    def normalize(self, value):
        """Cheap re-canonicalisation after native ``+``/``*`` on canonical inputs."""
        if self.p:
            return value % self.p
        if type(value) is Fraction and value.denominator == 1:
            return value.numerator
        return value

    def add(self, a, b):
        return self.normalize(a + b)

    def sub(self, a, b):
        return self.normalize(a - b)

    def mul(self, a, b):
        return self.normalize(a * b)

    def neg(self, a):
        return self.normalize(-a)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.kind == "QQ":
            return self.normalize(1 / Fraction(a))
        if self.kind == "GF":
            return pow(a, -1, self.p)
        if a in (1, -1):
            return a
        raise DomainMismatch(f"{a} is not a unit in ZZ")

    def div(self, a, b):
        if self.kind == "ZZ":
            q, r = divmod(a, b)
            if r:
                raise DomainMismatch(f"{a} is not divisible by {b} in ZZ")
            return q
        return self.mul(a, self.inv(b))

    def render(self, value) -> str:
        """Decimal text: ``-3``, ``5/2``; prime-field values as their residue."""
        return str(value)


QQ = Domain("QQ")
ZZ = Domain("ZZ")


def GF(p: int) -> Domain:
    return Domain("GF", p)


def balanced_residue(a: int, d: int, p: int) -> int:
    """Representative of ``a mod p**d`` in the balanced window.

    For ``p == 2`` the window is ``[-2**(d-1), 2**(d-1) - 1]``; for odd ``p`` it
    is the symmetric ``[-(p**d - 1)/2, (p**d - 1)/2]``.
    """
    if isinstance(a, bool) or not isinstance(a, int):
        if isinstance(a, Rational) and a.denominator == 1:
            a = int(a.numerator)
        else:
            raise DomainMismatch(f"balanced_residue needs an integer, got {a!r}")
    if d < 0:
        raise ValueError("d must be non-negative")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if d == 0:
        return 0
    m = p**d
    r = a % m
    upper = m // 2 - 1 if p == 2 else (m - 1) // 2
    if r > upper:
        r -= m
    return r
