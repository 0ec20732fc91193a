"""Exact scalars: reduced rationals and single-term multiples of powers of pi.

Rationals are :class:`fractions.Fraction` instances, which are always stored
in lowest terms with a positive denominator, so equality is a field-wise
comparison.
"""

from __future__ import annotations

import operator
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

__all__ = [
    "Rational",
    "ExactArithmeticError",
    "MixedPiPowerError",
    "rational",
    "rational_arith",
    "binomial",
    "factorial",
    "PiMonomial",
    "pi_monomial_combine",
]

Rational = Fraction
RationalLike = Union[Fraction, int]


class ExactArithmeticError(ArithmeticError):
    """Raised for undefined exact operations such as division by zero."""


class MixedPiPowerError(ExactArithmeticError):
    """Nonzero terms with different powers of pi were added together."""


def rational(value: RationalLike, den: int = 1) -> Fraction:
    if den == 0:
        raise ExactArithmeticError("zero denominator")
    return Fraction(value, den)


_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def rational_arith(a: RationalLike, b: RationalLike, op: str) -> Fraction:
    """Apply ``op`` (one of add, sub, mul, div) to two rationals exactly."""
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None
    if op == "div" and b == 0:
        raise ExactArithmeticError(f"division of {a} by zero")
    return Fraction(fn(Fraction(a), Fraction(b)))


def binomial(n: int, k: int) -> Fraction:
    """C(n, k) by the descending product, dividing exactly at each step.

    Returns 0 when ``k > n``.
    """
    if n < 0 or k < 0:
        raise ValueError("binomial requires non-negative arguments")
    if k > n:
        return Fraction(0)
    k = min(k, n - k)
    c = 1
    for i in range(1, k + 1):
        # c * (n - k + i) is always divisible by i at this point
        c = c * (n - k + i) // i
    return Fraction(c)


def factorial(m: int) -> int:
    if m < 0:
        raise ValueError("factorial of a negative integer")
    out = 1
    for i in range(2, m + 1):
        out *= i
    return out


_TEXT_RE = re.compile(
    r"^\s*(?P<num>-?\d+)(?:/(?P<den>\d+))?(?:\s*\*\s*pi(?:\^(?P<pow>\d+))?)?\s*$"
)


@dataclass(frozen=True)
class PiMonomial:
    """The exact value ``coeff * pi**pi_power``."""

    coeff: Fraction
    pi_power: int = 0

    def __post_init__(self) -> None:
        if not isinstance(self.pi_power, int) or self.pi_power < 0:
            raise ValueError(f"pi_power must be a non-negative int, got {self.pi_power!r}")
        object.__setattr__(self, "coeff", Fraction(self.coeff))
        if self.coeff == 0:
            object.__setattr__(self, "pi_power", 0)

    @classmethod
    def zero(cls) -> "PiMonomial":
        return cls(Fraction(0), 0)

    @classmethod
    def parse(cls, text: str) -> "PiMonomial":
        """Inverse of ``str``: accepts ``5/1536 * pi^5``, ``1/4 * pi``, ``2/15``."""
        m = _TEXT_RE.match(text)
        if m is None:
            raise ValueError(f"not a pi-monomial: {text!r}")
        den = int(m.group("den") or 1)
        if "pi" in text:
            power = int(m.group("pow") or 1)
        else:
            power = 0
        return cls(rational(int(m.group("num")), den), power)

    def is_zero(self) -> bool:
        return self.coeff == 0

    def __str__(self) -> str:
        c = self.coeff
        head = f"{c.numerator}/{c.denominator}"
        if self.pi_power == 0:
            return head
        if self.pi_power == 1:
            return f"{head} * pi"
        return f"{head} * pi^{self.pi_power}"

    def __neg__(self) -> "PiMonomial":
        return PiMonomial(-self.coeff, self.pi_power)

    def __add__(self, other: "PiMonomial") -> "PiMonomial":
        if not isinstance(other, PiMonomial):
            return NotImplemented
        return pi_monomial_combine([self, other])

    def __sub__(self, other: "PiMonomial") -> "PiMonomial":
        if not isinstance(other, PiMonomial):
            return NotImplemented
        return pi_monomial_combine([self, -other])

    def __mul__(self, other: Union["PiMonomial", Fraction, int]) -> "PiMonomial":
        if isinstance(other, PiMonomial):
            return PiMonomial(self.coeff * other.coeff, self.pi_power + other.pi_power)
        if isinstance(other, (Fraction, int)):
            return PiMonomial(self.coeff * other, self.pi_power)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other: Union[Fraction, int]) -> "PiMonomial":
        if not isinstance(other, (Fraction, int)):
            return NotImplemented
        return PiMonomial(rational_arith(self.coeff, other, "div"), self.pi_power)

    def times_pi(self, power: int) -> "PiMonomial":
        return PiMonomial(self.coeff, self.pi_power + power) if self.coeff else self

    def over_pi(self, power: int) -> "PiMonomial":
        """Divide by ``pi**power``; the result must keep a non-negative power."""
        if self.coeff == 0:
            return self
        if power > self.pi_power:
            raise ExactArithmeticError(
                f"{self} / pi^{power} is not a pi-monomial with non-negative power"
            )
        return PiMonomial(self.coeff, self.pi_power - power)


def pi_monomial_combine(terms: Iterable[PiMonomial]) -> PiMonomial:
    """Sum monomials that share one power of pi; zero terms are ignored.

    The empty sum is the canonical zero.
    """
    total = Fraction(0)
    power = None
    for term in terms:
        if term.coeff == 0:
            continue
        if power is None:
            power = term.pi_power
        elif term.pi_power != power:
            raise MixedPiPowerError(
                f"cannot combine pi^{power} with pi^{term.pi_power}"
            )
        total += term.coeff
    return PiMonomial(total, power or 0)
