"""Closed forms for zeta(2n), lambda(2n) and beta(2l-1).

Each formula is its own function and they share nothing beyond the exact
scalars and the Bernoulli/Euler tables, so when two routes disagree the
failing formula can be identified directly.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .bernoulli_euler import (
    BernoulliTable,
    EulerTable,
    default_bernoulli_table,
    default_euler_table,
)
from .exact import PiMonomial, factorial, pi_monomial_combine

__all__ = [
    "Route",
    "ZetaEvenValue",
    "LambdaEvenValue",
    "BetaOddValue",
    "gamma_int",
    "zeta_even_bernoulli",
    "zeta_even_recurrence",
    "lambda_even",
    "beta_odd_euler",
    "beta_odd_lambda",
    "beta_odd_zeta",
    "beta_odd_bernoulli",
]


class Route(enum.Enum):
    ZETA_BERNOULLI = "zeta-bernoulli"
    ZETA_RECURRENCE = "zeta-recurrence"
    LAMBDA_FROM_ZETA = "lambda-from-zeta"
    BETA_EULER = "beta-euler"
    BETA_LAMBDA = "beta-lambda"
    BETA_ZETA = "beta-zeta"
    BETA_BERNOULLI = "beta-bernoulli"


@dataclass(frozen=True)
class _SpecialValue:
    argument: int
    value: PiMonomial
    route: Route

    _parity = 0

    def __post_init__(self) -> None:
        if self.argument < 1 or self.argument % 2 != self._parity:
            raise ValueError(f"{type(self).__name__}: bad argument {self.argument}")
        if self.value.pi_power != self.argument:
            raise ValueError(
                f"{type(self).__name__}({self.argument}) must carry pi^{self.argument},"
                f" got {self.value}"
            )
        if self.value.coeff <= 0:
            raise ValueError(f"{type(self).__name__}({self.argument}) must be positive")

    def __str__(self) -> str:
        return str(self.value)


class ZetaEvenValue(_SpecialValue):
    pass


class LambdaEvenValue(_SpecialValue):
    pass


class BetaOddValue(_SpecialValue):
    _parity = 1


def gamma_int(m: int) -> int:
    """Gamma at a positive integer, (m-1)!."""
    if m < 1:
        raise ValueError("gamma_int needs a positive integer")
    return factorial(m - 1)


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


def zeta_even_bernoulli(n: int, btable: BernoulliTable | None = None) -> ZetaEvenValue:
    """zeta(2n) = 2^(2n-1) (-1)^(n-1) B_2n pi^2n / (2n)!."""
    if n < 1:
        raise ValueError("n must be >= 1")
    btable = default_bernoulli_table() if btable is None else btable
    coeff = Fraction(2 ** (2 * n - 1) * _sign(n - 1)) * btable[2 * n] / factorial(2 * n)
    return ZetaEvenValue(2 * n, PiMonomial(coeff, 2 * n), Route.ZETA_BERNOULLI)


def zeta_even_recurrence(l: int) -> ZetaEvenValue:
    """zeta(2l) from the recurrence in the lower values zeta(2j), j < l.

    Needs no Bernoulli numbers at all. Lower values are built bottom-up once.
    """
    if l < 1:
        raise ValueError("l must be >= 1")
    known: list[PiMonomial] = [PiMonomial.zero()]  # known[j] = zeta(2j)
    for m in range(1, l + 1):
        lead = (Fraction(_sign(m + 1), 4 * m) + Fraction(_sign(m), 2)) / gamma_int(2 * m)
        terms = [PiMonomial(lead, 2 * m)]
        for j in range(1, m):
            w = Fraction(_sign(m - j), gamma_int(2 * (m - j) + 1))
            terms.append(known[j].times_pi(2 * (m - j)) * w)
        scale = Fraction(2 ** (2 * m - 1), 1 - 2 ** (2 * m))
        known.append(pi_monomial_combine(terms) * scale)
    return ZetaEvenValue(2 * l, known[l], Route.ZETA_RECURRENCE)


def lambda_even(n: int, btable: BernoulliTable | None = None) -> LambdaEvenValue:
    """lambda(2n) = (2^2n - 1) / 2^2n * zeta(2n)."""
    z = zeta_even_bernoulli(n, btable).value
    p = 4**n
    return LambdaEvenValue(2 * n, z * Fraction(p - 1, p), Route.LAMBDA_FROM_ZETA)


def beta_odd_euler(n: int, etable: EulerTable | None = None) -> BetaOddValue:
    """beta(2n+1) = (-1)^n E_2n / (2 (2n)!) * (pi/2)^(2n+1)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    etable = default_euler_table() if etable is None else etable
    coeff = _sign(n) * etable[2 * n] / (2 * factorial(2 * n) * 2 ** (2 * n + 1))
    return BetaOddValue(2 * n + 1, PiMonomial(coeff, 2 * n + 1), Route.BETA_EULER)


def _beta_prefactor(l: int) -> PiMonomial:
    # (-1)^(l+1) pi^(2l-1) / 2^(2l)
    return PiMonomial(Fraction(_sign(l + 1), 4**l), 2 * l - 1)


def beta_odd_lambda(l: int, btable: BernoulliTable | None = None) -> BetaOddValue:
    """beta(2l-1) as a finite sum over lambda(2j), j < l."""
    if l < 1:
        raise ValueError("l must be >= 1")
    bracket = Fraction(1, gamma_int(2 * l - 1))
    for j in range(1, l):
        lam = lambda_even(j, btable).value.over_pi(2 * j)
        bracket += 2 * _sign(j) * 4**j * lam.coeff / gamma_int(2 * l - 2 * j)
    return BetaOddValue(2 * l - 1, _beta_prefactor(l) * bracket, Route.BETA_LAMBDA)


def beta_odd_zeta(l: int, btable: BernoulliTable | None = None) -> BetaOddValue:
    """beta(2l-1) as a finite sum over (2^2j - 1) zeta(2j), j < l."""
    if l < 1:
        raise ValueError("l must be >= 1")
    bracket = Fraction(1, gamma_int(2 * l - 1))
    for j in range(1, l):
        z = zeta_even_bernoulli(j, btable).value.over_pi(2 * j)
        bracket += 2 * _sign(j) * (4**j - 1) * z.coeff / gamma_int(2 * l - 2 * j)
    return BetaOddValue(2 * l - 1, _beta_prefactor(l) * bracket, Route.BETA_ZETA)


def beta_odd_bernoulli(l: int, btable: BernoulliTable | None = None) -> BetaOddValue:
    """beta(2l-1) directly from B_2j, j < l."""
    if l < 1:
        raise ValueError("l must be >= 1")
    btable = default_bernoulli_table() if btable is None else btable
    bracket = Fraction(1, gamma_int(2 * l - 1))
    for j in range(1, l):
        four_j = 4**j
        bracket -= Fraction(four_j * (four_j - 1)) * btable[2 * j] / (
            gamma_int(2 * l - 2 * j) * gamma_int(2 * j + 1)
        )
    return BetaOddValue(2 * l - 1, _beta_prefactor(l) * bracket, Route.BETA_BERNOULLI)
