"""Decimal oracles for zeta, lambda and beta from their defining series.

Nothing here touches Bernoulli or Euler numbers. Arithmetic is done on
integers scaled by ``10**W`` (W = requested digits + guard digits) and the
results are handed out as :class:`decimal.Decimal`, rounded half-even.

Alternating series use the Cohen-Villegas-Zagier Chebyshev acceleration:
for ``sum (-1)^k a_k`` with ``a_k`` the moments of a positive measure the
truncation error after ``n`` terms is at most ``a_0 / T_n(3)``.
"""

from __future__ import annotations

import decimal
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction

from .exact import PiMonomial

__all__ = [
    "BigDecimal",
    "GUARD_DIGITS",
    "SeriesEstimate",
    "to_decimal",
    "format_decimal",
    "round_decimal",
    "pi_big",
    "pi_fixed",
    "render_decimal",
    "alternating_cvz",
    "beta_series",
    "eta_series",
    "zeta_series",
    "lambda_series",
    "zeta_direct",
    "lambda_direct",
    "oracle",
]

BigDecimal = Decimal
GUARD_DIGITS = 10
DIRECT_MAX_TERMS = 2_000_000


def _context(digits: int) -> decimal.Context:
    return decimal.Context(prec=digits + 50, rounding=decimal.ROUND_HALF_EVEN,
                           Emax=decimal.MAX_EMAX, Emin=decimal.MIN_EMIN)


def to_decimal(scaled: int, scale: int, digits: int) -> Decimal:
    """Round the fixed-point value ``scaled * 10**-scale`` to ``digits`` places."""
    ctx = _context(len(str(abs(scaled))) + digits)
    exact = Decimal(scaled).scaleb(-scale, context=ctx)
    return exact.quantize(Decimal(1).scaleb(-digits), context=ctx)


def round_decimal(value: Decimal, digits: int) -> Decimal:
    """Round half-even to ``digits`` fractional places at whatever length it takes."""
    ctx = _context(len(value.as_tuple().digits) + digits)
    return value.quantize(Decimal(1).scaleb(-digits), context=ctx)


def format_decimal(value: Decimal, digits: int) -> str:
    """``-?digits.digits`` with exactly ``digits`` fractional digits."""
    q = round_decimal(value, digits)
    if q.is_zero():
        q = abs(q)
    text = format(q, "f")
    if digits == 0:
        text += "."
    return text


def _div_round(num: int, den: int) -> int:
    """Nearest integer to num/den (ties away from zero; den > 0)."""
    q, r = divmod(abs(num), den)
    if 2 * r >= den:
        q += 1
    return q if num >= 0 else -q


def _arctan_inv(x: int, one: int) -> int:
    # arctan(1/x) * one by the Gregory series, truncating each term
    power = one // x
    total = power
    x2 = x * x
    n = 1
    sign = -1
    while power:
        power //= x2
        n += 2
        total += sign * (power // n)
        sign = -sign
    return total


def pi_fixed(scale: int) -> int:
    """pi * 10**scale, within one unit of the last place (Machin's formula)."""
    extra = 10
    one = 10 ** (scale + extra)
    pi = 4 * (4 * _arctan_inv(5, one) - _arctan_inv(239, one))
    return _div_round(pi, 10**extra)


def pi_big(digits: int) -> Decimal:
    if digits < 1:
        raise ValueError("digits must be >= 1")
    w = digits + GUARD_DIGITS
    return to_decimal(pi_fixed(w), w, digits)


def render_decimal(v: PiMonomial, digits: int, guard: int = GUARD_DIGITS) -> Decimal:
    """``coeff * pi**pi_power`` rounded half-even to ``digits`` places."""
    if digits < 0:
        raise ValueError("digits must be >= 0")
    if v.is_zero():
        return to_decimal(0, 0, digits)
    k = v.pi_power
    mag = len(str(abs(v.coeff.numerator) * 4**k // v.coeff.denominator + 1))
    w = digits + guard + mag + len(str(k)) + 1
    one = 10**w
    pi = pi_fixed(w)
    acc = one
    for _ in range(k):
        acc = acc * pi // one
    scaled = _div_round(v.coeff.numerator * acc, v.coeff.denominator)
    return to_decimal(scaled, w, digits)


@dataclass(frozen=True)
class SeriesEstimate:
    """A series value at working precision with a bound on its error.

    ``value`` carries every working digit; ``rounded()``/``text()`` give the
    requested ``digits``.
    """

    value: Decimal
    error_bound: Decimal
    terms_used: int
    digits: int
    method: str
    rigorous: bool = True

    def rounded(self) -> Decimal:
        return round_decimal(self.value, self.digits)

    def text(self) -> str:
        return format_decimal(self.value, self.digits)


def _bound_decimal(ulps: Fraction, scale: int) -> Decimal:
    # ceil(ulps) * 10**-scale, kept to 3 significant digits rounded up
    n = -(-ulps.numerator // ulps.denominator)
    ctx = decimal.Context(prec=3, rounding=decimal.ROUND_CEILING)
    return ctx.create_decimal(Decimal(n).scaleb(-scale))


def _chebyshev3(n: int) -> int:
    t0, t1 = 1, 3
    if n == 0:
        return 1
    for _ in range(n - 1):
        t0, t1 = t1, 6 * t1 - t0
    return t1


def _cvz_terms_for(scale: int) -> int:
    n, target = 1, 10**scale
    while _chebyshev3(n) < target:
        n += 1
    return n


def alternating_cvz(moment, scale: int, terms: int | None = None) -> tuple[int, Fraction, int]:
    """Accelerated ``sum_{k>=0} (-1)^k a_k`` in fixed point.

    ``moment(k, one)`` must return ``a_k * one`` rounded to nearest, with
    ``a_k`` the moments of a positive measure on [0, 1]. Returns
    ``(scaled_sum, error_in_ulps, terms)``.
    """
    one = 10**scale
    n = _cvz_terms_for(scale + 1) if terms is None else terms
    d = _chebyshev3(n)
    b = Fraction(-1)
    c = Fraction(-d)
    s = Fraction(0)
    weight = Fraction(0)
    for k in range(n):
        c = b - c
        s += c * moment(k, one)
        weight += abs(c)
        b = b * (k + n) * (k - n) / ((k + Fraction(1, 2)) * (k + 1))
    a0 = Fraction(moment(0, one))
    value = _div_round(s.numerator, s.denominator * d)
    # truncation a_0/d, half an ulp per rounded moment, final rounding
    err = (a0 + 1) / d + weight / (2 * d) + Fraction(1, 2)
    return value, err, n


def _estimate(scaled: int, err: Fraction, scale: int, digits: int, terms: int,
              method: str) -> SeriesEstimate:
    ctx = _context(len(str(abs(scaled))) + scale)
    value = Decimal(scaled).scaleb(-scale, context=ctx)
    return SeriesEstimate(value, _bound_decimal(err, scale), terms, digits, method)


def beta_series(s: int, digits: int, terms: int | None = None,
                guard: int = GUARD_DIGITS) -> SeriesEstimate:
    """beta(s) = sum (-1)^k / (2k+1)^s, accelerated."""
    if s < 1:
        raise ValueError("beta_series needs s >= 1")
    w = digits + guard
    val, err, n = alternating_cvz(lambda k, one: _div_round(one, (2 * k + 1) ** s), w, terms)
    return _estimate(val, err, w, digits, n, "cvz")


def eta_series(s: int, digits: int, terms: int | None = None,
               guard: int = GUARD_DIGITS) -> SeriesEstimate:
    """Alternating zeta eta(s) = sum (-1)^k / (k+1)^s, accelerated."""
    if s < 1:
        raise ValueError("eta_series needs s >= 1")
    w = digits + guard
    val, err, n = alternating_cvz(lambda k, one: _div_round(one, (k + 1) ** s), w, terms)
    return _estimate(val, err, w, digits, n, "cvz")


def _eta_multiple(s: int, factor: Fraction, digits: int, terms: int | None,
                  guard: int) -> SeriesEstimate:
    w = digits + guard
    eta, err, n = alternating_cvz(lambda k, one: _div_round(one, (k + 1) ** s), w, terms)
    scaled = _div_round(eta * factor.numerator, factor.denominator)
    return _estimate(scaled, err * factor + Fraction(1, 2), w, digits, n, "cvz-eta")


def zeta_series(s: int, digits: int, terms: int | None = None,
                guard: int = GUARD_DIGITS) -> SeriesEstimate:
    """zeta(s) for even s >= 2 as eta(s) / (1 - 2^(1-s))."""
    if s < 2 or s % 2:
        raise ValueError("zeta_series needs an even s >= 2")
    half = 2 ** (s - 1)
    return _eta_multiple(s, Fraction(half, half - 1), digits, terms, guard)


def lambda_series(s: int, digits: int, terms: int | None = None,
                  guard: int = GUARD_DIGITS) -> SeriesEstimate:
    """lambda(s) for even s >= 2 as eta(s) (1 - 2^-s) / (1 - 2^(1-s))."""
    if s < 2 or s % 2:
        raise ValueError("lambda_series needs an even s >= 2")
    full = 2**s
    return _eta_multiple(s, Fraction(full - 1, full - 2), digits, terms, guard)


def _direct(s: int, digits: int, guard: int, odd: bool, max_terms: int) -> SeriesEstimate:
    # Partial sum plus the midpoint of the integral-test bracket for the tail.
    w = digits + guard
    one = 10**w
    target = Fraction(1, 2 * 10 ** (digits + 1))
    step = 2 if odd else 1

    def bracket(n):
        # tail sum over m > n (odd m only if odd) lies in [lo, hi]
        if odd:
            lo = Fraction(1, 2 * (s - 1) * (2 * n + 1) ** (s - 1))
            hi = Fraction(1, 2 * (s - 1) * (2 * n - 1) ** (s - 1))
        else:
            lo = Fraction(1, (s - 1) * (n + 1) ** (s - 1))
            hi = Fraction(1, (s - 1) * n ** (s - 1))
        return lo, hi

    n = 1
    while (bracket(n)[1] - bracket(n)[0]) / 2 > target:
        n *= 2
        if n > max_terms:
            raise ValueError(
                f"direct summation needs more than {max_terms} terms for {digits} digits"
            )
    lo, hi = bracket(n)
    total = 0
    for m in range(1, n + 1):
        total += _div_round(one, (step * m - (1 if odd else 0)) ** s)
    mid = (lo + hi) / 2
    total += _div_round(mid.numerator * one, mid.denominator)
    err = (hi - lo) / 2 * one + Fraction(n + 1, 2)
    return _estimate(total, err, w, digits, n, "direct")


def zeta_direct(s: int, digits: int, guard: int = GUARD_DIGITS,
                max_terms: int = DIRECT_MAX_TERMS) -> SeriesEstimate:
    """zeta(s) by plain summation of 1/n^s with an integral-test tail bracket.

    Only practical for small ``digits``; raises ValueError past ``max_terms``.
    """
    if s < 2:
        raise ValueError("zeta_direct needs s >= 2")
    return _direct(s, digits, guard, False, max_terms)


def lambda_direct(s: int, digits: int, guard: int = GUARD_DIGITS,
                  max_terms: int = DIRECT_MAX_TERMS) -> SeriesEstimate:
    if s < 2:
        raise ValueError("lambda_direct needs s >= 2")
    return _direct(s, digits, guard, True, max_terms)


def oracle(function: str, s: int, digits: int) -> SeriesEstimate:
    """Series estimate for ``function`` in {beta, zeta, lambda} at ``s``."""
    if function == "beta":
        return beta_series(s, digits)
    if function == "zeta":
        return zeta_series(s, digits)
    if function == "lambda":
        return lambda_series(s, digits)
    raise ValueError(f"unknown function {function!r}")
