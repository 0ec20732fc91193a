"""Verification suites behind ``beta-exact verify``.

Each suite returns a list of :class:`CheckResult`; suites always run and
report in the fixed order of ``SUITES``.
"""

from __future__ import annotations

from decimal import Decimal
from fractions import Fraction

from . import analysis as an
from .bernoulli_euler import bernoulli, bernoulli_poly, euler_from_bernoulli, euler_number
from .exact import PiMonomial
from .series import beta_series, lambda_series, render_decimal, zeta_series
from .special_values import (
    beta_odd_bernoulli,
    beta_odd_euler,
    beta_odd_lambda,
    beta_odd_zeta,
    lambda_even,
    zeta_even_bernoulli,
    zeta_even_recurrence,
)

__all__ = ["SUITES", "routes_suite", "identities_suite", "oracle_suite", "wz_suite", "run"]

SUITES = ("routes", "identities", "oracle", "wz")
ZERO = Decimal(0)


def _exact_residual(a, b) -> Decimal:
    if isinstance(a, PiMonomial):
        if a.pi_power != b.pi_power and not (a.is_zero() or b.is_zero()):
            return Decimal("Infinity")
        a, b = a.coeff, b.coeff
    diff = abs(Fraction(a) - Fraction(b))
    return Decimal(diff.numerator) / Decimal(diff.denominator)


def _exact(name: str, a, b, l=None) -> an.CheckResult:
    return an.CheckResult(name, _exact_residual(a, b), ZERO, l=l)


def _flag(name: str, ok: bool, l=None) -> an.CheckResult:
    return an.CheckResult(name, ZERO if ok else Decimal(1), ZERO, l=l)


def routes_suite(max_order: int) -> list[an.CheckResult]:
    out = []
    for l in range(1, max_order + 1):
        ref = beta_odd_euler(l - 1).value
        out.append(_exact("beta_route_lambda_vs_euler", beta_odd_lambda(l).value, ref, l))
        out.append(_exact("beta_route_zeta_vs_euler", beta_odd_zeta(l).value, ref, l))
        out.append(_exact("beta_route_bernoulli_vs_euler", beta_odd_bernoulli(l).value, ref, l))
        out.append(_exact("zeta_recurrence_vs_bernoulli", zeta_even_recurrence(l).value,
                          zeta_even_bernoulli(l).value, l))
    return out


def identities_suite(max_order: int) -> list[an.CheckResult]:
    out = []
    for n in range(1, max_order + 1):
        lhs = bernoulli_poly(2 * n, Fraction(1, 2))
        rhs = (Fraction(2) ** (1 - 2 * n) - 1) * bernoulli(2 * n)
        out.append(_exact("bernoulli_half_argument", lhs, rhs, n))
    for l in range(0, max_order + 1):
        out.append(_exact("euler_from_bernoulli", euler_from_bernoulli(l), euler_number(2 * l), l))
    for n in range(1, max_order + 1):
        b, e = bernoulli(2 * n), euler_number(2 * n)
        out.append(_flag("bernoulli_sign", (b > 0) == (n % 2 == 1), n))
        out.append(_flag("euler_sign_integral", e.denominator == 1 and (e > 0) == (n % 2 == 0), n))
        out.append(_flag("odd_index_zero", bernoulli(2 * n + 1) == 0 and euler_number(2 * n - 1) == 0, n))
    return out


def _oracle_check(name: str, exact: PiMonomial, estimate, digits: int, tol: Decimal, arg: int):
    # rounding of both sides plus the series' own error bound
    rendered = render_decimal(exact, digits)
    residual = abs(rendered - estimate.rounded()) + Decimal(1).scaleb(-digits) + estimate.error_bound
    return an.CheckResult(name, residual, tol, l=arg)


def oracle_suite(max_order: int, digits: int, tolerance: Decimal) -> list[an.CheckResult]:
    out = []
    for l in range(1, max_order + 1):
        s = 2 * l - 1
        out.append(_oracle_check("beta_vs_series", beta_odd_lambda(l).value,
                                 beta_series(s, digits), digits, tolerance, s))
    for n in range(1, max_order + 1):
        s = 2 * n
        out.append(_oracle_check("zeta_vs_series", zeta_even_bernoulli(n).value,
                                 zeta_series(s, digits), digits, tolerance, s))
        out.append(_oracle_check("lambda_vs_series", lambda_even(n).value,
                                 lambda_series(s, digits), digits, tolerance, s))
    return out


def wz_suite(max_order: int, digits: int) -> list[an.CheckResult]:
    out = []
    for x in ("pi/3", "0.7", "1.3"):
        for n in (1, 25, 100):
            out.append(an.dirichlet_kernel_identity_check(x, n, digits))

    pairs = [an.WZPairSpec(an.Family.F1G1), an.WZPairSpec(an.Family.F2G2),
             an.WZPairSpec(an.Family.F3G3)]
    for l in range(1, max_order + 1):
        pairs.append(an.WZPairSpec(an.Family.F2L, l))
        pairs.append(an.WZPairSpec(an.Family.F2L_PLUS_1, l))
    for pair in pairs:
        for x, k in (("0", 1), ("0.9", 7), ("1.1", 12)):
            out.append(an.wz_equation_check(pair, x, k, digits))
    for pair in pairs[:5]:
        out.append(an.wz_telescoped_integral_check(pair, "0", "pi/2", 1, 5, digits))
        out.append(an.wz_telescoped_integral_check(pair, "0.2", "1.2", 2, 9, digits))

    for l in range(2, min(max_order, an.MAX_COLLAPSE_ORDER) + 1):
        out.append(an.repeated_integral_collapse_check(l, "1.0", 3))
    for l in range(1, max_order + 1):
        out.append(an.lemma6_representation_check(l, 100, "pi/2", digits))

    ks = [10, 100, 1000]
    ctx = an.working_context(20)
    half_pi = ctx.pi / 2
    s0 = an.lemma45_limit_trend(0, ks)
    s1 = an.lemma45_limit_trend(1, ks)
    for i in range(1, len(ks)):
        out.append(an.CheckResult("limit_trend_s0", an.as_decimal(ctx, abs(s0[i] - half_pi)),
                                  an.as_decimal(ctx, abs(s0[i - 1] - half_pi)), l=0, k=ks[i]))
        out.append(an.CheckResult("limit_trend_s1", an.as_decimal(ctx, abs(s1[i])),
                                  an.as_decimal(ctx, abs(s1[i - 1])), l=1, k=ks[i]))
    for k, v in zip(ks, s1):
        out.append(an.CheckResult("limit_bound_s1", an.as_decimal(ctx, abs(v)),
                                  an.as_decimal(ctx, half_pi / k), l=1, k=k))

    for l in range(1, min(max_order, 3) + 1):
        exact = ctx.mpf(str(render_decimal(beta_odd_lambda(l).value, 30)))
        approx = an.beta_via_proof_path(l, 1000)
        out.append(an.CheckResult("proof_path", an.as_decimal(ctx, abs(approx - exact)),
                                  Decimal("1e-2"), l=l, k=1000))
    return out


def run(suite: str, max_order: int, digits: int, tolerance: Decimal) -> list[an.CheckResult]:
    """Run ``suite`` (one of SUITES or ``all``) and return results in suite order."""
    names = SUITES if suite == "all" else (suite,)
    results: list[an.CheckResult] = []
    for name in names:
        if name == "routes":
            results += routes_suite(max_order)
        elif name == "identities":
            results += identities_suite(max_order)
        elif name == "oracle":
            results += oracle_suite(max_order, digits, tolerance)
        elif name == "wz":
            results += wz_suite(max_order, digits)
        else:
            raise ValueError(f"unknown suite {name!r}")
    return results
