"""Numerical checks of the finite-k machinery behind the beta(2l-1) formula.

Covers the odd-frequency sine/cosine partial sums, the Dirichlet-kernel
closed form, the continuous-discrete WZ pairs and their telescoped integral
identity, the single-integral representation of the sine sums, the
oscillatory limits at t -> pi/2, and the split of beta(2l-1) into an
integral part and a lambda part.

All arithmetic is mpmath at ``digits + guard`` significant digits. Exact
identities are checked against ``10**-(digits - guard)``.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from decimal import Decimal
from typing import Sequence

import numpy as np
from numpy.polynomial import Chebyshev

from .exact import factorial
from .quadrature import (
    mp_context,
    panel_quad,
    sine_ratio_integral,
)
from .series import GUARD_DIGITS, render_decimal
from .special_values import lambda_even

__all__ = [
    "DEFAULT_DIGITS",
    "Kind",
    "Family",
    "KernelSumSpec",
    "WZPairSpec",
    "CheckResult",
    "SingularPointError",
    "working_context",
    "as_decimal",
    "to_mpf",
    "identity_tolerance",
    "kernel_sum",
    "dirichlet_kernel_identity_check",
    "wz_equation_check",
    "wz_telescoped_integral_check",
    "repeated_integral_collapse_check",
    "lemma6_representation_check",
    "lemma45_limit_trend",
    "beta_via_proof_path",
    "proof_path_parts",
]

DEFAULT_DIGITS = 30
MAX_COLLAPSE_ORDER = 4


class SingularPointError(ValueError):
    """x is too close to a zero of sin(x) for the closed form to be used."""


class Kind(enum.Enum):
    I = "I"  # noqa: E741  sine sum
    J = "J"  # cosine sum


class Family(enum.Enum):
    F1G1 = "F1G1"
    F2G2 = "F2G2"
    F3G3 = "F3G3"
    F2L = "F2l"
    F2L_PLUS_1 = "F2l_plus_1"


@dataclass(frozen=True)
class KernelSumSpec:
    kind: Kind
    order: int
    x: object
    k: int

    def __post_init__(self) -> None:
        if self.order < 1 or self.k < 1:
            raise ValueError("order and k must both be >= 1")


@dataclass(frozen=True)
class WZPairSpec:
    """One of the explicit (F, G) pairs; ``order`` is l for F2l and F2l_plus_1."""

    family: Family
    order: int = 1

    def __post_init__(self) -> None:
        if self.order < 1:
            raise ValueError("order must be >= 1")

    @property
    def parity(self) -> str:
        # which trig function F carries, and the power of (2k-1) in its denominator
        return {
            Family.F1G1: "sin",
            Family.F2G2: "cos",
            Family.F3G3: "sin",
            Family.F2L: "cos",
            Family.F2L_PLUS_1: "sin",
        }[self.family]

    @property
    def power(self) -> int:
        return {
            Family.F1G1: 1,
            Family.F2G2: 2,
            Family.F3G3: 3,
            Family.F2L: 2 * self.order,
            Family.F2L_PLUS_1: 2 * self.order + 1,
        }[self.family]

    def label(self) -> str:
        if self.family in (Family.F2L, Family.F2L_PLUS_1):
            return f"{self.family.value}[l={self.order}]"
        return self.family.value


@dataclass(frozen=True)
class CheckResult:
    name: str
    residual: Decimal
    tol: Decimal
    l: int | None = None
    k: int | None = None

    @property
    def passed(self) -> bool:
        return self.residual <= self.tol

    def line(self) -> str:
        l = "-" if self.l is None else str(self.l)
        k = "-" if self.k is None else str(self.k)
        verdict = "PASS" if self.passed else "FAIL"
        return (f"CHECK {self.name} l={l} k={k} residual={_fmt(self.residual)}"
                f" tol={_fmt(self.tol)} {verdict}")


def _fmt(d: Decimal) -> str:
    if d.is_zero():
        return "0"
    return f"{d:.3E}"


def as_decimal(ctx, v) -> Decimal:
    """An mpf as a Decimal with 8 significant digits (for reports)."""
    return Decimal(ctx.nstr(v, 8, min_fixed=1, max_fixed=0).replace("e", "E"))


def working_context(digits: int = DEFAULT_DIGITS, guard: int = GUARD_DIGITS):
    if digits < 1:
        raise ValueError("digits must be >= 1")
    return mp_context(digits + guard)


def identity_tolerance(digits: int = DEFAULT_DIGITS, guard: int = GUARD_DIGITS) -> Decimal:
    return Decimal(1).scaleb(-(digits - guard)) if digits > guard else Decimal(1)


_PI_RE = re.compile(r"^\s*(?:(?P<num>\d+)\s*\*\s*)?pi\s*(?:/\s*(?P<den>\d+))?\s*$")


def to_mpf(ctx, x):
    """Convert ``x`` to ``ctx.mpf``; strings like ``pi/2`` or ``2*pi/3`` work."""
    if isinstance(x, str):
        m = _PI_RE.match(x)
        if m:
            return ctx.pi * int(m.group("num") or 1) / int(m.group("den") or 1)
        return ctx.mpf(x)
    if isinstance(x, Decimal):
        return ctx.mpf(str(x))
    return ctx.mpf(x)


def _odd_sum(ctx, fn, order: int, x, k: int):
    return ctx.fsum(fn((2 * j - 1) * x) / ctx.mpf(2 * j - 1) ** order for j in range(1, k + 1))


def kernel_sum(spec: KernelSumSpec, digits: int = DEFAULT_DIGITS):
    """I_l(x,k) = sum_{j<=k} sin((2j-1)x)/(2j-1)^l, or J_l with cos."""
    ctx = working_context(digits)
    x = to_mpf(ctx, spec.x)
    fn = ctx.sin if spec.kind is Kind.I else ctx.cos
    return _odd_sum(ctx, fn, spec.order, x, spec.k)


def dirichlet_kernel_identity_check(x, n: int, digits: int = DEFAULT_DIGITS) -> CheckResult:
    """Compare sum_{k<=n} cos((2k-1)x) with sin(2nx) / (2 sin x)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    ctx = working_context(digits)
    x = to_mpf(ctx, x)
    sx = ctx.sin(x)
    if abs(sx) < ctx.mpf(10) ** (-(digits // 2)):
        raise SingularPointError(f"sin(x) vanishes to working accuracy at x={ctx.nstr(x, 10)}")
    lhs = ctx.fsum(ctx.cos((2 * j - 1) * x) for j in range(1, n + 1))
    rhs = ctx.sin(2 * n * x) / (2 * sx)
    return CheckResult("dirichlet_kernel", as_decimal(ctx, abs(lhs - rhs)), identity_tolerance(digits),
                       k=n)


# --- WZ pairs ---------------------------------------------------------------
#
# F(x,k) = trig((2k-1)x) / (2k-1)^p and G(x,k) = sum_{j<k} dF(x,j)/dx,
# where dF/dx is written out from the closed form of F:
#   sin-family:  d/dx sin(a x)/a^p =  cos(a x)/a^(p-1)
#   cos-family:  d/dx cos(a x)/a^p = -sin(a x)/a^(p-1)


def wz_F(ctx, pair: WZPairSpec, x, k: int):
    a = ctx.mpf(2 * k - 1)
    trig = ctx.sin if pair.parity == "sin" else ctx.cos
    return trig(a * x) / a**pair.power


def wz_dF(ctx, pair: WZPairSpec, x, k: int):
    a = ctx.mpf(2 * k - 1)
    if pair.parity == "sin":
        return ctx.cos(a * x) / a ** (pair.power - 1)
    return -ctx.sin(a * x) / a ** (pair.power - 1)


def wz_G(ctx, pair: WZPairSpec, x, k: int):
    p = pair.power - 1
    if pair.parity == "sin":
        return ctx.fsum(ctx.cos((2 * j - 1) * x) / ctx.mpf(2 * j - 1) ** p for j in range(1, k))
    return ctx.fsum(-ctx.sin((2 * j - 1) * x) / ctx.mpf(2 * j - 1) ** p for j in range(1, k))


def wz_equation_check(pair: WZPairSpec, x, k: int, digits: int = DEFAULT_DIGITS) -> CheckResult:
    """|dF/dx - (G(x,k+1) - G(x,k))| with both G values summed independently."""
    if k < 1:
        raise ValueError("k must be >= 1")
    ctx = working_context(digits)
    x = to_mpf(ctx, x)
    residual = abs(wz_dF(ctx, pair, x, k) - (wz_G(ctx, pair, x, k + 1) - wz_G(ctx, pair, x, k)))
    return CheckResult(f"wz_equation[{pair.label()}]", as_decimal(ctx, residual),
                       identity_tolerance(digits), l=pair.order, k=k)


def wz_telescoped_integral_check(pair: WZPairSpec, h, x, m: int, n: int,
                                 digits: int = DEFAULT_DIGITS) -> CheckResult:
    """Sum_{m..n} F(x,.) - F(h,.) against the integrals of G(., n+1) - G(., m) over [h, x].

    ``n = m - 1`` is the empty sum. Tolerance is the quadrature error
    estimate plus the identity tolerance.
    """
    if m < 1 or n < m - 1:
        raise ValueError("need m >= 1 and n >= m - 1")
    ctx = working_context(digits)
    h, x = to_mpf(ctx, h), to_mpf(ctx, x)
    lhs = ctx.fsum(wz_F(ctx, pair, x, j) - wz_F(ctx, pair, h, j) for j in range(m, n + 1))
    width = ctx.pi / (2 * max(1, 2 * n - 1))
    top = panel_quad(ctx, lambda t: wz_G(ctx, pair, t, n + 1), h, x, width)
    bottom = panel_quad(ctx, lambda t: wz_G(ctx, pair, t, m), h, x, width)
    residual = abs(lhs - (top.value - bottom.value))
    tol = identity_tolerance(digits) + as_decimal(ctx, top.est_error + bottom.est_error)
    return CheckResult(f"wz_telescoped[{pair.label()}]", as_decimal(ctx, residual), tol,
                       l=pair.order, k=n)


# --- integral representation --------------------------------------------------


def _kernel_float(k: int):
    def f(t):
        t = np.asarray(t, dtype=float)
        out = np.full_like(t, float(k))
        nz = t != 0
        out[nz] = np.sin(2 * k * t[nz]) / (2 * np.sin(t[nz]))
        return out
    return f


def iterated_integral(f, depth: int, x: float, max_degree: int = 4096) -> float:
    """The depth-fold integral int_0^x int_0^{t_depth} ... f(t_1) dt_1 ... dt_depth.

    f is replaced by its Chebyshev interpolant on [0, x] and integrated
    ``depth`` times from 0, one antiderivative at a time.
    """
    if x == 0:
        return 0.0
    deg = 32
    while True:
        series = Chebyshev.interpolate(f, deg, domain=[0.0, x])
        tail = np.max(np.abs(series.coef[-4:]))
        if tail < 1e-15 * np.max(np.abs(series.coef)) or deg >= max_degree:
            break
        deg *= 2
    return float(series.integ(m=depth, lbnd=0.0)(x))


def repeated_integral_collapse_check(l: int, x, k: int, digits: int = 10) -> CheckResult:
    """Nested (2l-1)-fold integral of sin(2kt)/(2 sin t) vs the single Cauchy form.

    The nested side is evaluated as repeated antiderivatives in double
    precision, the collapsed side by mpmath panel quadrature.
    """
    if not 2 <= l <= MAX_COLLAPSE_ORDER:
        raise ValueError(f"l must be in 2..{MAX_COLLAPSE_ORDER} (nesting depth 2l-1 <= 7)")
    ctx = working_context(digits)
    xm = to_mpf(ctx, x)
    depth = 2 * l - 1
    nested = iterated_integral(_kernel_float(k), depth, float(xm))
    p = 2 * l - 2
    single = sine_ratio_integral(ctx, lambda t: (xm - t) ** p, xm, k)
    collapsed = single.value / 2 / factorial(p)
    residual = abs(ctx.mpf(nested) - collapsed)
    tol = Decimal("1e-6") if l == 2 else Decimal("1e-5")
    return CheckResult("repeated_integral_collapse", as_decimal(ctx, residual), tol, l=l, k=k)


def representation_sides(l: int, k: int, x, digits: int = DEFAULT_DIGITS):
    """Return (I_{2l-1}(x,k), integral-form value, quadrature result)."""
    if l < 1 or k < 1:
        raise ValueError("l and k must be >= 1")
    ctx = working_context(digits)
    x = to_mpf(ctx, x)
    lhs = _odd_sum(ctx, ctx.sin, 2 * l - 1, x, k)
    p = 2 * l - 2
    quad = sine_ratio_integral(ctx, lambda t: (x - t) ** p, x, k)
    sign = 1 if l % 2 else -1  # (-1)^(l+1)
    rhs = sign * quad.value / 2 / factorial(p)
    for j in range(1, l):
        jsum = _odd_sum(ctx, ctx.cos, 2 * j, ctx.zero, k)
        sj = 1 if (l + j + 1) % 2 == 0 else -1
        rhs += sj * jsum * x ** (2 * l - 2 * j - 1) / factorial(2 * l - 2 * j - 1)
    return lhs, rhs, quad


def lemma6_representation_check(l: int, k: int, x="pi/2",
                                digits: int = DEFAULT_DIGITS) -> CheckResult:
    """Finite sine sum I_{2l-1}(x,k) against its integral plus cosine-sum form."""
    ctx = working_context(digits)
    lhs, rhs, quad = representation_sides(l, k, x, digits)
    residual = as_decimal(ctx, abs(lhs - rhs))
    tol = 10 * as_decimal(ctx, quad.est_error) + identity_tolerance(digits)
    return CheckResult("sine_sum_representation", residual, tol, l=l, k=k)


def lemma45_limit_trend(s: int, k_list: Sequence[int], digits: int = 20) -> list:
    """Integrals over [0, pi/2] of t^s sin(2kt)/sin t for each k in ``k_list``.

    For s = 0 these approach pi/2, for s >= 1 they approach 0.
    """
    if s < 0:
        raise ValueError("s must be >= 0")
    if any(b <= a for a, b in zip(k_list, k_list[1:])):
        raise ValueError("k_list must be strictly increasing")
    ctx = working_context(digits)
    weight = (lambda t: 1) if s == 0 else (lambda t: t**s)
    return [sine_ratio_integral(ctx, weight, ctx.pi / 2, k).value for k in k_list]


def proof_path_parts(l: int, k: int, digits: int = 20):
    """(integral part at finite k, lambda part) of the beta(2l-1) approximant."""
    if l < 1 or k < 1:
        raise ValueError("l and k must be >= 1")
    ctx = working_context(digits)
    x = ctx.pi / 2
    p = 2 * l - 2
    quad = sine_ratio_integral(ctx, lambda t: (x - t) ** p, x, k)
    sign = 1 if l % 2 else -1
    integral_part = sign * quad.value / 2 / factorial(p)
    lam_part = ctx.zero
    for j in range(1, l):
        lam = ctx.mpf(str(render_decimal(lambda_even(j).value, digits + GUARD_DIGITS)))
        sj = 1 if (l + j + 1) % 2 == 0 else -1
        lam_part += sj * lam * x ** (2 * l - 2 * j - 1) / factorial(2 * l - 2 * j - 1)
    return integral_part, lam_part


def beta_via_proof_path(l: int, k: int, digits: int = 20):
    """k-th approximant of beta(2l-1): integral part at k plus the lambda part."""
    a, b = proof_path_parts(l, k, digits)
    return a + b

