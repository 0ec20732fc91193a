"""Composite Gauss-Legendre quadrature in mpmath for oscillatory integrands.

Panels are at most half a period of the fastest oscillation wide, so a fixed
rule on each panel only ever sees a smooth, non-oscillating piece. Every
integral is computed with a 12-point and a 24-point rule on the same panels;
the 24-point value is returned and their difference is the error estimate.
Panel contributions are added in panel order, so results are reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import mpmath
from mpmath.calculus.quadrature import GaussLegendre

__all__ = [
    "QuadratureResult",
    "QuadratureError",
    "mp_context",
    "gl_nodes",
    "panel_quad",
    "sine_ratio_integral",
]

_LOW_DEGREE = 3  # 12 nodes
_HIGH_DEGREE = 4  # 24 nodes


class QuadratureError(ArithmeticError):
    """The panel rules disagree by more than the requested tolerance."""

    def __init__(self, message: str, panels: int, est_error):
        super().__init__(f"{message} (panels={panels}, est_error={mpmath.nstr(est_error, 5)})")
        self.panels = panels
        self.est_error = est_error


@dataclass(frozen=True)
class QuadratureResult:
    value: object  # mpf
    est_error: object  # mpf, >= 0
    panels: int


@lru_cache(maxsize=None)
def mp_context(dps: int) -> mpmath.MPContext:
    """A private mpmath context at ``dps`` digits (never mutated afterwards)."""
    ctx = mpmath.MPContext()
    ctx.dps = dps
    return ctx


@lru_cache(maxsize=None)
def gl_nodes(dps: int, degree: int) -> tuple:
    """(node, weight) pairs on [-1, 1] with 3 * 2**(degree-1) points."""
    ctx = mp_context(dps)
    return tuple(GaussLegendre(ctx).calc_nodes(degree, ctx.prec))


def _check(result: QuadratureResult, tol) -> QuadratureResult:
    if tol is not None and result.est_error > tol:
        raise QuadratureError("quadrature did not converge", result.panels, result.est_error)
    return result


def panel_quad(ctx: mpmath.MPContext, f: Callable, a, b, max_width, tol=None) -> QuadratureResult:
    """Integral of ``f`` over [a, b] on equal panels no wider than ``max_width``."""
    a, b = ctx.mpf(a), ctx.mpf(b)
    if a == b:
        return QuadratureResult(ctx.zero, ctx.zero, 0)
    if b < a:
        r = panel_quad(ctx, f, b, a, max_width, tol)
        return QuadratureResult(-r.value, r.est_error, r.panels)
    panels = max(1, int(math.ceil(float((b - a) / max_width))))
    h = (b - a) / panels
    lo_nodes = gl_nodes(ctx.dps, _LOW_DEGREE)
    hi_nodes = gl_nodes(ctx.dps, _HIGH_DEGREE)
    lo = hi = ctx.zero
    for p in range(panels):
        mid = a + (p + ctx.mpf(0.5)) * h
        half = h / 2
        lo += ctx.fsum(w * f(mid + half * u) for u, w in lo_nodes) * half
        hi += ctx.fsum(w * f(mid + half * u) for u, w in hi_nodes) * half
    return _check(QuadratureResult(hi, abs(hi - lo), panels), tol)


def sine_ratio_integral(ctx: mpmath.MPContext, weight: Callable, x, k: int, tol=None) -> QuadratureResult:
    """Integral over [0, x] of ``weight(t) * sin(2kt) / sin(t)``, 0 <= x < pi.

    At t = 0 the ratio takes its limit 2k. Panels have width pi/(2k) and
    start at 0, so on panel p, sin(2kt) = (-1)^p cos(pi*u/2) at the local
    node u; only sin(t) and the weight are evaluated per node.
    """
    x = ctx.mpf(x)
    if k < 1:
        raise ValueError("k must be >= 1")
    if x < 0 or x >= ctx.pi:
        raise ValueError("x must lie in [0, pi)")
    if x == 0:
        return QuadratureResult(ctx.zero, ctx.zero, 0)

    def ratio(t):
        if t == 0:
            return ctx.mpf(2 * k) * weight(t)
        return weight(t) * ctx.sin(2 * k * t) / ctx.sin(t)

    h = ctx.pi / (2 * k)
    ratio_panels = x / h
    full = int(ctx.nint(ratio_panels))
    if abs(ratio_panels - full) > ctx.mpf(10) ** (10 - ctx.dps):
        full = int(ctx.floor(ratio_panels))
    half = h / 2
    # per rule: (offset, weight * sin(2kt) sign-free factor, cos(offset), sin(offset))
    rules = []
    for degree in (_LOW_DEGREE, _HIGH_DEGREE):
        rules.append([
            (half * u, w * ctx.cos(ctx.pi * u / 2), ctx.cos(half * u), ctx.sin(half * u))
            for u, w in gl_nodes(ctx.dps, degree)
        ])
    lo = hi = ctx.zero
    for p in range(full):
        mid = (p + ctx.mpf(0.5)) * h
        sm, cm = ctx.sin(mid), ctx.cos(mid)
        sums = []
        for rule in rules:
            # sin(mid + d) = sin(mid) cos(d) + cos(mid) sin(d)
            sums.append(ctx.fsum(
                ws * weight(mid + d) / (sm * cd + cm * sd) for d, ws, cd, sd in rule
            ))
        if p % 2:
            lo -= sums[0]
            hi -= sums[1]
        else:
            lo += sums[0]
            hi += sums[1]
    lo *= half
    hi *= half
    est = abs(hi - lo)
    panels = full
    if x - full * h > h * ctx.mpf(10) ** (10 - ctx.dps):
        tail = panel_quad(ctx, ratio, full * h, x, h)
        hi += tail.value
        est += tail.est_error
        panels += tail.panels
    return _check(QuadratureResult(hi, est, panels), tol)
