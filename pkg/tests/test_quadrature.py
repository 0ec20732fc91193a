import pytest

from beta_exact.quadrature import QuadratureError, mp_context, panel_quad, sine_ratio_integral

ctx = mp_context(40)
TIGHT = ctx.mpf("1e-35")


def leibniz(k):
    return 2 * ctx.fsum(ctx.mpf((-1) ** (i + 1)) / (2 * i - 1) for i in range(1, k + 1))


def test_panel_quad_cosine():
    r = panel_quad(ctx, lambda t: ctx.cos(20 * t), 0, 1, ctx.pi / 40)
    assert abs(r.value - ctx.sin(20) / 20) < TIGHT
    assert r.panels == 13  # ceil(40 / pi)
    assert r.est_error >= 0


def test_panel_quad_orientation_and_empty():
    fwd = panel_quad(ctx, ctx.exp, 0, 2, 0.5)
    back = panel_quad(ctx, ctx.exp, 2, 0, 0.5)
    assert back.value == -fwd.value
    assert abs(fwd.value - (ctx.e**2 - 1)) < TIGHT
    assert panel_quad(ctx, ctx.exp, 1, 1, 0.5).value == 0


@pytest.mark.parametrize("k", [1, 2, 5, 50, 300])
def test_sine_ratio_matches_leibniz_partial_sums(k):
    # integral over [0, pi/2] of sin(2kt)/sin t = 2 * sum_{i<=k} (-1)^(i+1)/(2i-1)
    r = sine_ratio_integral(ctx, lambda t: 1, ctx.pi / 2, k)
    assert abs(r.value - leibniz(k)) < TIGHT
    assert r.panels == k


@pytest.mark.parametrize("x, k", [("1.0", 7), ("0.3", 40), ("2.5", 3)])
def test_sine_ratio_matches_generic_panels(x, k):
    x = ctx.mpf(x)
    fast = sine_ratio_integral(ctx, lambda t: (x - t) ** 2, x, k)
    slow = panel_quad(ctx, lambda t: (x - t) ** 2 * ctx.sin(2 * k * t) / ctx.sin(t), 0, x,
                      ctx.pi / (2 * k))
    assert abs(fast.value - slow.value) < TIGHT


def test_sine_ratio_removable_point_and_domain():
    assert sine_ratio_integral(ctx, lambda t: 1, 0, 4).value == 0
    # right next to the removable point the ratio is 2k
    tiny = sine_ratio_integral(ctx, lambda t: 1, ctx.mpf("1e-30"), 3)
    assert abs(tiny.value - 6 * ctx.mpf("1e-30")) < ctx.mpf("1e-55")
    with pytest.raises(ValueError):
        sine_ratio_integral(ctx, lambda t: 1, 4, 3)
    with pytest.raises(ValueError):
        sine_ratio_integral(ctx, lambda t: 1, 1, 0)


def test_non_convergence_reports_panels():
    with pytest.raises(QuadratureError) as info:
        panel_quad(ctx, lambda t: abs(t - ctx.mpf("0.3")), 0, 1, 1, tol=ctx.mpf("1e-30"))
    assert info.value.panels == 1
    assert "panels=1" in str(info.value)
