import numpy as np
import pytest

from quintfib import flowlab as fl


def test_eval_s_zero_coordinate():
    p = fl.AffinePoint(5, (1.0, 2.0, 0.5, 0.0))
    assert fl.eval_s(p) == 0.0


def test_eval_s_symmetric_point():
    p = fl.AffinePoint(5, (1.0, 1.0, 1.0, 1.0))
    assert abs(fl.eval_s(p) - 0.2) < 1e-15


def test_eval_s_on_member_is_reciprocal_level():
    psi = 10.0
    p0 = fl.random_x_infinity_point(np.random.default_rng(8))
    q, _ = fl.newton_project_to_quintic(
        fl.AffinePoint(p0.chart, tuple(np.array(p0.coords) + 0.05)), psi)
    assert abs(fl.eval_s(q) - 1.0 / (5.0 * psi)) < 1e-10


def test_eval_s_chart_independence():
    rng = np.random.default_rng(2)
    for _ in range(20):
        z = rng.normal(size=5) + 1j * rng.normal(size=5)
        p = fl.AffinePoint(1, tuple(z[1:] / z[0]))
        s1 = fl.eval_s(p)
        for chart in (2, 3, 4, 5):
            s2 = fl.eval_s(fl.chart_change(p, chart))
            assert abs(s1 - s2) <= 1e-12 * max(1.0, abs(s1))


def test_eval_s_pole_reported():
    # a base-locus point: one coordinate a fifth root of -1, the rest zero
    x = (-1.0 + 0j) ** 0.2
    p = fl.AffinePoint(5, (x, 0.0, 0.0, 0.0))
    with pytest.raises(fl.PoleError, match="pole"):
        fl.eval_s(p)


def test_grad_V_closed_form_on_divisor_slice():
    p = fl.AffinePoint(5, (1.0, 1.0, 1.0, 0.0))
    v = fl.grad_V(p, fl.FlowConfig())
    assert np.allclose(v, [0, 0, 0, 4.0], atol=1e-12)
    rng = np.random.default_rng(7)
    for _ in range(10):
        coords = tuple(rng.uniform(0.7, 1.3) * np.exp(1j * rng.uniform(0, 2 * np.pi))
                       for _ in range(3)) + (0.0,)
        p = fl.AffinePoint(5, coords)
        v = fl.grad_V(p, fl.FlowConfig())
        assert np.max(np.abs(v - fl.closed_form_V_D4(p))) < 1e-10


def test_gradient_against_finite_differences():
    rng = np.random.default_rng(1)
    for _ in range(10):
        coords = tuple(rng.uniform(0.7, 1.3) * np.exp(1j * rng.uniform(0, 2 * np.pi))
                       for _ in range(4))
        p = fl.AffinePoint(5, coords)
        g = fl.s_gradient(p).conj()
        g_fd = fl.finite_difference_gradient(p)
        assert np.max(np.abs(g - g_fd)) / np.max(np.abs(g)) < 1e-6


def test_gradient_guard_near_singular_surface():
    # on the curve x1^5 + x2^5 + 1 = 0 with two more zero coordinates the
    # field is genuinely singular
    x1 = 0.9
    x2 = complex(-1.0 - x1 ** 5) ** 0.2
    p = fl.AffinePoint(5, (x1, x2, 0.0, 0.0))
    with pytest.raises(fl.SigmaGuardError):
        fl.grad_V(p, fl.FlowConfig())


def test_fubini_study_gradient_norm_positive():
    rng = np.random.default_rng(4)
    cfg = fl.FlowConfig(metric="fubini-study")
    for _ in range(10):
        p = fl.random_x_infinity_point(rng)
        v = fl.grad_V(p, cfg)
        assert np.isfinite(v).all()


def test_df_dt_is_one_along_V():
    """Directional derivative of Re(s) along V is 1 for either metric."""
    rng = np.random.default_rng(12)
    h = 1e-7
    for metric in ("chart-flat", "fubini-study"):
        cfg = fl.FlowConfig(metric=metric)
        for _ in range(5):
            p = fl.random_x_infinity_point(rng)
            v = fl.grad_V(p, cfg)
            x = np.array(p.coords)
            fp = np.real(fl.eval_s(fl.AffinePoint(p.chart, tuple(x + h * v))))
            fm = np.real(fl.eval_s(fl.AffinePoint(p.chart, tuple(x - h * v))))
            assert abs((fp - fm) / (2 * h) - 1.0) < 1e-5


def test_im_s_stationary_along_V():
    rng = np.random.default_rng(13)
    h = 1e-7
    for metric in ("chart-flat", "fubini-study"):
        cfg = fl.FlowConfig(metric=metric)
        p = fl.random_x_infinity_point(rng)
        v = fl.grad_V(p, cfg)
        x = np.array(p.coords)
        hp = np.imag(fl.eval_s(fl.AffinePoint(p.chart, tuple(x + h * v))))
        hm = np.imag(fl.eval_s(fl.AffinePoint(p.chart, tuple(x - h * v))))
        assert abs((hp - hm) / (2 * h)) < 1e-5


def test_moment_map_fs_origin_and_simplex():
    p = fl.AffinePoint(5, (0.0, 0.0, 0.0, 0.0))
    assert np.allclose(fl.moment_maps(p, "fubini-study"), 0.0)
    rng = np.random.default_rng(3)
    for _ in range(100):
        coords = tuple(rng.normal() + 1j * rng.normal() for _ in range(4))
        val = fl.moment_maps(fl.AffinePoint(5, coords), "fubini-study")
        assert (val >= 0).all()
        assert val.sum() < 1.0


def test_moment_map_log_units():
    p = fl.AffinePoint(5, (1.0, 1.0j, -1.0, np.exp(0.3j)))
    assert np.allclose(fl.moment_maps(p, "log"), 0.0)
    with pytest.raises(ValueError):
        fl.moment_maps(fl.AffinePoint(5, (0.0, 1, 1, 1)), "log")


def test_moment_map_weighted_is_affine_in_log():
    rng = np.random.default_rng(5)
    coords = tuple(rng.uniform(0.5, 2.0) * np.exp(1j * rng.uniform(0, 6))
                   for _ in range(4))
    p = fl.AffinePoint(5, coords)
    t = fl.moment_maps(p, "log")
    w = fl.moment_maps(p, "weighted")
    assert np.allclose(w, 2.0 * t - 0.4 * t.sum())


def test_unknown_moment_map():
    with pytest.raises(ValueError):
        fl.moment_maps(fl.AffinePoint(5, (1, 1, 1, 1)), "symplectic-log")


def test_volume_ratio_constant():
    """The flat potential's Hessian determinant weighted by the coordinate
    moduli is the same at every point (pointwise flat structure check)."""
    rng = np.random.default_rng(6)
    vals = []
    for _ in range(5):
        coords = tuple(rng.uniform(0.6, 1.7) * np.exp(1j * rng.uniform(0, 6))
                       for _ in range(4))
        vals.append(fl.volume_ratio(fl.AffinePoint(5, coords)))
    assert np.allclose(vals, 3.2, atol=1e-5)


def test_chart_change_round_trip():
    p = fl.AffinePoint(2, (0.3 + 0.1j, 1.4, -0.5j, 0.8))
    q = fl.chart_change(fl.chart_change(p, 4), 2)
    assert np.allclose(np.array(q.coords), np.array(p.coords))
