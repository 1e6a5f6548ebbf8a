"""The normalized gradient field of f = Re(s).

A real tangent vector at a chart point is represented by four complex
components (du/dt + i dv/dt per coordinate).  For a Kahler metric written
as Re(w'^H H w) with H Hermitian (H = I is the chart-flat metric), the
gradient of f = Re(s) is H^{-1} conj(ds), the squared gradient norm is
Re(sum ds_i (H^{-1} conj(ds))_i), and the normalized field

    V = grad(f) / |grad(f)|^2

satisfies df/dt = 1 and conserves Im(s) along its flow for any such
metric.  V blows up on the singular surface where ds = 0; a configurable
guard halts anything that wanders too close.
"""

from dataclasses import dataclass

import numpy as np

from .points import AffinePoint, PoleError, eval_s, s_gradient


class SigmaGuardError(ArithmeticError):
    """Flow or gradient evaluation entered the guard zone around the
    singular surface; carries the offending squared gradient norm."""

    def __init__(self, norm_sq, where):
        super().__init__(f"|grad f|^2 = {norm_sq:.3e} below guard at {where}")
        self.norm_sq = norm_sq
        self.where = where


@dataclass(frozen=True)
class FlowConfig:
    """Step control, guard and metric choice for the flow integrator."""

    psi: float = 10.0
    rtol: float = 1e-10
    atol: float = 1e-10
    max_step: float = np.inf
    sigma_guard: float = 1e-8
    metric: str = "chart-flat"

    def __post_init__(self):
        if self.metric not in ("chart-flat", "fubini-study"):
            raise ValueError(f"unknown metric {self.metric!r}")
        if self.sigma_guard <= 0 or self.rtol <= 0 or self.atol <= 0:
            raise ValueError("tolerances and guard must be positive")

    @property
    def flow_target_time(self):
        # s equals 1/(5 psi) on the smooth member, 0 on the large complex limit
        return 1.0 / (5.0 * self.psi)


def metric_matrix(p, metric="chart-flat"):
    """Hermitian matrix H of the metric in the chart, Re(w'^H H w) form."""
    if metric == "chart-flat":
        return np.eye(4, dtype=complex)
    if metric == "fubini-study":
        x = p.array()
        a = 1.0 + float(np.sum(np.abs(x) ** 2))
        return (a * np.eye(4, dtype=complex) - np.outer(x, x.conj())) / a ** 2
    raise ValueError(f"unknown metric {metric!r}")


def metric_inverse(p, metric="chart-flat"):
    if metric == "chart-flat":
        return np.eye(4, dtype=complex)
    if metric == "fubini-study":
        x = p.array()
        a = 1.0 + float(np.sum(np.abs(x) ** 2))
        return a * (np.eye(4, dtype=complex) + np.outer(x, x.conj()))
    raise ValueError(f"unknown metric {metric!r}")


def _raw_gradient_norm_sq(p, metric="chart-flat"):
    ds = s_gradient(p)
    v = metric_inverse(p, metric) @ ds.conj()
    return float(np.real(np.sum(ds * v)))


def grad_V(p, cfg=None):
    """The normalized gradient vector V at a point, as a complex 4-vector.

    Raises the guard error when |grad f|^2 falls below cfg.sigma_guard,
    which happens near the singular surface where the field is genuinely
    singular; a pole of s itself (the surface sits inside the pole set) is
    reported the same way.
    """
    cfg = cfg or FlowConfig()
    try:
        ds = s_gradient(p)
    except PoleError:
        raise SigmaGuardError(0.0, p) from None
    v = metric_inverse(p, cfg.metric) @ ds.conj()
    norm_sq = float(np.real(np.sum(ds * v)))
    if norm_sq <= cfg.sigma_guard:
        raise SigmaGuardError(norm_sq, p)
    return v / norm_sq


def closed_form_V_D4(p):
    """Closed form of V on the x4 = 0 divisor slice in chart 5, flat metric.

    There the only nonvanishing partial of s is along x4 and
    V = ((x1^5 + x2^5 + x3^5 + 1) / (x1 x2 x3)) in the x4 slot.
    """
    if p.chart != 5:
        raise ValueError("closed form stated in chart 5")
    x = p.array()
    if abs(x[3]) > 1e-14:
        raise ValueError("closed form applies on the x4 = 0 slice")
    head = x[:3]
    v4 = (np.sum(head ** 5) + 1.0) / np.prod(head)
    return np.array([0.0, 0.0, 0.0, v4], dtype=complex)


def finite_difference_gradient(p, metric="chart-flat", h=1e-6):
    """Central-difference Euclidean gradient of f = Re(s), as the oracle.

    Returns the complex representation (df/du_i + i df/dv_i), transformed
    by the inverse metric so it is comparable with the analytic gradient.
    """
    base = list(p.coords)
    g = np.empty(4, dtype=complex)
    for i in range(4):
        for part, unit in ((0, 1.0), (1, 1j)):
            plus = list(base)
            minus = list(base)
            plus[i] = base[i] + h * unit
            minus[i] = base[i] - h * unit
            fp = np.real(eval_s(AffinePoint(p.chart, tuple(plus))))
            fm = np.real(eval_s(AffinePoint(p.chart, tuple(minus))))
            d = (fp - fm) / (2.0 * h)
            if part == 0:
                g[i] = d
            else:
                g[i] = g[i] + 1j * d
    return metric_inverse(p, metric) @ g


def omega_value(p, u, v, metric="chart-flat"):
    """The Kahler form on two real tangent vectors (complex representation)."""
    h = metric_matrix(p, metric)
    return float(np.imag(np.conj(u) @ (h @ v)))
