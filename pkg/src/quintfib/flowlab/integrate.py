"""Flow integration and fiber transport.

The flow of V moves the level f = 0 (the large complex limit) to the level
f = t; reaching f = 1/(5 psi) with Im(s) = 0 lands exactly on the smooth
pencil member.  Along the way Im(s) is conserved and df/dt = 1, so both
drifts measure pure integrator error; the acceptance bar is 1e-8 drift at
tolerance 1e-10.

Integration runs on the real 8-dimensional form of the chart with an
adaptive embedded Runge-Kutta 4(5) scheme (scipy's RK45); a terminal event
halts trajectories that enter the guard zone around the singular surface,
where the field genuinely blows up and the continuation is out of scope.
"""

from dataclasses import dataclass, replace

import numpy as np
from scipy.integrate import solve_ivp

from .gradient import FlowConfig, SigmaGuardError, grad_V, metric_inverse, omega_value
from .points import (AffinePoint, coord_indices, eval_s, from_homogeneous,
                     quintic_gradient, quintic_value, s_gradient)


@dataclass(frozen=True)
class FlowDiagnostics:
    im_s_drift: float
    f_drift: float
    reason: str
    t_reached: float
    n_steps: int


def _to_real(x):
    return np.concatenate([x.real, x.imag])


def _to_complex(y):
    return y[:4] + 1j * y[4:]


def flow(p0, t_target, cfg=None, n_checkpoints=33):
    """Integrate the normalized gradient flow for time t_target.

    Returns (endpoint, diagnostics).  The time parameter is the value of f
    itself, so f(end) - f(start) = t_target up to integrator error; Im(s)
    drift is monitored at checkpoints along the accepted solution.
    Termination reasons: 'reached_target', 'sigma_guard_hit',
    'step_underflow'.
    """
    cfg = cfg or FlowConfig()
    if t_target == 0.0:
        return p0, FlowDiagnostics(0.0, 0.0, "reached_target", 0.0, 0)
    chart = p0.chart
    s0 = eval_s(p0)

    def rhs(t, y):
        p = AffinePoint(chart, tuple(_to_complex(y)))
        v = grad_V(p, cfg)
        return _to_real(v)

    def guard_event(t, y):
        p = AffinePoint(chart, tuple(_to_complex(y)))
        ds = s_gradient(p)
        v = metric_inverse(p, cfg.metric) @ ds.conj()
        return float(np.real(np.sum(ds * v))) - 2.0 * cfg.sigma_guard

    guard_event.terminal = True
    guard_event.direction = -1

    try:
        sol = solve_ivp(rhs, (0.0, t_target), _to_real(p0.array()),
                        method="RK45", rtol=cfg.rtol, atol=cfg.atol,
                        max_step=cfg.max_step, events=guard_event, dense_output=True)
    except SigmaGuardError as err:
        raise SigmaGuardError(err.norm_sq, p0) from err
    if sol.status == 1:
        reason = "sigma_guard_hit"
    elif sol.status == 0:
        reason = "reached_target"
    else:
        reason = "step_underflow"
    t_end = float(sol.t[-1])
    endpoint = AffinePoint(chart, tuple(_to_complex(sol.y[:, -1])))
    ts = np.linspace(0.0, t_end, n_checkpoints)
    im_drift = 0.0
    f_drift = 0.0
    for t in ts:
        p = AffinePoint(chart, tuple(_to_complex(sol.sol(t))))
        s = eval_s(p)
        im_drift = max(im_drift, abs(s.imag - s0.imag))
        f_drift = max(f_drift, abs(s.real - s0.real - t))
    return endpoint, FlowDiagnostics(im_drift, f_drift, reason, t_end,
                                     int(sol.t.size))


def newton_project_to_quintic(p, psi, tol=1e-14, max_iter=60):
    """Project a near-solution onto the smooth member by damped Newton.

    Newton steps for the single defining equation move along the conjugate
    gradient direction; this is the independent endpoint oracle.  Returns
    (projected point, total displacement).
    """
    x = p.array()
    moved = 0.0
    for _ in range(max_iter):
        val = np.sum(x ** 5) + 1.0 - 5.0 * psi * np.prod(x)
        scale = 1.0 + float(np.max(np.abs(x))) ** 5
        if abs(val) <= tol * scale:
            break
        g = np.empty(4, dtype=complex)
        for i in range(4):
            g[i] = 5.0 * x[i] ** 4 - 5.0 * psi * np.prod(np.delete(x, i))
        gn = float(np.sum(np.abs(g) ** 2))
        if gn == 0.0:
            raise ArithmeticError("vanishing gradient in Newton projection")
        step = -val * g.conj() / gn
        x = x + step
        moved += float(np.linalg.norm(step))
    return AffinePoint(p.chart, tuple(x)), moved


def distance_to_quintic(p, psi):
    """Displacement of the Newton projection onto the smooth member."""
    return newton_project_to_quintic(p, psi)[1]


@dataclass(frozen=True)
class TorusFiber:
    """A torus fiber of the large complex limit over a face interior.

    zero_set lists the vanishing homogeneous coordinates (the face); radii
    fixes the moduli of the others, with the largest one normalizing the
    chart.  One face index gives the generic 3-torus; two give the 2-torus
    whose points each sweep out a circle under the flow.
    """

    zero_set: frozenset
    radii: dict

    def __post_init__(self):
        zs = frozenset(self.zero_set)
        object.__setattr__(self, "zero_set", zs)
        if not zs or len(zs) > 2:
            raise ValueError("supported faces have one or two vanishing coordinates")
        want = {i for i in range(1, 6)} - zs
        if set(self.radii) != want:
            raise ValueError(f"radii must be given exactly for {sorted(want)}")
        if any(r <= 0 for r in self.radii.values()):
            raise ValueError("radii must be positive")

    def point(self, angles):
        """Fiber point for given angles; the largest-radius coordinate is
        normalized and its angle dropped."""
        anchor = max(self.radii, key=lambda i: (self.radii[i], i))
        free = [i for i in sorted(self.radii) if i != anchor]
        if len(angles) != len(free):
            raise ValueError(f"expected {len(free)} angles")
        z = np.zeros(5, dtype=complex)
        z[anchor - 1] = self.radii[anchor]
        for t, i in zip(angles, free):
            z[i - 1] = self.radii[i] * np.exp(1j * t)
        return from_homogeneous(z, chart=anchor)

    @property
    def angle_arity(self):
        return 4 - len(self.zero_set)


@dataclass(frozen=True)
class TransportResult:
    points: tuple
    im_s_max: float
    f_drift_max: float
    lagrangian_defect: float
    flagged: tuple
    quintic_distance_max: float


def transport_fiber(fiber, psi, n_samples, cfg=None, seed=0, n_probes=12,
                    fd_angle=1e-4):
    """Carry a fiber of the large complex limit onto the smooth member.

    Samples the fiber's angles, flows every sample for time 1/(5 psi), and
    reports the transported cloud with its conservation drifts, the maximal
    Newton-projection distance to the member, and the Lagrangian defect.

    The defect is measured against the Kahler form of the configured
    metric: at probe samples the transported fiber's tangent vectors are
    estimated by finite differences in the fiber angles, the flow direction
    is appended, and the largest normalized pairing among all pairs is
    returned.  The flow's Lagrangian property holds for the same metric
    that defines the gradient, so the config should pair them (the default
    here is the ambient Fubini-Study choice).
    """
    cfg = cfg or FlowConfig(psi=psi, metric="fubini-study")
    if cfg.psi != psi:
        cfg = replace(cfg, psi=psi)
    rng = np.random.default_rng(seed)
    arity = fiber.angle_arity
    t_target = cfg.flow_target_time
    angle_sets = [tuple(rng.uniform(0.0, 2.0 * np.pi, arity))
                  for _ in range(n_samples)]

    def transport(angles):
        return flow(fiber.point(angles), t_target, cfg)

    points = []
    flagged = []
    im_max = 0.0
    f_max = 0.0
    dist_max = 0.0
    for idx, angles in enumerate(angle_sets):
        try:
            q, diag = transport(angles)
        except SigmaGuardError:
            flagged.append(idx)
            continue
        if diag.reason != "reached_target":
            flagged.append(idx)
            continue
        points.append(q)
        im_max = max(im_max, diag.im_s_drift, abs(eval_s(q).imag))
        f_max = max(f_max, diag.f_drift)
        dist_max = max(dist_max, distance_to_quintic(q, psi))

    defect = 0.0
    for angles in angle_sets[:n_probes]:
        try:
            base, diag = transport(angles)
            if diag.reason != "reached_target":
                continue
            tangents = []
            for a in range(arity):
                shifted = list(angles)
                shifted[a] += fd_angle
                moved, d2 = transport(tuple(shifted))
                if d2.reason != "reached_target":
                    raise SigmaGuardError(0.0, moved)
                tangents.append((moved.array() - base.array()) / fd_angle)
            tangents.append(grad_V(base, cfg))
        except SigmaGuardError:
            continue
        for a in range(len(tangents)):
            for b in range(a + 1, len(tangents)):
                u, v = tangents[a], tangents[b]
                pairing = abs(omega_value(base, u, v, cfg.metric))
                nu = np.linalg.norm(u) * np.linalg.norm(v)
                if nu > 0:
                    defect = max(defect, pairing / nu)
    return TransportResult(tuple(points), im_max, f_max, defect,
                           tuple(flagged), dist_max)


def circle_collapse_winding(pair, radii, psi, eps=1e-3, n_phi=48, cfg=None,
                            track_index=None):
    """Winding of the circle swept by one point of a codimension-2 fiber.

    For a face with two vanishing coordinates, a point of the 2-torus fiber
    deforms to a circle: perturb one vanishing coordinate to eps*e^{i phi},
    flow each perturbed point onto the smooth member, and measure the
    winding of that coordinate's argument at the endpoints as phi sweeps a
    full turn.  A unit winding certifies the extra circle.
    """
    pair = sorted(pair)
    if len(pair) != 2:
        raise ValueError("expected a face with two vanishing coordinates")
    track = pair[0] if track_index is None else track_index
    other = pair[1] if track == pair[0] else pair[0]
    cfg = cfg or FlowConfig(psi=psi)
    t_target = cfg.flow_target_time
    live = sorted(set(range(1, 6)) - set(pair))
    anchor = live[-1]
    args = []
    for phi in np.linspace(0.0, 2.0 * np.pi, n_phi, endpoint=False):
        z = np.zeros(5, dtype=complex)
        for pos, i in enumerate(live):
            z[i - 1] = radii[i] if i in radii else 1.0
        z[live[0] - 1] *= np.exp(0.37j)  # generic fixed phase
        z[track - 1] = eps * np.exp(1j * phi)
        z[other - 1] = 0.0
        p = from_homogeneous(z, chart=anchor)
        q, diag = flow(p, t_target, cfg)
        if diag.reason != "reached_target":
            raise SigmaGuardError(0.0, p)
        zq = q.homogeneous()
        args.append(np.angle(zq[track - 1]))
    args = np.unwrap(np.array(args + [args[0]]))
    return float((args[-1] - args[0]) / (2.0 * np.pi))
