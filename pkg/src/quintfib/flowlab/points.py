"""Affine-chart points on projective 4-space and the pencil's functions.

Chart c sets the homogeneous coordinate z_c to 1; the remaining four
coordinates, in ascending index order, are the chart coordinates.  The
meromorphic ratio s = (prod z_k) / (sum z_k^5) is degree-(5,5) homogeneous,
so its value is chart independent wherever defined.
"""

from dataclasses import dataclass

import numpy as np


class PoleError(ArithmeticError):
    """Raised when evaluating s at (numerically) a pole of the pencil."""


def coord_indices(chart):
    return [i for i in range(1, 6) if i != chart]


@dataclass(frozen=True)
class AffinePoint:
    chart: int
    coords: tuple

    def __post_init__(self):
        if self.chart not in (1, 2, 3, 4, 5):
            raise ValueError("chart index must be 1..5")
        c = tuple(complex(x) for x in self.coords)
        if len(c) != 4:
            raise ValueError("an affine point has four coordinates")
        if not all(np.isfinite([x.real, x.imag]).all() for x in c):
            raise ValueError("coordinates must be finite")
        object.__setattr__(self, "coords", c)

    def homogeneous(self):
        z = np.empty(5, dtype=complex)
        z[self.chart - 1] = 1.0
        for pos, idx in enumerate(coord_indices(self.chart)):
            z[idx - 1] = self.coords[pos]
        return z

    def array(self):
        return np.array(self.coords, dtype=complex)

    def __repr__(self):
        return f"AffinePoint(chart={self.chart}, coords={self.coords})"


def from_homogeneous(z, chart=None):
    z = np.asarray(z, dtype=complex)
    if z.shape != (5,):
        raise ValueError("expected five homogeneous coordinates")
    if chart is None:
        chart = int(np.argmax(np.abs(z))) + 1
    zc = z[chart - 1]
    if zc == 0:
        raise ValueError(f"coordinate {chart} vanishes; cannot normalize")
    return AffinePoint(chart, tuple(z[i - 1] / zc for i in coord_indices(chart)))


def chart_change(p, new_chart):
    """The same projective point in a different chart."""
    return from_homogeneous(p.homogeneous(), new_chart)


def _num_den(p):
    x = p.array()
    return np.prod(x), np.sum(x ** 5) + 1.0


def eval_s(p, pole_tol=1e-13):
    """Value of the meromorphic ratio at an affine point.

    The denominator vanishing means the point sits on the pencil's base
    quintic; that is a pole of s and is reported with the location.
    """
    num, den = _num_den(p)
    scale = 1.0 + float(np.max(np.abs(p.array()))) ** 5
    if abs(den) <= pole_tol * scale:
        raise PoleError(f"pole of s at {p}: denominator {den}")
    return num / den


def s_gradient(p, pole_tol=1e-13):
    """Holomorphic partials of s with respect to the chart coordinates."""
    x = p.array()
    num, den = _num_den(p)
    scale = 1.0 + float(np.max(np.abs(x))) ** 5
    if abs(den) <= pole_tol * scale:
        raise PoleError(f"pole of s at {p}: denominator {den}")
    grads = np.empty(4, dtype=complex)
    for i in range(4):
        others = np.prod(np.delete(x, i))
        grads[i] = (others * den - num * 5.0 * x[i] ** 4) / den ** 2
    return grads


def quintic_value(p, psi):
    """Defining polynomial of the smooth member, in chart coordinates."""
    x = p.array()
    return np.sum(x ** 5) + 1.0 - 5.0 * psi * np.prod(x)


def quintic_gradient(p, psi):
    x = p.array()
    g = np.empty(4, dtype=complex)
    for i in range(4):
        g[i] = 5.0 * x[i] ** 4 - 5.0 * psi * np.prod(np.delete(x, i))
    return g


def random_x_infinity_point(rng, grad_floor=1e-3, max_tries=100):
    """Random point on the smooth part of the large complex limit.

    One homogeneous coordinate is set to zero, the others get moduli in
    [0.6, 1.4] and uniform phases; the largest coordinate normalizes the
    chart.  Points too close to the singular surface (tiny gradient of s)
    are rejected.
    """
    from .gradient import _raw_gradient_norm_sq

    for _ in range(max_tries):
        zero_idx = int(rng.integers(1, 6))
        z = np.zeros(5, dtype=complex)
        for i in range(1, 6):
            if i == zero_idx:
                continue
            r = rng.uniform(0.6, 1.4)
            z[i - 1] = r * np.exp(1j * rng.uniform(0.0, 2.0 * np.pi))
        p = from_homogeneous(z)
        try:
            if _raw_gradient_norm_sq(p) > grad_floor:
                return p
        except PoleError:
            continue
    raise RuntimeError("failed to sample a smooth large-complex-limit point")
