"""Loop/form pairings on the smooth pencil member.

The cycle with pair (i, j) and winding index k is realized as an honest
circle on the member inside the chart where z_j dominates and z_i is small:
the dominant coordinate is normalized to 1, the spectator coordinates are
frozen at a common radius with generic phases, the k-th coordinate sweeps
a circle of that radius, and z_i rides along as the small root of the
defining quintic (tracked by continuation, so its winding is exact).

Pairing against the logarithmic form d log(z_l / z_m) is the winding
number of z_l / z_m around the loop, accumulated from phase increments.
"""

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class PairingResult:
    value: int
    residue: float
    loop: tuple
    form: tuple
    min_coordinate: float


def _small_root_track(prev, coeff_pairs):
    roots = np.roots(coeff_pairs)
    if prev is None:
        return roots[np.argmin(np.abs(roots))]
    return roots[np.argmin(np.abs(roots - prev))]


def loop_pairing_detailed(loop, form, psi=10.0, n_steps=400, radius=0.75,
                          pole_tol=1e-6):
    """Winding of z_l/z_m along the (i, j, k) cycle, with its residue.

    `loop` is (i, j, k): divisor index i, dominant index j, winding index k.
    `form` is (l, m): the logarithmic form d log(z_l / z_m).
    """
    i, j, k = loop
    l, m = form
    if len({i, j, k}) != 3:
        raise ValueError("loop indices must be distinct")
    if l == m:
        raise ValueError("form indices must be distinct")
    spectators = sorted(set(range(1, 6)) - {i, j, k})
    z = np.zeros(5, dtype=complex)
    z[j - 1] = 1.0
    for t, sp in enumerate(spectators):
        z[sp - 1] = radius * np.exp(1j * (0.4 + 0.9 * t))
    phis = np.linspace(0.0, 2.0 * np.pi, n_steps, endpoint=False)
    ratio_args = []
    min_coord = np.inf
    root = None
    for phi in phis:
        z[k - 1] = radius * np.exp(1j * phi)
        others = np.delete(z, i - 1)
        prod_others = np.prod(others)
        sum_others = np.sum(others ** 5)
        # z_i^5 - 5 psi (prod others) z_i + (sum others^5) = 0
        coeffs = [1.0, 0.0, 0.0, 0.0, -5.0 * psi * prod_others, sum_others]
        root = _small_root_track(root, coeffs)
        z[i - 1] = root
        for idx in (l, m):
            min_coord = min(min_coord, abs(z[idx - 1]))
        ratio_args.append(np.angle(z[l - 1] / z[m - 1]))
    if min_coord < pole_tol:
        raise ArithmeticError(
            f"loop passes within {min_coord:.2e} of a pole of the form")
    closed = np.unwrap(np.array(ratio_args + [ratio_args[0]]))
    winding = (closed[-1] - closed[0]) / (2.0 * np.pi)
    value = int(np.rint(winding))
    return PairingResult(value, float(abs(winding - value)), (i, j, k),
                         (l, m), float(min_coord))


def loop_pairing(loop, form, psi=10.0, n_steps=400, radius=0.75,
                 residue_tol=1e-6):
    """Integer pairing of the (i, j, k) cycle with d log(z_l / z_m)."""
    res = loop_pairing_detailed(loop, form, psi=psi, n_steps=n_steps,
                                radius=radius)
    if res.residue >= residue_tol:
        raise ArithmeticError(
            f"pairing did not converge to an integer: {res.value} + {res.residue:.2e}")
    return res.value
