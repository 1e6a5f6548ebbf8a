"""Covering counts of the singular surface over the fattened discriminant.

Over a face-coordinate point (r1, r2) the fiber torus meets the singular
surface at the solutions of

    r1^5 e^{5 i theta1} + r2^5 e^{5 i theta2} = -1,

50 of them over the fattened interior, 25 over the boundary curves and 5
over the two vertex points (where the fiber is a circle and the equation
is one dimensional).

Localization is a uniform phase grid whose sign-change cells seed a Newton
polish; boundary-curve solutions are tangential (the real part does not
change sign there), so a second pass solves the reduced triangle identity
cos b = (R1^2 - 1 - R2^2)/(2 R2) constructively and merges any roots the
grid pass cannot see.  All roots are verified against the defining
equation and deduplicated on the torus.
"""

import warnings

import numpy as np

from ..basecomplex import FattenedStratum, classify_fattened


def _torus_dist(a, b):
    d = np.abs(np.asarray(a) - np.asarray(b))
    d = np.minimum(d, 2.0 * np.pi - d)
    return float(np.hypot(*d))


def _dedupe(roots, tol):
    out = []
    for r in roots:
        if all(_torus_dist(r, q) > tol for q in out):
            out.append(r)
    return out


def _grid_roots(R1, R2, grid_n, newton_tol):
    th = np.linspace(0.0, 2.0 * np.pi, grid_n, endpoint=False)
    t1, t2 = np.meshgrid(th, th, indexing="ij")
    g = R1 * np.exp(5j * t1) + R2 * np.exp(5j * t2) + 1.0
    re, im = g.real, g.imag

    def rolls(a):
        return a, np.roll(a, -1, 0), np.roll(a, -1, 1), np.roll(np.roll(a, -1, 0), -1, 1)

    re4 = rolls(re)
    im4 = rolls(im)
    sign_change = (np.minimum.reduce(re4) <= 0) & (np.maximum.reduce(re4) >= 0) \
        & (np.minimum.reduce(im4) <= 0) & (np.maximum.reduce(im4) >= 0)
    cells = np.argwhere(sign_change)
    h = 2.0 * np.pi / grid_n
    roots = []
    for a, b in cells:
        x = np.array([th[a] + 0.5 * h, th[b] + 0.5 * h])
        ok = False
        for _ in range(60):
            e1 = np.exp(5j * x[0])
            e2 = np.exp(5j * x[1])
            f = R1 * e1 + R2 * e2 + 1.0
            if abs(f) < newton_tol:
                ok = True
                break
            jac = np.array([[-5 * R1 * e1.imag, -5 * R2 * e2.imag],
                            [5 * R1 * e1.real, 5 * R2 * e2.real]])
            rhs = np.array([f.real, f.imag])
            try:
                step = np.linalg.solve(jac, -rhs)
            except np.linalg.LinAlgError:
                step, *_ = np.linalg.lstsq(jac, -rhs, rcond=None)
            if not np.all(np.isfinite(step)):
                break
            nrm = np.linalg.norm(step)
            if nrm > h:
                step *= h / nrm
            x = np.mod(x + step, 2.0 * np.pi)
        if ok:
            roots.append((float(x[0]), float(x[1])))
    return roots


def _reduced_roots(R1, R2, verify_tol):
    """Constructive solutions from the triangle identity, 25 per (a, b) root."""
    if R2 == 0.0 or R1 == 0.0:
        return []
    cb = (R1 ** 2 - 1.0 - R2 ** 2) / (2.0 * R2)
    if abs(cb) > 1.0 + 1e-12:
        return []
    cb = min(1.0, max(-1.0, cb))
    out = []
    for b in sorted({np.arccos(cb), -np.arccos(cb) % (2.0 * np.pi)}):
        target = -1.0 - R2 * np.exp(1j * b)
        a = float(np.angle(target) % (2.0 * np.pi))
        if abs(R1 * np.exp(1j * a) + R2 * np.exp(1j * b) + 1.0) > verify_tol:
            continue
        for ma in range(5):
            for mb in range(5):
                out.append((((a + 2.0 * np.pi * ma) / 5.0) % (2.0 * np.pi),
                            ((b + 2.0 * np.pi * mb) / 5.0) % (2.0 * np.pi)))
    return out


def covering_roots(r1, r2, tol=1e-9, grid_n=400):
    """All torus solutions over a fattened-interior or boundary point."""
    R1, R2 = float(r1) ** 5, float(r2) ** 5
    newton_tol = max(1e-12, 10.0 * tol * (R1 + R2 + 1.0))
    roots = _grid_roots(R1, R2, grid_n, newton_tol)
    roots += _reduced_roots(R1, R2, verify_tol=1e-7 * (R1 + R2 + 1.0))
    dedupe_tol = max(1e-6, 2.0 * np.sqrt(newton_tol))
    return _dedupe(roots, dedupe_tol)


def covering_count(r1, r2, tol=1e-9, grid_n=400):
    """Number of intersection points of the fiber with the singular surface.

    The stratum of (r1, r2) is classified first: vertex points use the
    one-dimensional reduction (the fiber there is a circle), points outside
    the fattened region return zero with a warning.
    """
    stratum = classify_fattened(r1, r2, tol=max(tol, 1e-12))
    if stratum == FattenedStratum.OUTSIDE:
        warnings.warn(f"({r1}, {r2}) lies outside the fattened discriminant")
        return 0
    if stratum == FattenedStratum.VERTEX0:
        # r1^5 e^{5 i theta} = -1 on the unit circle: five phases
        return 5
    return len(covering_roots(r1, r2, tol=tol, grid_n=grid_n))
