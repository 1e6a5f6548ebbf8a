import warnings

import numpy as np
import pytest

from quintfib import flowlab as fl
from quintfib.basecomplex import FattenedStratum, classify_fattened


# ------------------------------------------------------------------ pairings

def test_pairing_delta_pattern_chart_12():
    # <gamma_12^k, alpha_l2> = delta_kl for l outside the pair
    assert fl.loop_pairing((1, 2, 3), (3, 2)) == 1
    assert fl.loop_pairing((1, 2, 3), (4, 2)) == 0
    assert fl.loop_pairing((1, 2, 3), (5, 2)) == 0


def test_pairing_divisor_column():
    assert fl.loop_pairing((1, 2, 3), (1, 2)) == -1
    assert fl.loop_pairing((1, 2, 4), (1, 2)) == -1


def test_pairing_matrix_two_charts():
    for (i, j) in ((1, 2), (5, 4)):
        for k in sorted(set(range(1, 6)) - {i, j}):
            for l in sorted(set(range(1, 6)) - {j}):
                res = fl.loop_pairing_detailed((i, j, k), (l, j))
                want = -1 if l == i else (1 if l == k else 0)
                assert res.value == want
                assert res.residue < 1e-6


def test_pairing_residue_is_tiny():
    res = fl.loop_pairing_detailed((1, 2, 3), (3, 2))
    assert res.residue < 1e-9


def test_pairing_rejects_degenerate_input():
    with pytest.raises(ValueError):
        fl.loop_pairing((1, 1, 3), (3, 2))
    with pytest.raises(ValueError):
        fl.loop_pairing((1, 2, 3), (2, 2))


def test_pairing_near_pole_reported():
    # a huge pencil parameter drives the tracked root onto the form's pole
    with pytest.raises(ArithmeticError, match="pole"):
        fl.loop_pairing((1, 2, 3), (1, 2), psi=1e7)


# ------------------------------------------------------------ covering counts

def test_covering_interior_point():
    assert fl.covering_count(1.0, 1.0) == 50


def test_covering_edge_point():
    r = 2.0 ** (-1.0 / 5.0)
    assert fl.covering_count(r, r) == 25


def test_covering_vertex_points():
    assert fl.covering_count(1.0, 0.0) == 5
    assert fl.covering_count(0.0, 1.0) == 5


def test_covering_outside_warns_zero():
    with warnings.catch_warnings(record=True) as log:
        warnings.simplefilter("always")
        assert fl.covering_count(0.5, 0.5) == 0
    assert len(log) == 1


def test_covering_random_interior_points():
    rng = np.random.default_rng(31)
    found = 0
    while found < 8:
        r1, r2 = rng.uniform(0.7, 1.6, 2)
        if classify_fattened(r1, r2) != FattenedStratum.INTERIOR2:
            continue
        found += 1
        assert fl.covering_count(r1, r2) == 50


def test_covering_other_edge_branch():
    # r1^5 = r2^5 + 1 boundary
    r2 = 1.1
    r1 = (r2 ** 5 + 1.0) ** 0.2
    assert classify_fattened(r1, r2) == FattenedStratum.EDGE1
    assert fl.covering_count(r1, r2) == 25


def test_covering_stable_under_tol_halving():
    for (r1, r2) in ((1.0, 1.0), (1.0, 1.1)):
        a = fl.covering_count(r1, r2, tol=1e-9)
        b = fl.covering_count(r1, r2, tol=5e-10)
        assert a == b


def test_covering_roots_satisfy_equation():
    roots = fl.covering_roots(1.0, 1.1)
    assert len(roots) == 50
    for t1, t2 in roots:
        val = 1.0 ** 5 * np.exp(5j * t1) + 1.1 ** 5 * np.exp(5j * t2) + 1.0
        assert abs(val) < 1e-7


def test_covering_roots_respect_phase_translation():
    """The solution set is invariant under the order-5 phase translations."""
    roots = fl.covering_roots(1.0, 1.0)
    shift = 2.0 * np.pi / 5.0
    def close(a, b):
        d = np.abs(np.asarray(a) - np.asarray(b))
        d = np.minimum(d, 2 * np.pi - d)
        return np.hypot(*d) < 1e-5
    for t1, t2 in roots[:10]:
        shifted = ((t1 + shift) % (2 * np.pi), t2)
        assert any(close(shifted, r) for r in roots)


# ------------------------------------------------------- special Lagrangians

def test_hl_map_values():
    z = np.array([1.0 + 0j, 1.0j, 1.0])
    f = fl.hl_map(z)
    assert np.allclose(f, [1.0, 0.0, 0.0])


def test_hl_probe_defect_small():
    res = fl.hl_fiber_probe((0.0, 1.0, 1.0), n_samples=64, seed=0)
    assert res.slag_defect < 1e-6


def test_hl_probe_generic_smooth_target():
    res = fl.hl_fiber_probe((0.4, 1.0, 0.7), n_samples=32, seed=1)
    assert res.classification == ("smooth", None)
    assert res.slag_defect < 1e-6


def test_hl_calibration_phase_constant_across_samples():
    # the defect already bounds phase wobble; spot check the reported phase
    res = fl.hl_fiber_probe((0.0, 2.0, 0.5), n_samples=48, seed=2)
    assert res.slag_defect < 1e-6


def test_hl_origin_classification_and_rank_drop():
    res = fl.hl_fiber_probe((0.0, 0.0, 0.0), n_samples=100, seed=3)
    assert res.classification == ("singular", "origin")
    assert res.axis_ranks == (1, 1, 1)
    assert len(res.generic_ranks) >= 100
    assert all(r == 3 for r in res.generic_ranks)


def test_hl_singular_branch_membership():
    assert fl.classify_hl_target((0.0, -1.0, 0.0)) == ("singular", "axis-2")
    assert fl.classify_hl_target((0.0, 0.0, -2.0)) == ("singular", "axis-3")
    assert fl.classify_hl_target((0.0, 1.0, 1.0)) == ("singular", "diagonal")
    assert fl.classify_hl_target((0.3, 1.0, 1.0)) == ("smooth", None)


def test_hl_axis_samples_have_rank_drop():
    for z in (np.array([1.5 + 0j, 0, 0]), np.array([0, 1.5 + 0j, 0]),
              np.array([0, 0, 1.5 + 0j])):
        assert fl.hl_jacobian_rank(z) < 3


def test_hl_fiber_samples_satisfy_constraints():
    rng = np.random.default_rng(9)
    c = (0.2, 0.8, -0.3)
    for z, _ in fl.sample_hl_fiber(c, 25, rng):
        assert np.allclose(fl.hl_map(z), c, atol=1e-10)
