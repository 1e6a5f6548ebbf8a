from fractions import Fraction

import numpy as np
import pytest

from quintfib import ratkernel as rk


def test_rank_identity():
    assert rk.rank(rk.identity(3)) == 3


def test_rank_zero_matrix():
    assert rk.rank(rk.zeros(4, 7)) == 0


def test_rank_transpose_invariance():
    rng = np.random.default_rng(11)
    for _ in range(25):
        m = rk.imat(rng.integers(-6, 7, size=(rng.integers(1, 7),
                                              rng.integers(1, 7))))
        assert rk.rank(m) == rk.rank(m.T.copy())


def test_kernel_of_identity_is_empty():
    assert rk.kernel_basis(rk.identity(4)) == []


def test_kernel_of_all_ones_row():
    basis = rk.kernel_basis(rk.imat([[1, 1, 1, 1, 1]]))
    assert len(basis) == 4
    for v in basis:
        assert sum(v) == 0


def test_rank_nullity():
    rng = np.random.default_rng(5)
    for _ in range(25):
        rows, cols = rng.integers(1, 8, 2)
        m = rk.imat(rng.integers(-4, 5, size=(rows, cols)))
        assert rk.rank(m) + len(rk.kernel_basis(m)) == cols


def test_kernel_vectors_annihilate():
    rng = np.random.default_rng(6)
    m = rk.imat(rng.integers(-5, 6, size=(4, 7)))
    for v in rk.kernel_basis(m):
        prod = m @ v
        assert all(x == 0 for x in prod)


def test_solve_and_inverse():
    m = rk.fmat([[2, 1], [1, 1]])
    x = rk.solve(m, [3, 2])
    assert list(x) == [Fraction(1), Fraction(1)]
    inv = rk.inverse(m)
    assert (np.asarray(inv @ m) == np.asarray(rk.identity(2))).all()
    with pytest.raises(ValueError):
        rk.inverse(rk.imat([[1, 2], [2, 4]]))


def test_det_small_cases():
    assert rk.det(rk.imat([[1, 2], [3, 4]])) == -2
    assert rk.int_det(rk.identity(3)) == 1
    assert rk.det(rk.imat([[1, 2], [2, 4]])) == 0


def test_saturate_primitivization():
    assert [list(v) for v in rk.saturate([[5, 0, 0]])] == [[1, 0, 0]]


def test_saturate_empty():
    assert rk.saturate([]) == []


def test_saturate_shear_columns():
    # columns of (standard leg shear - identity)
    assert [list(v) for v in rk.saturate([[-5, 0, 0]])] == [[1, 0, 0]]


def test_saturate_idempotent_and_primitive():
    rng = np.random.default_rng(9)
    for _ in range(40):
        k = int(rng.integers(1, 4))
        vecs = [[int(x) for x in rng.integers(-9, 10, 4)] for _ in range(k)]
        sat = rk.saturate(vecs)
        assert all(rk.is_primitive(v) for v in sat)
        again = rk.saturate([list(v) for v in sat])
        assert [list(v) for v in sat] == [list(v) for v in again]


def test_saturate_preserves_rational_span():
    vecs = [[2, 4, 6], [0, 10, 0]]
    sat = rk.saturate(vecs)
    assert len(sat) == 2
    stacked = rk.imat([list(v) for v in sat] + vecs)
    assert rk.rank(stacked) == 2


def test_smith_normal_form_reconstruction():
    rng = np.random.default_rng(13)
    for _ in range(20):
        rows, cols = rng.integers(1, 6, 2)
        a = rk.imat(rng.integers(-7, 8, size=(rows, cols)))
        d, l, rinv = rk.smith_normal_form(a)
        assert abs(rk.int_det(l)) == 1
        assert abs(rk.int_det(rinv)) == 1
        # D R^-1 = L A
        lhs = np.asarray(d @ rinv)
        rhs = np.asarray(l @ a)
        assert (lhs == rhs).all()
        divs = [int(d[i, i]) for i in range(min(rows, cols)) if d[i, i] != 0]
        for a_, b_ in zip(divs, divs[1:]):
            assert b_ % a_ == 0


def test_sublattice_index():
    assert rk.sublattice_index([[2, 0], [0, 3]]) == 6
    assert rk.sublattice_index([[1, 0]]) is None


def test_determinism():
    m = rk.imat([[3, 1, 4], [1, 5, 9], [2, 6, 5], [3, 5, 8]])
    assert rk.rank(m) == rk.rank(m)
    k1 = rk.kernel_basis(m)
    k2 = rk.kernel_basis(m)
    assert [list(v) for v in k1] == [list(v) for v in k2]
