"""Exact linear algebra over Q and Z.

Everything here is exact: matrices are numpy object arrays whose entries are
Python ints or fractions.Fraction (arbitrary precision, always in lowest
terms, positive denominators).  No floating point enters any code path.

Rank and kernels use Gaussian elimination with exact pivoting; lattice
saturation goes through Smith normal form.  Matrices in this problem are at
most a few hundred rows/columns, so asymptotics are irrelevant and
correctness is everything.

All functions are pure and re-entrant; results are bit-identical across runs.
"""

from fractions import Fraction
from math import gcd

import numpy as np


def fmat(rows):
    """Object-dtype matrix with Fraction entries from nested iterables."""
    a = np.array([[Fraction(x) for x in row] for row in rows], dtype=object)
    if a.ndim != 2:
        raise ValueError("expected a 2-d array of entries")
    return a


def imat(rows):
    """Object-dtype matrix with exact int entries from nested iterables."""
    a = np.array([[int(x) for x in row] for row in rows], dtype=object)
    if a.ndim != 2:
        raise ValueError("expected a 2-d array of entries")
    return a


def identity(n):
    m = np.zeros((n, n), dtype=object)
    for i in range(n):
        m[i, i] = 1
    return m


def zeros(r, c):
    m = np.empty((r, c), dtype=object)
    m[:] = 0
    return m


def _as_object(m):
    a = np.asarray(m, dtype=object)
    if a.ndim != 2:
        raise ValueError("expected a matrix (2-d array)")
    return a.copy()


def rref(m):
    """Reduced row echelon form over Q.

    Returns (R, pivots) where pivots is the tuple of pivot column indices.
    Pivot choice: in each column, the entry of smallest nonzero absolute
    value (exact pivoting keeps intermediate entries small on the
    incidence-type matrices this package produces).
    """
    a = _as_object(m)
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        best = None
        for i in range(r, rows):
            v = a[i, c]
            if v != 0 and (best is None or abs(v) < abs(a[best, c])):
                best = i
        if best is None:
            continue
        if best != r:
            a[[r, best]] = a[[best, r]]
        piv = a[r, c]
        if piv != 1:
            a[r] = a[r] * Fraction(1, 1) / piv
        for i in range(rows):
            if i != r and a[i, c] != 0:
                a[i] = a[i] - a[i, c] * a[r]
        pivots.append(c)
        r += 1
    return a, tuple(pivots)


def rank(m):
    """Exact rank over Q."""
    a = _as_object(m)
    rows, cols = a.shape
    if rows == 0 or cols == 0:
        return 0
    # plain forward elimination; no back substitution needed for rank
    r = 0
    for c in range(cols):
        if r == rows:
            break
        best = None
        for i in range(r, rows):
            v = a[i, c]
            if v != 0 and (best is None or abs(v) < abs(a[best, c])):
                best = i
        if best is None:
            continue
        if best != r:
            a[[r, best]] = a[[best, r]]
        piv = a[r, c]
        for i in range(r + 1, rows):
            if a[i, c] != 0:
                a[i] = a[i] * piv - a[i, c] * a[r]
        r += 1
    return r


def kernel_basis(m):
    """Basis of the rational null space {v : m v = 0}.

    Returns a list of object arrays of Fractions; its length is always
    cols - rank(m).
    """
    a = _as_object(m)
    rows, cols = a.shape
    if rows == 0:
        return [np.array([Fraction(int(i == j)) for j in range(cols)],
                         dtype=object) for i in range(cols)]
    red, pivots = rref(a)
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    basis = []
    for fcol in free:
        v = np.array([Fraction(0)] * cols, dtype=object)
        v[fcol] = Fraction(1)
        for i, pcol in enumerate(pivots):
            v[pcol] = -Fraction(red[i, fcol])
        basis.append(v)
    return basis


def solve(m, b):
    """Exact solution of m x = b, or None when inconsistent.

    When the system is underdetermined returns the particular solution with
    free variables set to zero.
    """
    a = _as_object(m)
    rows, cols = a.shape
    bv = np.array([Fraction(x) for x in b], dtype=object)
    if bv.shape != (rows,):
        raise ValueError("right-hand side length mismatch")
    aug = np.concatenate([a, bv.reshape(-1, 1)], axis=1)
    red, pivots = rref(aug)
    if cols in pivots:
        return None
    x = np.array([Fraction(0)] * cols, dtype=object)
    for i, pcol in enumerate(pivots):
        x[pcol] = red[i, cols]
    return x


def inverse(m):
    """Exact inverse of a square matrix over Q; raises on singular input."""
    a = _as_object(m)
    n, nc = a.shape
    if n != nc:
        raise ValueError("inverse of a non-square matrix")
    aug = np.concatenate([a, identity(n)], axis=1)
    red, pivots = rref(aug)
    if tuple(pivots[:n]) != tuple(range(n)):
        raise ValueError("matrix is singular")
    return red[:, n:]


def det(m):
    """Exact determinant via fraction-free-ish elimination."""
    a = _as_object(m)
    n, nc = a.shape
    if n != nc:
        raise ValueError("determinant of a non-square matrix")
    sign = 1
    d = Fraction(1)
    for c in range(n):
        best = None
        for i in range(c, n):
            v = a[i, c]
            if v != 0 and (best is None or abs(v) < abs(a[best, c])):
                best = i
        if best is None:
            return Fraction(0)
        if best != c:
            a[[c, best]] = a[[best, c]]
            sign = -sign
        piv = a[c, c]
        d *= piv
        for i in range(c + 1, n):
            if a[i, c] != 0:
                a[i] = a[i] - Fraction(a[i, c], 1) / piv * a[c]
    return sign * d


def int_det(m):
    """Determinant of an integer matrix, returned as a Python int."""
    d = det(m)
    if d.denominator != 1:
        raise ValueError("matrix is not integral")
    return int(d)


def is_unimodular(m):
    return abs(int_det(m)) == 1


def _vec_gcd(v):
    g = 0
    for x in v:
        g = gcd(g, abs(int(x)))
    return g


def is_primitive(v):
    """True when the integer vector has coordinate gcd 1."""
    return _vec_gcd(v) == 1


def smith_normal_form(m):
    """Smith normal form of an integer matrix.

    Returns (D, L, Rinv) with D = L @ m @ R diagonal, L and R unimodular,
    and Rinv = R^{-1} (tracked directly; the inverse is what lattice
    saturation consumes).  Diagonal entries are nonnegative with each
    dividing the next.
    """
    a = _as_object(m)
    rows, cols = a.shape
    for i in range(rows):
        for j in range(cols):
            a[i, j] = int(a[i, j])
    L = identity(rows)
    Rinv = identity(cols)

    def row_op(i, j, q):
        # row_i -= q * row_j, mirrored on L
        a[i] = a[i] - q * a[j]
        L[i] = L[i] - q * L[j]

    def col_op(j, i, q):
        # col_j -= q * col_i  (A <- A E); Rinv <- E^{-1} Rinv is a row op
        a[:, j] = a[:, j] - q * a[:, i]
        Rinv[i] = Rinv[i] + q * Rinv[j]

    def swap_rows(i, j):
        a[[i, j]] = a[[j, i]]
        L[[i, j]] = L[[j, i]]

    def swap_cols(i, j):
        a[:, [i, j]] = a[:, [j, i]]
        Rinv[[i, j]] = Rinv[[j, i]]

    def negate_row(i):
        a[i] = -a[i]
        L[i] = -L[i]

    t = 0
    while t < min(rows, cols):
        # find smallest nonzero entry in the trailing block
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i, j] != 0 and (best is None
                                     or abs(a[i, j]) < abs(a[best[0], best[1]])):
                    best = (i, j)
        if best is None:
            break
        bi, bj = best
        if bi != t:
            swap_rows(t, bi)
        if bj != t:
            swap_cols(t, bj)
        if a[t, t] < 0:
            negate_row(t)
        dirty = False
        for i in range(t + 1, rows):
            if a[i, t] != 0:
                q = a[i, t] // a[t, t]
                row_op(i, t, q)
                if a[i, t] != 0:
                    dirty = True
        for j in range(t + 1, cols):
            if a[t, j] != 0:
                q = a[t, j] // a[t, t]
                col_op(j, t, q)
                if a[t, j] != 0:
                    dirty = True
        if dirty:
            continue
        # divisibility: a[t,t] must divide the rest of the block
        witness = None
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if a[i, j] % a[t, t] != 0:
                    witness = i
                    break
            if witness is not None:
                break
        if witness is not None:
            row_op(t, witness, -1)  # fold offending row in, redo the block
            continue
        t += 1
    return a, L, Rinv


def elementary_divisors(m):
    """Nonzero diagonal of the Smith normal form, as a list of ints."""
    d, _, _ = smith_normal_form(m)
    out = []
    for i in range(min(d.shape)):
        if d[i, i] != 0:
            out.append(int(d[i, i]))
    return out


def sublattice_index(gens, ambient_dim=None):
    """Index in Z^n of the lattice spanned by the integer row vectors.

    Returns None when the span is not of full rank in the ambient lattice.
    """
    gens = list(gens)
    if not gens:
        return None
    n = ambient_dim if ambient_dim is not None else len(gens[0])
    a = imat(gens)
    divs = elementary_divisors(a)
    if len(divs) < n:
        return None
    idx = 1
    for d in divs:
        idx *= d
    return idx


def row_hermite_form(rows):
    """Row-style Hermite normal form of a full set of integer rows.

    Pivots are positive, entries above each pivot lie in [0, pivot); the
    result is the canonical basis of the row lattice (zero rows dropped).
    """
    a = [[int(x) for x in row] for row in rows]
    if not a:
        return []
    nrows, ncols = len(a), len(a[0])
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        while True:
            nz = [i for i in range(r, nrows) if a[i][c] != 0]
            if not nz:
                break
            best = min(nz, key=lambda i: abs(a[i][c]))
            a[r], a[best] = a[best], a[r]
            done = True
            for i in range(r + 1, nrows):
                if a[i][c] != 0:
                    q = a[i][c] // a[r][c]
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                    if a[i][c] != 0:
                        done = False
            if done:
                break
        if a[r][c] == 0:
            continue
        if a[r][c] < 0:
            a[r] = [-x for x in a[r]]
        for i in range(r):
            q = a[i][c] // a[r][c]
            if q:
                a[i] = [x - q * y for x, y in zip(a[i], a[r])]
        r += 1
    return [row for row in a[:r]]


def saturate(vectors):
    """Primitive basis of the saturation of the span of integer vectors.

    The saturation is the largest sublattice of Z^n with the same rational
    span; computed from the Smith normal form D = L A R (the first
    rank-many rows of R^{-1} span it) and returned in Hermite normal form,
    so the operation is literally idempotent.  Every basis vector of a
    saturated lattice is automatically primitive.
    """
    vectors = [np.array([int(x) for x in v], dtype=object) for v in vectors]
    if not vectors:
        return []
    n = len(vectors[0])
    if any(len(v) != n for v in vectors):
        raise ValueError("vectors of unequal length")
    a = imat(vectors)
    d, _, rinv = smith_normal_form(a)
    r = sum(1 for i in range(min(d.shape)) if d[i, i] != 0)
    basis = row_hermite_form([list(rinv[i]) for i in range(r)])
    return [np.array(row, dtype=object) for row in basis]
