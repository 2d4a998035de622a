"""Exact integer and rational linear algebra on arbitrary-precision entries.

Matrices are numpy arrays with dtype=object holding Python ints (or Fractions
for the rational helpers), so all arithmetic is exact.  Vectors are rows
throughout the package; a lattice element x pairs as x . G . x^T.
"""

from fractions import Fraction

import numpy as np


def mat(rows):
    """Build an exact integer matrix from an iterable of rows."""
    a = np.array([[int(x) for x in row] for row in rows], dtype=object)
    if a.ndim != 2:
        raise ValueError("matrix rows must all have the same length")
    return a


def vec(entries):
    return np.array([int(x) for x in entries], dtype=object)


def eye(n):
    a = np.zeros((n, n), dtype=object)
    for i in range(n):
        a[i, i] = 1
    return a


def zeros(r, c):
    return np.zeros((r, c), dtype=object)


def to_lists(a):
    return [[int(x) for x in row] for row in a]


class SnfResult:
    """U, D, V with U @ A @ V = D, |det U| = |det V| = 1, d1 | d2 | ..., di >= 0."""

    __slots__ = ("U", "D", "V")

    def __init__(self, U, D, V):
        self.U = U
        self.D = D
        self.V = V

    @property
    def diagonal(self):
        return [int(self.D[i, i]) for i in range(min(self.D.shape))]

    @property
    def rank(self):
        return sum(1 for d in self.diagonal if d != 0)

    def invariant_factors(self):
        """Nontrivial invariant factors (> 1) of coker(A), i.e. torsion of Z^cols / rowspace(A)."""
        return [d for d in self.diagonal if d > 1]


def _pivot_smallest(A, s):
    """Position of the smallest-abs nonzero entry of A[s:, s:], ties by lowest (row, col)."""
    rows, cols = A.shape
    best = None
    for i in range(s, rows):
        for j in range(s, cols):
            v = A[i, j]
            if v != 0 and (best is None or abs(v) < abs(A[best[0], best[1]])):
                best = (i, j)
    return best


def snf(A):
    """Smith normal form of a nonempty integer matrix."""
    A = np.array(A, dtype=object)
    if A.size == 0:
        raise ValueError("snf: empty matrix")
    rows, cols = A.shape
    D = A.copy()
    U = eye(rows)
    V = eye(cols)
    for s in range(min(rows, cols)):
        while True:
            pos = _pivot_smallest(D, s)
            if pos is None:
                break
            i, j = pos
            if i != s:
                D[[s, i]] = D[[i, s]]
                U[[s, i]] = U[[i, s]]
            if j != s:
                D[:, [s, j]] = D[:, [j, s]]
                V[:, [s, j]] = V[:, [j, s]]
            dirty = False
            for i in range(s + 1, rows):
                if D[i, s] != 0:
                    q = D[i, s] // D[s, s]
                    if q != 0:
                        D[i] = D[i] - q * D[s]
                        U[i] = U[i] - q * U[s]
                    if D[i, s] != 0:
                        dirty = True
            for j in range(s + 1, cols):
                if D[s, j] != 0:
                    q = D[s, j] // D[s, s]
                    if q != 0:
                        D[:, j] = D[:, j] - q * D[:, s]
                        V[:, j] = V[:, j] - q * V[:, s]
                    if D[s, j] != 0:
                        dirty = True
            if dirty:
                continue
            # edging is zero; force divisibility of the remaining block
            stubborn = None
            for i in range(s + 1, rows):
                for j in range(s + 1, cols):
                    if D[i, j] % D[s, s] != 0:
                        stubborn = i
                        break
                if stubborn is not None:
                    break
            if stubborn is None:
                break
            D[s] = D[s] + D[stubborn]
            U[s] = U[s] + U[stubborn]
        if D[s, s] < 0:
            D[s] = -D[s]
            U[s] = -U[s]
    return SnfResult(U, D, V)


def hnf(A, prune=False):
    """Row Hermite normal form: pivots positive, entries above a pivot in [0, pivot).

    The row space over Z is preserved.  With prune=True zero rows are dropped.
    """
    H = np.array(A, dtype=object)
    if H.size == 0:
        raise ValueError("hnf: empty matrix")
    rows, cols = H.shape
    r = 0
    for j in range(cols):
        # pick the smallest-abs nonzero entry in column j at or below row r
        piv = None
        for i in range(r, rows):
            if H[i, j] != 0 and (piv is None or abs(H[i, j]) < abs(H[piv, j])):
                piv = i
        if piv is None:
            continue
        while True:
            if piv != r:
                H[[r, piv]] = H[[piv, r]]
            done = True
            for i in range(r + 1, rows):
                if H[i, j] != 0:
                    q = H[i, j] // H[r, j]
                    if q != 0:
                        H[i] = H[i] - q * H[r]
                    if H[i, j] != 0:
                        done = False
            if done:
                break
            piv = None
            for i in range(r, rows):
                if H[i, j] != 0 and (piv is None or abs(H[i, j]) < abs(H[piv, j])):
                    piv = i
        if H[r, j] < 0:
            H[r] = -H[r]
        for i in range(r):
            q = H[i, j] // H[r, j]
            if q != 0:
                H[i] = H[i] - q * H[r]
        r += 1
        if r == rows:
            break
    if prune:
        keep = [i for i in range(rows) if any(x != 0 for x in H[i])]
        H = H[keep] if keep else zeros(0, cols)
    return H


def kernel_basis(A):
    """Basis (rows) of the saturated integer kernel {x : x . A = 0}."""
    A = np.array(A, dtype=object)
    if A.size == 0:
        raise ValueError("kernel_basis: empty matrix")
    res = snf(A)
    rows = A.shape[0]
    free = [i for i in range(rows) if i >= min(A.shape) or res.D[i, i] == 0]
    if not free:
        return zeros(0, rows)
    return hnf(res.U[free], prune=False)


def solve_integer(A, b):
    """Some integer x with x . A = b, or None; absence is definitive."""
    A = np.array(A, dtype=object)
    b = np.array([int(t) for t in b], dtype=object)
    if A.shape[1] != b.shape[0]:
        raise ValueError("solve_integer: dimension mismatch")
    res = snf(A)
    c = b @ res.V
    rows, cols = A.shape
    y = zeros(1, rows)[0]
    for j in range(cols):
        d = res.D[j, j] if j < min(rows, cols) else 0
        if d == 0:
            if c[j] != 0:
                return None
        else:
            if c[j] % d != 0:
                return None
            y[j] = c[j] // d
    return y @ res.U


def rational_inverse(A):
    """Exact inverse of a nonsingular integer or rational matrix (Fraction entries)."""
    A = np.array(A, dtype=object)
    n = A.shape[0]
    if A.shape[0] != A.shape[1]:
        raise ValueError("rational_inverse: not square")
    M = np.array([[Fraction(A[i, j]) for j in range(n)] for i in range(n)], dtype=object)
    I = np.array([[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)], dtype=object)
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r, col] != 0), None)
        if piv is None:
            raise ValueError("rational_inverse: singular matrix")
        if piv != col:
            M[[col, piv]] = M[[piv, col]]
            I[[col, piv]] = I[[piv, col]]
        inv = 1 / M[col, col]
        M[col] = M[col] * inv
        I[col] = I[col] * inv
        for r in range(n):
            if r != col and M[r, col] != 0:
                f = M[r, col]
                M[r] = M[r] - f * M[col]
                I[r] = I[r] - f * I[col]
    return I


def unimodular_inverse(A):
    """Exact integer inverse of a unimodular integer matrix."""
    inv = rational_inverse(A)
    n = A.shape[0]
    out = zeros(n, n)
    for i in range(n):
        for j in range(n):
            f = inv[i, j]
            if f.denominator != 1:
                raise ValueError("unimodular_inverse: matrix is not unimodular")
            out[i, j] = int(f)
    return out


def det(A):
    """Exact determinant (Bareiss-free: fraction Gaussian elimination)."""
    A = np.array(A, dtype=object)
    n = A.shape[0]
    if n != A.shape[1]:
        raise ValueError("det: not square")
    M = np.array([[Fraction(A[i, j]) for j in range(n)] for i in range(n)], dtype=object)
    sign = 1
    d = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r, col] != 0), None)
        if piv is None:
            return 0
        if piv != col:
            M[[col, piv]] = M[[piv, col]]
            sign = -sign
        d *= M[col, col]
        for r in range(col + 1, n):
            if M[r, col] != 0:
                M[r] = M[r] - (M[r, col] / M[col, col]) * M[col]
    d *= sign
    if d.denominator == 1:
        return int(d)
    return d


def rank(A):
    return snf(A).rank


def invariant_factors_via_minors(A):
    """Independent oracle: invariant factors from gcds of k x k minors.

    d_k = gcd of all k-minors; the k-th invariant factor is d_k / d_{k-1}.
    Exponential in size, fine for the small matrices it is used on.
    """
    from itertools import combinations
    from math import gcd

    A = np.array(A, dtype=object)
    rows, cols = A.shape
    out = []
    prev = 1
    for k in range(1, min(rows, cols) + 1):
        g = 0
        for rsel in combinations(range(rows), k):
            for csel in combinations(range(cols), k):
                sub = A[np.ix_(rsel, csel)]
                g = gcd(g, abs(int(det(sub))))
        if g == 0:
            break
        out.append(g // prev)
        prev = g
    return out
