import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tcslat import exactalg as xa


def check_snf_contract(A):
    res = xa.snf(A)
    rows, cols = A.shape
    assert abs(xa.det(res.U)) == 1
    assert abs(xa.det(res.V)) == 1
    D = res.U @ A @ res.V
    assert xa.to_lists(D) == xa.to_lists(res.D)
    diag = res.diagonal
    for i in range(rows):
        for j in range(cols):
            if i != j:
                assert res.D[i, j] == 0
    for a, b in zip(diag, diag[1:]):
        assert a >= 0 and b >= 0
        if a != 0:
            assert b % a == 0
        else:
            assert b == 0
    return res


def test_snf_identity():
    res = check_snf_contract(xa.eye(3))
    assert res.diagonal == [1, 1, 1]


def test_snf_2x2_examples():
    res = check_snf_contract(xa.mat([[2, 4], [6, 8]]))
    assert res.diagonal == [2, 4]
    res = check_snf_contract(xa.mat([[0, 3], [3, 0]]))
    assert res.diagonal == [3, 3]


def test_snf_reconstruction_via_inverses():
    A = xa.mat([[2, 4, 1], [6, 8, 0], [5, 5, 5]])
    res = check_snf_contract(A)
    Uinv = xa.unimodular_inverse(res.U)
    Vinv = xa.unimodular_inverse(res.V)
    assert xa.to_lists(Uinv @ res.D @ Vinv) == xa.to_lists(A)


def random_unimodular(n, rng, steps=12):
    M = xa.eye(n)
    if n < 2:
        return M
    for _ in range(steps):
        i, j = rng.sample(range(n), 2)
        M[i] = M[i] + rng.randint(-2, 2) * M[j]
    return M


def test_snf_invariance_under_unimodular():
    rng = random.Random(7)
    for _ in range(15):
        r, c = rng.randint(1, 4), rng.randint(1, 4)
        A = xa.mat([[rng.randint(-5, 5) for _ in range(c)] for _ in range(r)])
        P = random_unimodular(r, rng)
        Q = random_unimodular(c, rng)
        assert xa.snf(P @ A @ Q).diagonal == xa.snf(A).diagonal


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(st.integers(-20, 20), min_size=3, max_size=3), min_size=2, max_size=4))
def test_snf_matches_minor_oracle(rows):
    A = xa.mat(rows)
    res = check_snf_contract(A)
    oracle = xa.invariant_factors_via_minors(A)
    assert [d for d in res.diagonal if d != 0] == oracle


def test_hnf_examples():
    assert xa.to_lists(xa.hnf(xa.eye(2))) == [[1, 0], [0, 1]]
    assert xa.to_lists(xa.hnf(xa.mat([[2, 0], [0, 0]]), prune=True)) == [[2, 0]]
    assert xa.to_lists(xa.hnf(xa.mat([[1, 2], [3, 4]]))) == [[1, 0], [0, 2]]


def test_hnf_preserves_row_space():
    rng = random.Random(3)
    for _ in range(20):
        A = xa.mat([[rng.randint(-6, 6) for _ in range(4)] for _ in range(3)])
        H = xa.hnf(A, prune=True)
        # every row of H solvable from A and vice versa
        for row in H:
            assert xa.solve_integer(A, row) is not None
        for row in A:
            if any(x != 0 for x in row):
                assert xa.solve_integer(H, row) is not None


def test_kernel_basis_examples():
    assert xa.kernel_basis(xa.eye(3)).shape[0] == 0
    K = xa.kernel_basis(xa.mat([[2], [-1]]))
    assert K.shape == (1, 2)
    assert xa.to_lists(K) == [[1, 2]]


def test_kernel_basis_random_rank2():
    rng = random.Random(11)
    for _ in range(10):
        B = xa.mat([[rng.randint(-4, 4) for _ in range(5)] for _ in range(2)])
        if xa.rank(B) != 2:
            continue
        C = xa.mat([[rng.randint(-3, 3) for _ in range(2)] for _ in range(3)])
        A = C @ B  # 3 x 5 of rank <= 2
        if xa.rank(A) != 2:
            continue
        K = xa.kernel_basis(A)
        assert K.shape[0] == 1
        assert all(x == 0 for x in (K @ A).ravel())
        # saturated: invariant factors all 1
        assert xa.snf(K).invariant_factors() == []


def test_solve_integer():
    assert list(xa.solve_integer(xa.mat([[2]]), [4])) == [2]
    assert xa.solve_integer(xa.mat([[2]]), [3]) is None
    A = xa.mat([[2, 4], [6, 8]])
    b = xa.vec([8, 12])  # (1, 1) . A
    x = xa.solve_integer(A, b)
    assert x is not None
    assert list(x @ A) == [8, 12]


def test_solve_integer_definitive_absence():
    A = xa.mat([[2, 0], [0, 3]])
    assert xa.solve_integer(A, [1, 0]) is None
    assert xa.solve_integer(A, [2, 3]) is not None


def test_det_and_inverse():
    A = xa.mat([[2, 1], [1, 1]])
    assert xa.det(A) == 1
    Ainv = xa.unimodular_inverse(A)
    assert xa.to_lists(A @ Ainv) == xa.to_lists(xa.eye(2))
    with pytest.raises(ValueError):
        xa.unimodular_inverse(xa.mat([[2, 0], [0, 1]]))
