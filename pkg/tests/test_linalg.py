"""Dense F_p linear algebra: blocked rref, rank, nullspace, row spans."""

import numpy as np
import pytest

from fpcurves.linalg import RowSpan, as_matrix, nullspace, rank, rank_fp, rref


def ref_rref(a, p):
    """Row-by-row reference elimination (full reduction at every pivot)."""
    a = np.array(a, dtype=np.int64) % p
    m, n = a.shape
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r, :] = a[r, :] * inv % p
        for j in range(m):
            if j != r and a[j, c]:
                a[j, :] = (a[j, :] - a[j, c] * a[r, :]) % p
        pivots.append(c)
        r += 1
    return a, pivots


def _random_matrix(rng, p, m, n):
    a = rng.integers(0, p, size=(m, n))
    if m > 2 and rng.random() < 0.5:  # duplicate rows
        k = int(rng.integers(1, m // 2 + 1))
        a[rng.integers(0, m, size=k)] = a[rng.integers(0, m, size=k)]
    if n > 2 and rng.random() < 0.5:  # dependent columns
        k = int(rng.integers(1, n // 2 + 1))
        a[:, rng.integers(0, n, size=k)] = (
            a[:, rng.integers(0, n, size=k)] * int(rng.integers(0, p))
        ) % p
    if rng.random() < 0.05:
        a[:] = 0
    return a


@pytest.mark.parametrize("p", [2, 3, 32003, 1048573])
def test_rref_matches_reference(p):
    rng = np.random.default_rng(p)
    for trial in range(40):
        m = int(rng.integers(0, 40))
        n = int(rng.integers(0, 40))
        a = _random_matrix(rng, p, m, n)
        want, wp = ref_rref(a, p)
        for blk in (1, 3, 48):
            got, gp = rref(a, p, block=blk)
            assert gp == wp
            assert np.array_equal(got, want)


def test_rref_properties():
    p = 101
    rng = np.random.default_rng(5)
    a = _random_matrix(rng, p, 30, 25)
    r, pivots = rref(a, p)
    assert pivots == sorted(pivots) and len(set(pivots)) == len(pivots)
    for t, c in enumerate(pivots):
        col = np.zeros(30, dtype=np.int64)
        col[t] = 1
        assert np.array_equal(r[:, c], col)  # unit pivot columns
    r2, p2 = rref(r, p)
    assert p2 == pivots and np.array_equal(r2, r)  # idempotent
    assert rank(a, p) == len(pivots)


def test_nullspace():
    p = 32003
    rng = np.random.default_rng(11)
    for _ in range(20):
        m = int(rng.integers(1, 20))
        n = int(rng.integers(1, 20))
        a = _random_matrix(rng, p, m, n)
        ns = nullspace(a, p)
        assert ns.shape[1] == n
        assert ns.shape[0] == n - rank(a, p)
        if ns.size:
            assert not ((a @ ns.T) % p).any()
            assert rank(ns, p) == ns.shape[0]


def test_rank_fp_agrees_with_rref_rank():
    for p in (2, 3, 101, 32003):
        rng = np.random.default_rng(p + 1)
        for _ in range(25):
            m = int(rng.integers(0, 50))
            n = int(rng.integers(0, 50))
            a = _random_matrix(rng, p, m, n)
            assert rank_fp(a, p) == rank(a, p)


def test_rank_fp_rejects_huge_modulus():
    with pytest.raises(ValueError):
        rank_fp(np.eye(3, dtype=np.int64), (1 << 31) - 1)


def test_as_matrix():
    a = as_matrix([[1, -1], [5, 7]], 2, 5)
    assert a.dtype == np.int64
    assert a.tolist() == [[1, 4], [0, 2]]
    assert as_matrix([], 4, 5).shape == (0, 4)


def test_rowspan_add_and_membership():
    p = 101
    span = RowSpan(6, p)
    rng = np.random.default_rng(3)
    v1 = rng.integers(0, p, 6)
    v2 = rng.integers(0, p, 6)
    assert span.add(v1) and span.add(v2)
    assert not span.add((3 * v1 + 7 * v2) % p)  # dependent
    assert len(span) == 2
    assert not span.residual((3 * v1 + 7 * v2) % p).any()
    assert span.residual(rng.integers(0, p, 6)).any()
    # stored basis is fully reduced: each row zero at the other pivots
    rows = span.rows
    for i, c in enumerate(span.pivot_of_row):
        assert rows[i][c] == 1
        for j in range(len(rows)):
            if j != i:
                assert rows[j][c] == 0


def test_rowspan_batch_matches_incremental():
    p = 32003
    rng = np.random.default_rng(7)
    for trial in range(15):
        width = int(rng.integers(3, 30))
        count = int(rng.integers(1, 40))
        vecs = _random_matrix(rng, p, count, width)
        one = RowSpan(width, p)
        added = sum(one.add(v) for v in vecs)
        two = RowSpan(width, p)
        start = vecs[: count // 2]
        rest = vecs[count // 2 :]
        got = two.add_batch(start) + two.add_batch(rest)
        assert got == added == len(two) == len(one)
        assert sorted(one.pivot_of_row) == sorted(two.pivot_of_row)
        # the reduced basis is unique as a set of rows (order may differ)
        a = {tuple(map(int, r)) for r in one.rows}
        b = {tuple(map(int, r)) for r in two.rows}
        assert a == b
        # every original vector reduces to zero in both spans
        for v in vecs:
            assert not one.residual(v).any()
            assert not two.residual(v).any()


def test_rowspan_batch_of_dependent_rows():
    p = 7
    span = RowSpan(4, p)
    # rows 2..4 are 2x, 3x, 4x the first row mod 7: rank 1
    assert span.add_batch([[1, 2, 3, 4], [2, 4, 6, 1], [3, 6, 2, 5], [4, 1, 5, 2]]) == 1
    assert span.add_batch([[0, 1, 0, 0], [1, 3, 3, 4], [0, 2, 0, 0]]) == 1
    assert span.add_batch([[0, 0, 0, 0]]) == 0
    assert span.add_batch(np.zeros((0, 4), dtype=np.int64)) == 0
    assert len(span) == 2
