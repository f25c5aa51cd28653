"""Exact rank / kernel / determinant routines against slow reference code."""

import random
from fractions import Fraction

import numpy as np
import pytest

from aciring.fields import GF, QQ
from aciring.linalg import (
    Echelon,
    gf_rank,
    int_det_bareiss,
    kernel_basis,
    matmul,
    qq_rank,
    rref,
    sparse_rank,
)

from _oracle import fraction_det, fraction_rank, gf_rank_slow


def _random_fraction_matrix(rng, nrows, ncols, density=0.6):
    return [
        [
            Fraction(rng.randint(-5, 5), rng.randint(1, 4)) if rng.random() < density else Fraction(0)
            for _ in range(ncols)
        ]
        for _ in range(nrows)
    ]


def test_qq_rank_matches_oracle():
    rng = random.Random(11)
    for _ in range(80):
        M = _random_fraction_matrix(rng, rng.randint(1, 9), rng.randint(1, 9))
        assert qq_rank(M) == fraction_rank(M)


def test_gf_rank_matches_oracle():
    rng = random.Random(12)
    p = 32003
    for _ in range(40):
        nrows, ncols = rng.randint(1, 30), rng.randint(1, 30)
        A = np.array(
            [[rng.randrange(p) if rng.random() < 0.5 else 0 for _ in range(ncols)] for _ in range(nrows)],
            dtype=np.int64,
        )
        assert gf_rank(A.copy(), p) == gf_rank_slow(A.tolist(), p)


def test_sparse_rank_matches_dense_both_fields():
    rng = random.Random(13)
    for trial in range(120):
        nrows, ncols = rng.randint(1, 12), rng.randint(1, 12)
        rows = {}
        for r in range(nrows):
            cs = {}
            for c in range(ncols):
                if rng.random() < 0.35:
                    # rng can emit 0: sparse_rank must tolerate explicitly
                    # stored zero entries (regression: a structural singleton
                    # with value 0 used to be pivoted and inflate the rank)
                    cs[c] = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
            if cs:
                rows[r] = cs
        dense = [[rows.get(r, {}).get(c, Fraction(0)) for c in range(ncols)] for r in range(nrows)]
        want = fraction_rank(dense)
        assert sparse_rank({r: dict(cs) for r, cs in rows.items()}, nrows, ncols, QQ) == want
        if trial % 3 == 0:
            p = 101
            # scale the whole matrix by 12 (lcm of the denominators used above)
            # to land in integers, then reduce mod p; rank is unchanged
            gf_rows = {r: {c: int(v * 12) % p for c, v in cs.items()} for r, cs in rows.items()}
            dense_p = [[gf_rows.get(r, {}).get(c, 0) for c in range(ncols)] for r in range(nrows)]
            assert sparse_rank(gf_rows, nrows, ncols, GF(p)) == gf_rank_slow(dense_p, p)


def test_sparse_rank_explicit_zero_regression():
    rows = {
        0: {1: Fraction(0), 4: Fraction(-1)},
        1: {2: Fraction(2, 3), 3: Fraction(3)},
        2: {3: Fraction(4)},
        3: {3: Fraction(3), 4: Fraction(-2)},
    }
    assert sparse_rank(rows, 4, 5, QQ) == 3


def test_int_det_bareiss_matches_oracle():
    rng = random.Random(14)
    for size in (1, 2, 3, 4, 5, 6):
        for _ in range(12):
            M = [[rng.randint(-6, 6) for _ in range(size)] for _ in range(size)]
            assert int_det_bareiss([row[:] for row in M]) == fraction_det(M)


def test_rref_shape_and_pivots():
    M = [
        [Fraction(0), Fraction(2), Fraction(4)],
        [Fraction(1), Fraction(1), Fraction(1)],
        [Fraction(1), Fraction(3), Fraction(5)],
    ]
    pivots, rows = rref([row[:] for row in M], QQ)
    assert pivots == [0, 1]
    # each pivot column is a unit vector across the reduced rows
    for k, c in enumerate(pivots):
        assert rows[k][c] == 1
        assert all(rows[other][c] == 0 for other in range(len(rows)) if other != k)


def test_kernel_basis_rank_nullity():
    rng = random.Random(15)
    for _ in range(25):
        nrows, ncols = rng.randint(1, 7), rng.randint(1, 7)
        M = _random_fraction_matrix(rng, nrows, ncols)
        ker = kernel_basis([row[:] for row in M], QQ, ncols)
        assert len(ker) == ncols - fraction_rank(M)
        for v in ker:  # every kernel vector actually annihilates M
            assert all(sum(row[c] * v[c] for c in range(ncols)) == 0 for row in M)


def test_matmul_qq_and_gf():
    A = [[Fraction(1), Fraction(2)], [Fraction(0), Fraction(1)]]
    B = [[Fraction(3)], [Fraction(-1, 2)]]
    assert matmul(A, B, QQ) == [[Fraction(2)], [Fraction(-1, 2)]]
    p = 7
    Ap = np.array([[1, 2], [0, 1]], dtype=np.int64)
    Bp = np.array([[3], [6]], dtype=np.int64)
    assert matmul(Ap, Bp, GF(p)).tolist() == [[(3 + 12) % 7], [6]]


def test_echelon_insert_reports_dependence():
    ech = Echelon(QQ, 3)
    assert ech.insert([Fraction(1), Fraction(1), Fraction(0)]) is not None
    assert ech.insert([Fraction(0), Fraction(1), Fraction(1)]) is not None
    # dependent on the first two
    assert ech.insert([Fraction(1), Fraction(2), Fraction(1)]) is None
    assert ech.insert([Fraction(0), Fraction(0), Fraction(5)]) is not None
