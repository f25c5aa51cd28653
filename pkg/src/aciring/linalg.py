"""Exact linear algebra over the rationals and over GF(p).

Rational matrices are lists of rows (``Fraction``/``int`` entries); prime
field matrices are numpy ``int64`` arrays with entries in ``range(p)``.
Ranks of big matrices go through a sparse singleton-pivot pre-pass and then
either fraction-free (Bareiss) elimination over the integers or vectorized
elimination mod p.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from math import gcd

import numpy as np

from .fields import Field

# ----------------------------------------------------------------------
# generic helpers
# ----------------------------------------------------------------------


def zeros(nrows: int, ncols: int, field: Field):
    if field.is_prime_field:
        return np.zeros((nrows, ncols), dtype=np.int64)
    z = field.zero()
    return [[z] * ncols for _ in range(nrows)]


def matmul(A, B, field: Field):
    if field.is_prime_field:
        return gf_matmul(np.asarray(A), np.asarray(B), field.characteristic)
    n, k = len(A), len(A[0]) if A else 0
    m = len(B[0]) if B else 0
    out = [[field.zero()] * m for _ in range(n)]
    for i in range(n):
        Ai = A[i]
        Oi = out[i]
        for t in range(k):
            a = Ai[t]
            if a == 0:
                continue
            Bt = B[t]
            for j in range(m):
                b = Bt[j]
                if b != 0:
                    Oi[j] += a * b
    return out


def matvec(A, v, field: Field):
    if field.is_prime_field:
        return gf_matmul(np.asarray(A), np.asarray(v).reshape(-1, 1), field.characteristic).ravel()
    out = []
    for row in A:
        s = field.zero()
        for a, x in zip(row, v):
            if a != 0 and x != 0:
                s += a * x
        out.append(s)
    return out


def rank(M, field: Field) -> int:
    if field.is_prime_field:
        A = np.array(M, dtype=np.int64, copy=True)
        return gf_rank(A, field.characteristic)
    return qq_rank([list(r) for r in M])


def rref(M, field: Field):
    """Reduced row echelon form; returns (pivot_columns, rows)."""
    if field.is_prime_field:
        R, piv = gf_rref(np.array(M, dtype=np.int64, copy=True), field.characteristic)
        return piv, R
    return qq_rref([list(r) for r in M])


def kernel_basis(M, field: Field, ncols: int | None = None):
    """Basis of {v : M v = 0}, as rows; canonical (from the rref free columns)."""
    if field.is_prime_field:
        A = np.array(M, dtype=np.int64)
        if A.size == 0:
            A = A.reshape(0, ncols if ncols is not None else 0)
        return gf_kernel(A, field.characteristic)
    rows = [list(r) for r in M]
    if not rows:
        if ncols is None:
            raise ValueError("empty matrix needs ncols")
        return [[Fraction(1) if j == i else Fraction(0) for j in range(ncols)] for i in range(ncols)]
    return qq_kernel(rows)


# ----------------------------------------------------------------------
# sparse singleton-pivot pre-pass
# ----------------------------------------------------------------------


def sparse_rank(row_entries: dict, nrows: int, ncols: int, field: Field) -> int:
    """Rank of a sparse matrix given as {row: {col: value}}.

    Rows or columns with a single nonzero entry are pivoted away without
    fill-in; the remaining dense core goes to the field-appropriate
    elimination.  The input dict is consumed.
    """
    rows = {}
    for r, cs in row_entries.items():
        kept = {c: v for c, v in cs.items() if v}
        if kept:
            rows[r] = kept
    cols: dict = {}
    for r, cs in rows.items():
        for c in cs:
            cols.setdefault(c, set()).add(r)

    rk = 0
    rqueue = [r for r, cs in rows.items() if len(cs) == 1]
    cqueue = [c for c, rs in cols.items() if len(rs) == 1]

    def remove_entry(r, c):
        cs = rows[r]
        del cs[c]
        if not cs:
            del rows[r]
        elif len(cs) == 1:
            rqueue.append(r)
        rs = cols[c]
        rs.discard(r)
        if not rs:
            del cols[c]
        elif len(rs) == 1:
            cqueue.append(c)

    while rqueue or cqueue:
        if rqueue:
            r = rqueue.pop()
            if r not in rows or len(rows[r]) != 1:
                continue
            # row r has its only nonzero in column c: pivot there, then the
            # rest of column c is cleared by row operations that only touch
            # column c of the other rows
            (c,) = rows[r]
            rk += 1
            for r2 in list(cols[c]):
                remove_entry(r2, c)
        else:
            c = cqueue.pop()
            if c not in cols or len(cols[c]) != 1:
                continue
            # column c has its only nonzero in row r: column operations from
            # the pivot clear the rest of row r without fill-in elsewhere
            (r,) = cols[c]
            rk += 1
            for c2 in list(rows[r]):
                remove_entry(r, c2)

    if not rows:
        return rk
    if field.is_prime_field:
        col_list = sorted(cols)
        col_pos = {c: k for k, c in enumerate(col_list)}
        A = np.zeros((len(rows), len(col_list)), dtype=np.int64)
        for i, (r, cs) in enumerate(rows.items()):
            for c, v in cs.items():
                A[i, col_pos[c]] = v
        return rk + gf_rank(A, field.characteristic)
    _scale_sparse_rows_to_int(rows)
    rk += _unit_pivot_rank(rows, cols)
    if not rows:
        return rk
    col_list = sorted(cols)
    col_pos = {c: k for k, c in enumerate(col_list)}
    dense = []
    for cs in rows.values():
        row = [0] * len(col_list)
        for c, v in cs.items():
            row[col_pos[c]] = v
        dense.append(row)
    return rk + qq_rank(dense)


def _scale_sparse_rows_to_int(rows: dict) -> None:
    """Replace each sparse row by the coprime-integer multiple of itself."""
    for r, cs in rows.items():
        denom = 1
        for v in cs.values():
            if isinstance(v, Fraction):
                d = v.denominator
                denom = denom * d // gcd(denom, d)
        ints = {c: int(v * denom) for c, v in cs.items()}
        g = 0
        for v in ints.values():
            g = gcd(g, abs(v))
            if g == 1:
                break
        if g > 1:
            ints = {c: v // g for c, v in ints.items()}
        rows[r] = ints


def _unit_pivot_rank(rows: dict, cols: dict) -> int:
    """Integer-exact elimination on +-1 pivots; leftovers stay in ``rows``.

    Shortest rows are pivoted first (lazy heap, stale lengths re-pushed) and
    within a row the unit entry with the fewest other nonzeros in its column
    wins, which keeps fill-in low on the incidence-like matrices this sees.
    A row with no unit entry re-enters the heap whenever elimination changes
    it; rows that never acquire one are left for the dense fallback.
    """
    heap = [(len(cs), r) for r, cs in rows.items()]
    heapq.heapify(heap)
    rk = 0
    while heap:
        ln, pr = heapq.heappop(heap)
        prow = rows.get(pr)
        if prow is None:
            continue
        if len(prow) != ln:
            heapq.heappush(heap, (len(prow), pr))
            continue
        best = None
        for c, v in prow.items():
            if v == 1 or v == -1:
                load = len(cols[c])
                if best is None or load < best[0]:
                    best = (load, c, v)
        if best is None:
            continue
        _, pc, s = best
        del rows[pr]
        for c in prow:
            rs = cols[c]
            rs.discard(pr)
            if not rs:
                del cols[c]
        rk += 1
        for r2 in list(cols.get(pc, ())):
            row2 = rows[r2]
            # s is +-1, so the multiplier row2[pc]/s is the integer row2[pc]*s
            m = row2[pc] * s
            for c, v in prow.items():
                old = row2.get(c, 0)
                nv = old - m * v
                if nv:
                    row2[c] = nv
                    if not old:
                        cols.setdefault(c, set()).add(r2)
                elif old:
                    del row2[c]
                    rs = cols[c]
                    rs.discard(r2)
                    if not rs:
                        del cols[c]
            if row2:
                heapq.heappush(heap, (len(row2), r2))
            else:
                del rows[r2]
    return rk


# ----------------------------------------------------------------------
# rational path
# ----------------------------------------------------------------------


def _scale_row_to_int(row):
    denom = 1
    for x in row:
        if isinstance(x, Fraction):
            d = x.denominator
            denom = denom * d // gcd(denom, d)
    out = [int(x * denom) if isinstance(x, Fraction) else x * denom for x in row]
    g = 0
    for x in out:
        g = gcd(g, abs(x))
        if g == 1:
            break
    if g > 1:
        out = [x // g for x in out]
    return out


def qq_rank(rows) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination on scaled integers."""
    M = [_scale_row_to_int(r) for r in rows if any(x != 0 for x in r)]
    if not M:
        return 0
    nrows, ncols = len(M), len(M[0])
    r = 0
    prev = 1
    for c in range(ncols):
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if M[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            M[piv], M[r] = M[r], M[piv]
        p = M[r][c]
        Mr = M[r]
        for i in range(r + 1, nrows):
            Mi = M[i]
            mic = Mi[c]
            for k in range(c + 1, ncols):
                Mi[k] = (p * Mi[k] - mic * Mr[k]) // prev
            Mi[c] = 0
        prev = p
        r += 1
    return r


def qq_rref(rows):
    """Reduced row echelon form over Q; returns (pivot_columns, rows)."""
    M = [[Fraction(x) if not isinstance(x, Fraction) else x for x in r] for r in rows]
    nrows = len(M)
    ncols = len(M[0]) if M else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if M[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        M[piv], M[r] = M[r], M[piv]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        Mr = M[r]
        for i in range(nrows):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], Mr)]
        pivots.append(c)
        r += 1
    return pivots, M[:r]


def qq_kernel(rows):
    """Canonical kernel basis over Q (one vector per free column of the rref)."""
    ncols = len(rows[0])
    pivots, R = qq_rref(rows)
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for k, pc in enumerate(pivots):
            v[pc] = -R[k][fc]
        basis.append(v)
    return basis


def int_det_bareiss(rows) -> int:
    """Determinant of a square integer matrix, fraction-free."""
    M = [list(map(int, r)) for r in rows]
    n = len(M)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for c in range(n):
        piv = None
        for i in range(c, n):
            if M[i][c] != 0:
                piv = i
                break
        if piv is None:
            return 0
        if piv != c:
            M[piv], M[c] = M[c], M[piv]
            sign = -sign
        p = M[c][c]
        Mc = M[c]
        for i in range(c + 1, n):
            Mi = M[i]
            mic = Mi[c]
            for k in range(c + 1, n):
                Mi[k] = (p * Mi[k] - mic * Mc[k]) // prev
            Mi[c] = 0
        prev = p
    return sign * M[n - 1][n - 1]


# ----------------------------------------------------------------------
# prime-field path (numpy, int64, entries in range(p))
# ----------------------------------------------------------------------


def gf_matmul(A: np.ndarray, B: np.ndarray, p: int) -> np.ndarray:
    """A @ B mod p.  Uses exact float64 products when the sizes allow it."""
    if A.size == 0 or B.size == 0:
        return np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    k = A.shape[1]
    # k * (p-1)^2 must stay under 2^53 for the float64 product to be exact
    if k * (p - 1) * (p - 1) < (1 << 53):
        C = (A.astype(np.float64) @ B.astype(np.float64)) % p
        return C.astype(np.int64)
    C = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    step = max(1, (1 << 53) // ((p - 1) * (p - 1)))
    for s in range(0, k, step):
        C += (A[:, s:s + step].astype(np.float64) @ B[s:s + step].astype(np.float64)).astype(np.int64) % p
        C %= p
    return C


def gf_rank(A: np.ndarray, p: int) -> int:
    """Rank mod p.  Destroys A."""
    if A.size == 0:
        return 0
    if A.shape[0] < A.shape[1]:
        A = A.T.copy()
    if A.shape[1] <= 256:
        return _gf_rank_plain(A, p)
    return _gf_rank_blocked(A, p)


def _gf_rank_plain(A: np.ndarray, p: int) -> int:
    """One column at a time.  The bulk update skips the per-step modulo:
    factors and pivot rows are kept reduced, so intermediate entries stay
    below steps * p^2 << 2^63.
    """
    nrows, ncols = A.shape
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        col = A[r:, c] % p
        A[r:, c] = col
        nz = np.flatnonzero(col)
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        A[r, c:] %= p
        inv = pow(int(A[r, c]), p - 2, p)
        if inv != 1:
            A[r, c:] = (A[r, c:] * inv) % p
        if r + 1 < nrows:
            f = A[r + 1:, c]
            if np.any(f):
                A[r + 1:, c:] -= f[:, None] * A[r, c:][None, :]
        r += 1
    return r


def _gf_rank_blocked(A: np.ndarray, p: int, panel: int = 120) -> int:
    """Right-looking blocked elimination: panels are factored with scalar
    column steps (multipliers stored in place of the zeroed entries, classic
    LU style), then the trailing block gets one matrix-product update per
    panel.  Entry growth stays safe: within a panel at most panel * p^2,
    far below 2^63, and the matrix products run through gf_matmul's exact
    float64 path.
    """
    A %= p
    nrows, ncols = A.shape
    r = 0
    c0 = 0
    while c0 < ncols and r < nrows:
        c1 = min(c0 + panel, ncols)
        r_start = r
        piv_cols: list[int] = []
        invs: list[int] = []
        for c in range(c0, c1):
            if r == nrows:
                break
            col = A[r:, c] % p
            A[r:, c] = col
            nz = np.flatnonzero(col)
            if nz.size == 0:
                continue
            piv = r + int(nz[0])
            if piv != r:
                A[[r, piv]] = A[[piv, r]]  # full-row swap keeps stored multipliers with their rows
            A[r, c:c1] %= p
            inv = pow(int(A[r, c]), p - 2, p)
            if inv != 1:
                A[r, c:c1] = (A[r, c:c1] * inv) % p
            if r + 1 < nrows:
                f = A[r + 1:, c]
                if np.any(f):
                    A[r + 1:, c + 1:c1] -= f[:, None] * A[r, c + 1:c1][None, :]
                    # column c below the pivot keeps holding f: that is the
                    # stored multiplier for the trailing update
            piv_cols.append(c)
            invs.append(inv)
            r += 1
        if piv_cols and c1 < ncols:
            k = len(piv_cols)
            # the pivot rows' trailing parts are stale: forward-substitute
            # the recorded multipliers (and the pivot scalings) through them
            T = A[r_start:r, c1:]
            L_pp = A[r_start:r, :][:, piv_cols]
            for a in range(k):
                if a:
                    T[a] -= L_pp[a, :a] @ T[:a]
                T[a] %= p
                if invs[a] != 1:
                    T[a] = (T[a] * invs[a]) % p
            if r < nrows:
                L = A[r:, :][:, piv_cols]
                A[r:, c1:] = (A[r:, c1:] - gf_matmul(L, T, p)) % p
        c0 = c1
    return r


def gf_rref(A: np.ndarray, p: int):
    """Reduced row echelon form mod p; returns (rows, pivot_columns)."""
    A = A % p
    nrows, ncols = A.shape
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        inv = pow(int(A[r, c]), p - 2, p)
        if inv != 1:
            A[r] = (A[r] * inv) % p
        f = A[:, c].copy()
        f[r] = 0
        nzr = np.flatnonzero(f)
        if nzr.size:
            A[nzr] = (A[nzr] - f[nzr, None] * A[r][None, :]) % p
        pivots.append(c)
        r += 1
    return A[:r], pivots


def gf_kernel(A: np.ndarray, p: int) -> np.ndarray:
    """Kernel basis mod p as rows, one per free column (canonical)."""
    nrows, ncols = A.shape
    if nrows == 0:
        return np.eye(ncols, dtype=np.int64)
    R, pivots = gf_rref(A.copy(), p)
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    K = np.zeros((len(free), ncols), dtype=np.int64)
    for i, fc in enumerate(free):
        K[i, fc] = 1
        for k, pc in enumerate(pivots):
            K[i, pc] = (-int(R[k, fc])) % p
    return K


def gf_reduce_against(C: np.ndarray, R: np.ndarray, pivots, p: int) -> np.ndarray:
    """Reduce the rows of C against an rref basis R (unit pivots assumed)."""
    if len(pivots) == 0 or C.size == 0:
        return C % p
    coeffs = C[:, list(pivots)] % p
    return (C - gf_matmul(coeffs, R, p)) % p


# ----------------------------------------------------------------------
# incremental row spaces
# ----------------------------------------------------------------------


class Echelon:
    """A row space maintained in reduced echelon form, one insert at a time.

    Entries are plain field elements (Fraction/int), so this is meant for
    the small dense pieces: annihilator extraction, socle checks, span
    comparisons.
    """

    __slots__ = ("field", "ncols", "rows", "pivots")

    def __init__(self, field: Field, ncols: int):
        self.field = field
        self.ncols = ncols
        self.rows: list[list] = []
        self.pivots: list[int] = []

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec) -> list:
        """Fully reduce a vector against the current rows (no insertion)."""
        f = self.field
        v = list(vec)
        for row, p in zip(self.rows, self.pivots):
            c = v[p]
            if not f.is_zero(c):
                for j in range(p, self.ncols):
                    v[j] = f.sub(v[j], f.mul(c, row[j]))
        return v

    def contains(self, vec) -> bool:
        f = self.field
        return all(f.is_zero(x) for x in self.reduce(vec))

    def insert(self, vec):
        """Insert a vector; returns the normalized residual, or None if dependent."""
        f = self.field
        v = self.reduce(vec)
        piv = next((j for j, x in enumerate(v) if not f.is_zero(x)), None)
        if piv is None:
            return None
        inv = f.inv(v[piv])
        v = [f.mul(inv, x) for x in v]
        # keep earlier rows reduced against the new pivot
        for row in self.rows:
            c = row[piv]
            if not f.is_zero(c):
                for j in range(piv, self.ncols):
                    row[j] = f.sub(row[j], f.mul(c, v[j]))
        at = 0
        while at < len(self.pivots) and self.pivots[at] < piv:
            at += 1
        self.rows.insert(at, v)
        self.pivots.insert(at, piv)
        return v
