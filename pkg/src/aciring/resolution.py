"""Graded Betti numbers by two independent routes.

Route one tensors the module with the standard resolution of the residue
field over the base: the Koszul complex when the base is the polynomial
ring, and its extension by divided-power generators when the base is the
polynomial ring modulo squares of some of the variables (those bases are
where our modules live; the resolution stays linear and minimal).  Betti
numbers fall out of ranks of the differentials.

Route two never sees the first construction: it extracts minimal generators
degree by degree, takes kernels, and repeats.  Hilbert bookkeeping makes the
truncation honest: if a window hides generators, that is detected and
reported instead of silently returning a smaller table.
"""

from __future__ import annotations

from itertools import combinations, combinations_with_replacement
from typing import Callable, Sequence

import numpy as np

from .errors import BoundTooSmall
from .fields import QQ
from .groebner import aci_ideal, squares_ideal
from .linalg import Echelon, kernel_basis, rank, sparse_rank
from .poly import Polynomial, squared_variable_sum
from .quotient import GradedModuleSpan, QuotientRing


class BettiTable:
    """A sparse table of graded Betti numbers beta_{i,j}.

    ``window = (max_i, max_j)`` records where the table is trustworthy when
    it was computed with bounds; None means the table is complete.  The
    label/characteristic/method fields are provenance only: equality and
    hashing look at the entries alone.
    """

    __slots__ = ("n", "entries", "window", "note", "ring_label", "module_label", "characteristic", "method")

    def __init__(
        self,
        n: int,
        entries: dict,
        window: tuple[int, int] | None = None,
        note: str = "",
        ring_label: str = "Q",
        module_label: str = "",
        characteristic: int | None = None,
        method: str = "",
    ):
        self.n = n
        self.entries = {k: int(v) for k, v in entries.items() if v}
        self.window = window
        self.note = note
        self.ring_label = ring_label
        self.module_label = module_label
        self.characteristic = characteristic
        self.method = method

    def get(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    def total(self, i: int) -> int:
        return sum(v for (ii, _), v in self.entries.items() if ii == i)

    @property
    def max_i(self) -> int:
        return max((i for i, _ in self.entries), default=0)

    @property
    def max_j(self) -> int:
        return max((j for _, j in self.entries), default=0)

    def rows(self) -> list[tuple[int, int, int]]:
        return [(i, j, v) for (i, j), v in sorted(self.entries.items())]

    def restricted(self, max_i: int, max_j: int) -> "BettiTable":
        sub = {(i, j): v for (i, j), v in self.entries.items() if i <= max_i and j <= max_j}
        out = BettiTable(self.n, sub, window=(max_i, max_j), note=self.note)
        out.ring_label, out.module_label = self.ring_label, self.module_label
        out.characteristic, out.method = self.characteristic, self.method
        return out

    def shifted(self, di: int, dj: int) -> "BettiTable":
        sub = {(i + di, j + dj): v for (i, j), v in self.entries.items()}
        window = None
        if self.window is not None:
            window = (self.window[0] + di, self.window[1] + dj)
        return BettiTable(self.n, sub, window=window, note=self.note)

    def __eq__(self, other):
        return isinstance(other, BettiTable) and self.entries == other.entries

    def __hash__(self):
        return hash(frozenset(self.entries.items()))

    def format(self) -> str:
        """Rows are j - i, columns are i, dashes for zeros."""
        if not self.entries:
            return "(zero table)"
        imax = self.max_i
        rmin = min(j - i for i, j in self.entries)
        rmax = max(j - i for i, j in self.entries)
        cols = list(range(imax + 1))
        body = [["-"] * (imax + 1) for _ in range(rmax - rmin + 1)]
        for (i, j), v in self.entries.items():
            body[j - i - rmin][i] = str(v)
        widths = [max(len(str(c)), max(len(body[r][c]) for r in range(len(body)))) for c in cols]
        lines = ["       " + "  ".join(str(c).rjust(widths[c]) for c in cols)]
        lines.append("total: " + "  ".join(str(self.total(c)).rjust(widths[c]) for c in cols))
        for r in range(len(body)):
            label = f"{r + rmin}:".rjust(6)
            lines.append(label + " " + "  ".join(body[r][c].rjust(widths[c]) for c in cols))
        return "\n".join(lines)

    def __repr__(self):
        w = "" if self.window is None else f", window={self.window}"
        return f"BettiTable(n={self.n}, {len(self.entries)} nonzero entries{w})"


# ----------------------------------------------------------------------
# route one: tensor with the standard resolution of k over the base
# ----------------------------------------------------------------------
#
# Base = k[x]/(x_t^2 : t in U).  The resolution of k is the Koszul complex
# on all the variables extended by a divided-power generator z_t (degree 2)
# for each t in U; the basis of the i-th term is e_S z^(s) with
# |S| + 2|s| = i, and every generator sits in internal degree i.


def _ci_generators(n: int, U: Sequence[int], i: int) -> list[tuple[tuple, tuple]]:
    out = []
    for k in range(i // 2 + 1):
        q = i - 2 * k
        if q > n:
            continue
        for S in combinations(range(n), q):
            for s in combinations_with_replacement(sorted(U), k):
                out.append((S, s))
    return out


def _remove_once(s: tuple, t: int) -> tuple:
    found = False
    out = []
    for u in s:
        if u == t and not found:
            found = True
            continue
        out.append(u)
    return tuple(out)


def ci_differential(module: QuotientRing, U: Sequence[int], i: int, j: int):
    """The degree-j slice of d_i on module ⊗ (resolution of k), sparsely.

    Returns (row_entries, nrows, ncols) with row_entries as {row: {col: val}}.
    Rows live in module_{j-i+1} ⊗ gens_{i-1}, columns in module_{j-i} ⊗ gens_i.
    """
    n = module.n
    field = module.field
    gens_src = _ci_generators(n, U, i)
    gens_tgt = _ci_generators(n, U, i - 1)
    tgt_index = {g: a for a, g in enumerate(gens_tgt)}
    h_src = module.hilbert_function(j - i) if j - i >= 0 else 0
    h_tgt = module.hilbert_function(j - i + 1) if j - i + 1 >= 0 else 0
    nrows = len(gens_tgt) * h_tgt
    ncols = len(gens_src) * h_src
    rows: dict = {}
    if nrows == 0 or ncols == 0:
        return rows, nrows, ncols

    # columns of multiplication-by-x_t as (row, value) lists, one per variable
    var_cols = []
    for t in range(n):
        M = module.variable_map(t, j - i)
        cols = [[] for _ in range(h_src)]
        if field.is_prime_field:
            rr, cc = np.nonzero(M)
            for r, c in zip(rr.tolist(), cc.tolist()):
                cols[c].append((r, int(M[r, c])))
        else:
            for r, row in enumerate(M):
                for c, v in enumerate(row):
                    if v != 0:
                        cols[c].append((r, v))
        var_cols.append(cols)

    def emit(col, tgt_gen_idx, t, negative):
        base = tgt_gen_idx * h_tgt
        for r, v in var_cols[t][col % h_src]:
            val = field.neg(v) if negative else v
            row = base + r
            dest = rows.setdefault(row, {})
            cur = dest.get(col)
            dest[col] = field.add(cur, val) if cur is not None else val
            if field.is_zero(dest[col]):
                del dest[col]

    for a, (S, s) in enumerate(gens_src):
        for m_idx in range(h_src):
            col = a * h_src + m_idx
            for pos, t in enumerate(S):
                tgt = tgt_index[(tuple(u for u in S if u != t), s)]
                emit(col, tgt, t, negative=pos % 2 == 1)
            for t in set(s):
                if t in S:
                    continue
                newS = tuple(sorted(S + (t,)))
                tgt = tgt_index[(newS, _remove_once(s, t))]
                above = sum(1 for u in S if u > t)
                emit(col, tgt, t, negative=(len(S) + above) % 2 == 1)
    return rows, nrows, ncols


def ci_dense_differential(module: QuotientRing, U: Sequence[int], i: int, j: int):
    """Dense matrix form of ci_differential, for small checks."""
    rows, nrows, ncols = ci_differential(module, U, i, j)
    field = module.field
    if field.is_prime_field:
        M = np.zeros((nrows, ncols), dtype=np.int64)
        for r, cs in rows.items():
            for c, v in cs.items():
                M[r, c] = v
        return M
    M = [[field.zero()] * ncols for _ in range(nrows)]
    for r, cs in rows.items():
        for c, v in cs.items():
            M[r][c] = v
    return M


def ci_resolution_betti(
    module: QuotientRing,
    U: Sequence[int] = (),
    max_i: int | None = None,
    max_j: int | None = None,
) -> BettiTable:
    """Betti numbers of the module over k[x]/(x_t^2 : t in U).

    With U empty this is the resolution over the polynomial ring itself and
    the full table is finite; otherwise the table is cut at the window.
    """
    n = module.n
    field = module.field
    for t in U:
        sq = Polynomial.monomial(n, field, tuple(2 if a == t else 0 for a in range(n)))
        if module.nf(sq):
            raise ValueError(f"x_{t + 1}^2 does not vanish in the module's ring")
    top = module.socle_degree()
    if max_i is None:
        if U:
            raise ValueError("a nonempty base needs an explicit homological bound")
        max_i = n
    if max_j is None:
        max_j = max_i + top

    windowed = bool(U) or max_j < max_i + top
    rank_cache: dict[tuple[int, int], int] = {}

    def rank_d(i: int, j: int) -> int:
        # the slice maps module_{j-i} to module_{j-i+1}: zero unless both live
        if i < 1 or j - i < 0 or j - i > top or j - i + 1 > top:
            return 0
        key = (i, j)
        if key not in rank_cache:
            rows, nrows, ncols = ci_differential(module, U, i, j)
            if nrows == 0 or ncols == 0:
                rank_cache[key] = 0
            else:
                rank_cache[key] = sparse_rank(rows, nrows, ncols, field)
        return rank_cache[key]

    entries: dict = {}
    for i in range(max_i + 1):
        gens_i = len(_ci_generators(n, U, i))
        if gens_i == 0:
            continue
        for j in range(i, min(max_j, i + top) + 1):
            dim = gens_i * module.hilbert_function(j - i)
            if dim == 0:
                continue
            b = dim - rank_d(i, j) - rank_d(i + 1, j)
            if b < 0:
                raise AssertionError(f"negative Betti number at ({i}, {j}): rank bookkeeping is broken")
            if b:
                entries[(i, j)] = b
    window = (max_i, max_j) if windowed else None
    base_label = "Q" if not U else "Q/(" + ", ".join(f"x{t + 1}^2" for t in sorted(U)) + ")"
    return BettiTable(
        n,
        entries,
        window=window,
        ring_label=base_label,
        module_label=getattr(module, "name", ""),
        characteristic=field.characteristic,
        method="koszul",
    )


def koszul_betti(module: QuotientRing, max_i: int | None = None, max_j: int | None = None) -> BettiTable:
    """Betti numbers over the polynomial ring (Koszul complex route)."""
    return ci_resolution_betti(module, (), max_i=max_i, max_j=max_j)


# ----------------------------------------------------------------------
# route two: iterated syzygies
# ----------------------------------------------------------------------


class _FreeElement:
    """An element of a graded free module over the base, one polynomial per slot."""

    __slots__ = ("parts", "degree")

    def __init__(self, parts: tuple, degree: int):
        self.parts = parts
        self.degree = degree


def _element_vector(base: QuotientRing, degs, elem: _FreeElement, j: int):
    vec = []
    for a, p in zip(degs, elem.parts):
        block = base.to_vector(p, j - a) if j - a >= 0 else []
        if base.field.is_prime_field:
            vec.extend(int(x) for x in block)
        else:
            vec.extend(block)
    return vec


def _element_from_vector(base: QuotientRing, degs, j: int, vec) -> _FreeElement:
    parts = []
    at = 0
    for a in degs:
        width = base.hilbert_function(j - a) if j - a >= 0 else 0
        parts.append(base.from_vector(j - a, vec[at:at + width]) if width else Polynomial.zero(base.n, base.field))
        at += width
    return _FreeElement(tuple(parts), j)


def _scale_element(base: QuotientRing, elem: _FreeElement, m, by_degree: int) -> _FreeElement:
    parts = tuple(base.nf(p.term_mul(m, base.field.one(), None)) for p in elem.parts)
    return _FreeElement(parts, elem.degree + by_degree)


def syzygy_betti_from_gens(
    base: QuotientRing,
    relation_gens: Sequence[Polynomial],
    max_i: int,
    max_j: int,
    module_hilbert: Callable[[int], int] | None = None,
    strict: bool = True,
) -> BettiTable:
    """Betti numbers of base/(relation_gens) by iterated minimal syzygies.

    Works entirely inside graded pieces: minimal generators are the cokernel
    of multiplication from one degree down, syzygies are kernels of the
    evaluation matrix.  When ``module_hilbert`` is supplied, every graded
    dimension is checked against the alternating-sum prediction, and a
    generator hiding just past max_j raises BoundTooSmall (or marks the
    table when strict is False).
    """
    field = base.field
    n = base.n
    entries = {(0, 0): 1}
    free_hist: list[list[int]] = [[0]]  # generator degrees of F_0, F_1, ...
    note = ""

    def free_dim(degs, d):
        return sum(base.hilbert_function(d - a) for a in degs if d - a >= 0)

    def predicted_w(i, d):
        # 0 -> W_i -> F_{i-1} -> ... -> F_0 -> M -> 0 alternating sums
        if module_hilbert is None:
            return None
        s = (-1) ** i * module_hilbert(d)
        for t, degs in enumerate(free_hist[:i]):
            s += (-1) ** (i - 1 - t) * free_dim(degs, d)
        return s

    # W_1 = the relation submodule of F_0 = base
    current: list[_FreeElement] = [
        _FreeElement((base.nf(g),), g.degree) for g in relation_gens if base.nf(g)
    ]

    for i in range(1, max_i + 1):
        degs = free_hist[i - 1]
        mingens: list[_FreeElement] = []
        by_degree: dict[int, list[_FreeElement]] = {}
        for e in current:
            by_degree.setdefault(e.degree, []).append(e)
        prev_elems: list[_FreeElement] = []
        for d in range(max_j + 1):
            width = free_dim(degs, d)
            ech = Echelon(field, width)
            # span of (maximal ideal) * W at this degree, from the piece below
            for e in prev_elems:
                for t in range(n):
                    mono = tuple(1 if a == t else 0 for a in range(n))
                    xe = _scale_element(base, e, mono, 1)
                    ech.insert(_element_vector(base, degs, xe, d))
            low_rank = ech.rank
            new_elems: list[_FreeElement] = []
            for e in by_degree.get(d, ()):
                res = ech.insert(_element_vector(base, degs, e, d))
                if res is not None:
                    new_elems.append(_element_from_vector(base, degs, d, res))
            if new_elems:
                entries[(i, d)] = entries.get((i, d), 0) + len(new_elems)
                mingens.extend(new_elems)
            want = predicted_w(i, d)
            if want is not None and ech.rank != want:
                raise AssertionError(
                    f"syzygy bookkeeping is off at step {i}, degree {d}: "
                    f"span has dimension {ech.rank}, exactness predicts {want}"
                )
            prev_elems = [_element_from_vector(base, degs, d, r) for r in ech.rows]
        # a generator may be hiding just past the window: the minimal
        # generators found so far must span the predicted dimension there
        d_probe = max_j + 1
        want = predicted_w(i, d_probe)
        if want is not None and want > 0:
            ech = Echelon(field, free_dim(degs, d_probe))
            for g in mingens:
                for m in base.basis(d_probe - g.degree):
                    res = ech.insert(_element_vector(base, degs, _scale_element(base, g, m, d_probe - g.degree), d_probe))
                    if ech.rank == want:
                        break
                if ech.rank == want:
                    break
            if ech.rank != want:
                msg = f"step {i}: a generator beyond degree {max_j} is outside the window"
                if strict:
                    raise BoundTooSmall(msg)
                note = msg
                break
        if not mingens:
            break  # the module is zero: resolution has ended
        # syzygies of the minimal generators become the next module
        new_degs = [g.degree for g in mingens]
        free_hist.append(new_degs)
        nxt: list[_FreeElement] = []
        for d in range(max_j + 1):
            cols = []
            col_meta = []
            for gi, g in enumerate(mingens):
                if d - g.degree < 0:
                    continue
                for m in base.basis(d - g.degree):
                    cols.append(_element_vector(base, degs, _scale_element(base, g, m, d - g.degree), d))
                    col_meta.append((gi, m))
            if not cols:
                continue
            width = free_dim(degs, d)
            if width == 0:
                continue
            # matrix with our columns: transpose of the stacked rows
            if field.is_prime_field:
                M = np.array(cols, dtype=np.int64).T
            else:
                M = [[cols[c][r] for c in range(len(cols))] for r in range(width)]
            ker = kernel_basis(M, field, ncols=len(cols))
            for kv in ker:
                parts = [Polynomial.zero(base.n, field) for _ in mingens]
                for (gi, m), c in zip(col_meta, kv):
                    if field.is_prime_field:
                        c = int(c) % field.characteristic
                    if field.is_zero(c):
                        continue
                    parts[gi] = parts[gi] + Polynomial.monomial(base.n, field, m, c)
                nxt.append(_FreeElement(tuple(base.nf(p) for p in parts), d))
        current = nxt

    window = (max_i, max_j)
    return BettiTable(
        n,
        entries,
        window=window,
        note=note,
        ring_label=base.name or "base",
        characteristic=field.characteristic,
        method="syzygy",
    )


def syzygy_betti(
    base: QuotientRing,
    module: QuotientRing,
    max_i: int,
    max_j: int,
    strict: bool = True,
) -> BettiTable:
    """Betti numbers of the module over the base by iterated minimal syzygies.

    The module must be a cyclic quotient of the base: its defining ideal,
    reduced in the base, provides the first relation generators, and its
    Hilbert function drives the exactness bookkeeping.
    """
    table = syzygy_betti_from_gens(
        base,
        list(module.generators),
        max_i,
        max_j,
        module_hilbert=module.hilbert_function,
        strict=strict,
    )
    table.module_label = module.name
    return table


# ----------------------------------------------------------------------
# statement-level checks that combine the routes
# ----------------------------------------------------------------------


def _gorenstein_presentation(n: int, field) -> tuple[QuotientRing, list[Polynomial]]:
    """The ring P = Q/(squares) and the colon-ideal generators of G/J inside it."""
    P = QuotientRing(squares_ideal(n, field), name="P")
    lifts = P.annihilator_of_element(squared_variable_sum(n, field))
    return P, lifts


def lifting_identity_check(n: int, field=None) -> bool:
    """For odd n: the Betti numbers over Q are the T-table plus its (1,2) shift.

    The T-table is taken in its barred form (the same quotient in n-1
    variables), which is the cheaper of the two equal descriptions.
    """
    if n < 3 or n % 2 == 0:
        raise ValueError("the lifting identity is an odd-n statement with n >= 3")
    if field is None:
        field = QQ
    for label in ("R", "A"):
        big = named_quotient(label, n, field)
        small = named_quotient(label, n - 1, field)
        over_q = koszul_betti(big)
        over_t = koszul_betti(small)
        keys = set(over_q.entries)
        keys.update(over_t.entries)
        keys.update((i + 1, j + 2) for i, j in over_t.entries)
        for i, j in keys:
            if over_q.get(i, j) != over_t.get(i, j) + over_t.get(i - 1, j - 2):
                return False
    return True


def duality_check(n: int, field=None) -> bool:
    """beta_{i,j}(G/J) = beta_{n-i,2n-j}(R) entrywise, both sides computed."""
    if n < 2:
        raise ValueError("defined for n >= 2")
    if field is None:
        field = QQ
    P, lifts = _gorenstein_presentation(n, field)
    module = GradedModuleSpan(P, lifts, name="G/J")
    left = ci_resolution_betti(module)
    right = koszul_betti(QuotientRing(aci_ideal(n, field), name="R"))
    flipped = {(n - i, 2 * n - j): v for (i, j), v in left.entries.items()}
    return flipped == right.entries


def named_quotient(label: str, n: int, field, degree_cap: int | None = None) -> QuotientRing:
    """P, R or A in n variables over the given field (A via the colon construction)."""
    if label == "P":
        return QuotientRing(squares_ideal(n, field), degree_cap=degree_cap, name="P")
    if label == "R":
        return QuotientRing(aci_ideal(n, field), degree_cap=degree_cap, name="R")
    if label == "A":
        P, lifts = _gorenstein_presentation(n, field)
        gens = list(squares_ideal(n, field)) + lifts
        return QuotientRing(gens, degree_cap=degree_cap, name="A")
    raise ValueError(f"unknown quotient label {label!r}")
