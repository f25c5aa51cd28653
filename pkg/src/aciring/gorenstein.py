"""The Gorenstein quotient through its explicit generators and inverse system.

Three independent presentations of the same ideal meet here: the colon
construction lives in :mod:`.quotient`, while this module builds the
symmetric-orbit generators, the annihilator of a single dual form, and the
predicted initial ideal whose squarefree part is indexed by ballot
sequences.  It also carries the Hessian matrices of the dual form and the
strong Lefschetz check for the quotient.
"""

from __future__ import annotations

import warnings

from .fields import GF, QQ, Field
from .formulas import ell
from .groebner import MonomialIdeal, normal_form, squares_ideal
from .linalg import Echelon, int_det_bareiss, kernel_basis, matmul, rank, rref
from .poly import (
    DividedPowerForm,
    Mono,
    Polynomial,
    contract,
    monomials_of_degree,
    revlex_key,
    squarefree_monomials,
    squared_variable_sum,
    symmetric_orbit,
)

__all__ = [
    "BallotSequence",
    "HessianMatrix",
    "G_from_orbit",
    "ann_of_form",
    "ballot_sequences",
    "disjointness_invertible",
    "disjointness_matrix",
    "g_identity_check",
    "g_polynomial",
    "hessian",
    "inverse_form",
    "predicted_initial_ideal",
    "slp_check_A",
]

BallotSequence = tuple[int, ...]


def g_polynomial(n: int, field: Field = QQ) -> Polynomial:
    """Product of consecutive variable differences, expanded.

    For odd n the factors are (x1-x2)(x3-x4)...(x_{n-2}-x_{n-1}); for even
    n the product stops one pair short and is closed off by the bare
    variable x_{n-1}.  Either way the degree is ell(n) + 1.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    pairs = (n - 1) // 2 if n % 2 else (n - 2) // 2
    f = Polynomial.constant(n, field, field.one())
    for t in range(pairs):
        diff = Polynomial.variable(n, field, 2 * t) - Polynomial.variable(n, field, 2 * t + 1)
        f = f.mul(diff, None)
    if n % 2 == 0:
        f = f.mul(Polynomial.variable(n, field, n - 2), None)
    return f


def G_from_orbit(n: int, field: Field = QQ) -> list[Polynomial]:
    """The variable squares together with the full symmetric orbit of
    :func:`g_polynomial`."""
    return list(squares_ideal(n, field)) + symmetric_orbit(g_polynomial(n, field))


def g_identity_check(n: int, field: Field = QQ) -> bool:
    """Whether g_polynomial(n) times the squared variable sum reduces to
    zero against the variable squares."""
    product = g_polynomial(n, field).mul(squared_variable_sum(n, field), None)
    # the squares have pairwise coprime leading terms, so plain reduction decides
    return not normal_form(product, squares_ideal(n, field), None)


def ballot_sequences(n: int) -> list[BallotSequence]:
    """All strictly increasing tuples (i_1, ..., i_{ell+1}) with i_j <= 2j.

    Entries are 1-based variable indices; the count is catalan(ell(n)+2).
    """
    length = ell(n) + 1
    out: list[BallotSequence] = []

    def extend(prefix: list[int]):
        j = len(prefix) + 1
        if j > length:
            out.append(tuple(prefix))
            return
        lo = prefix[-1] + 1 if prefix else 1
        for i in range(lo, 2 * j + 1):
            prefix.append(i)
            extend(prefix)
            prefix.pop()

    extend([])
    return out


def predicted_initial_ideal(n: int) -> MonomialIdeal:
    """The variable squares plus one squarefree monomial per ballot
    sequence, minimalized."""
    mons: list[Mono] = []
    for i in range(n):
        e = [0] * n
        e[i] = 2
        mons.append(tuple(e))
    for seq in ballot_sequences(n):
        e = [0] * n
        for i in seq:
            e[i - 1] = 1
        mons.append(tuple(e))
    return MonomialIdeal(n, mons)


# ----------------------------------------------------------------------
# the inverse system
# ----------------------------------------------------------------------


def inverse_form(n: int, field: Field = QQ) -> DividedPowerForm:
    """Contraction of the squared variable sum against y1...yn.

    The result is twice the sum of all squarefree dual monomials of degree
    n - 2 (a constant for n = 2).
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    ones = tuple([1] * n)
    target = DividedPowerForm(n, field, [(ones, field.one())])
    return contract(squared_variable_sum(n, field), target)


def _contraction_kernel(n: int, field: Field, form: DividedPowerForm, cols: list[Mono]):
    """Kernel vectors of m -> m ∘ form on the span of the given monomials."""
    rowindex: dict[Mono, int] = {}
    colentries = []
    for m in cols:
        fm = contract(Polynomial.monomial(n, field, m), form)
        ent = []
        for mm, c in fm.terms:
            r = rowindex.setdefault(mm, len(rowindex))
            ent.append((r, c))
        colentries.append(ent)
    if not rowindex:  # the zero map: everything annihilates
        return [
            [field.one() if j == k else field.zero() for j in range(len(cols))]
            for k in range(len(cols))
        ]
    M = [[field.zero()] * len(cols) for _ in range(len(rowindex))]
    for j, ent in enumerate(colentries):
        for i, c in ent:
            M[i][j] = c
    return [list(v) for v in kernel_basis(M, field, ncols=len(cols))]


def ann_of_form(n: int, field: Field = QQ) -> list[Polynomial]:
    """Minimal generators, found through degree n, of the ideal of
    polynomials whose contraction against :func:`inverse_form` vanishes.

    Degrees one and two run in full monomial coordinates, where the square
    generators first appear.  From degree three on, every monomial with a
    square is a variable multiple of one in lower degree, so both the
    kernel and the span sieve restrict to squarefree coordinates of size
    binomial(n, d).
    """
    F = inverse_form(n, field)
    gens: list[Polynomial] = []

    def poly_from(cols: list[Mono], vec) -> Polynomial:
        terms = [(m, c) for m, c in zip(cols, vec) if not field.is_zero(c)]
        return Polynomial(n, field, terms).monic()

    cols1 = squarefree_monomials(n, 1)
    ker1 = _contraction_kernel(n, field, F, cols1)
    gens.extend(poly_from(cols1, v) for v in ker1)

    cols2 = sorted(monomials_of_degree(n, 2), key=revlex_key, reverse=True)
    idx2 = {m: j for j, m in enumerate(cols2)}
    ker2 = _contraction_kernel(n, field, F, cols2)
    span = Echelon(field, len(cols2))
    for v in ker1:
        for i in range(n):
            w = [field.zero()] * len(cols2)
            for m, c in zip(cols1, v):
                if field.is_zero(c):
                    continue
                mm = list(m)
                mm[i] += 1
                j = idx2[tuple(mm)]
                w[j] = field.add(w[j], c)
            span.insert(w)
    for v in ker2:
        residue = span.insert(list(v))
        if residue is not None:
            gens.append(poly_from(cols2, residue))

    prev_cols = squarefree_monomials(n, 2)
    prev_ker = _contraction_kernel(n, field, F, prev_cols)
    for d in range(3, n + 1):
        cols = squarefree_monomials(n, d)
        if not cols:
            break
        idx = {m: j for j, m in enumerate(cols)}
        ker = _contraction_kernel(n, field, F, cols)
        span = Echelon(field, len(cols))
        for v in prev_ker:
            for i in range(n):
                w = [field.zero()] * len(cols)
                touched = False
                for m, c in zip(prev_cols, v):
                    if field.is_zero(c) or m[i]:
                        continue  # a square appears and projects away
                    mm = list(m)
                    mm[i] = 1
                    j = idx[tuple(mm)]
                    w[j] = field.add(w[j], c)
                    touched = True
                if touched:
                    span.insert(w)
        for v in ker:
            residue = span.insert(list(v))
            if residue is not None:
                gens.append(poly_from(cols, residue))
        prev_cols, prev_ker = cols, ker
    return gens


# ----------------------------------------------------------------------
# Hessians and the strong Lefschetz check
# ----------------------------------------------------------------------


class HessianMatrix:
    """Symmetric contraction matrix of the dual form on a squarefree basis.

    ``entries[r][c]`` is the form (basis[r] * basis[c]) ∘ F; evaluating
    every entry at y = (1, ..., 1) gives an exact scalar matrix.
    """

    __slots__ = ("n", "order", "basis", "entries", "field")

    def __init__(self, n: int, order: int, basis: list[Mono], entries, field: Field):
        self.n = n
        self.order = order
        self.basis = basis
        self.entries = entries
        self.field = field

    def dimension(self) -> int:
        return len(self.basis)

    def at_ones(self):
        return [[e.evaluate_at_ones() for e in row] for row in self.entries]

    def determinant_at_ones(self) -> int:
        """Exact determinant of the evaluated matrix (meaningful over QQ)."""
        return int_det_bareiss(self.at_ones())

    def __repr__(self):
        return f"HessianMatrix(n={self.n}, order={self.order}, dim={len(self.basis)})"


def hessian(n: int, i: int, field: Field = QQ) -> HessianMatrix:
    """The order-i contraction matrix of the dual form.

    The basis is the squarefree monomials of degree i in descending revlex
    order; i must lie between 0 and ell(n).
    """
    if not (0 <= i <= ell(n)):
        raise ValueError(f"hessian order must satisfy 0 <= i <= {ell(n)}, got {i}")
    F = inverse_form(n, field)
    basis = squarefree_monomials(n, i)
    polys = [Polynomial.monomial(n, field, m) for m in basis]
    entries = [[contract(pu.mul(pv, None), F) for pv in polys] for pu in polys]
    return HessianMatrix(n, i, basis, entries, field)


def disjointness_matrix(n: int, i: int) -> list[list[int]]:
    """0/1 matrix over pairs of squarefree degree-i monomials: 1 exactly
    when the supports are disjoint."""
    basis = squarefree_monomials(n, i)
    sup = [frozenset(k for k, e in enumerate(m) if e) for m in basis]
    return [[0 if (a & b) else 1 for b in sup] for a in sup]


def disjointness_invertible(n: int, i: int) -> bool:
    """Invertibility of the disjointness matrix, by exact determinant."""
    return int_det_bareiss(disjointness_matrix(n, i)) != 0


def _lefschetz_by_ranks(n: int, field: Field) -> bool:
    """Maximal-rank test for all powers of the variable sum acting on the
    quotient by the annihilator of the dual form.

    Graded pieces are coordinatized as squarefree monomials modulo the
    contraction kernel (the square monomials already vanish), so each
    multiplication step is a small exact matrix.
    """
    F = inverse_form(n, field)
    top = n - 2
    if top < 0:
        return True
    dims: dict[int, int] = {}
    reduced: dict[int, tuple] = {}
    for d in range(top + 1):
        cols = squarefree_monomials(n, d)
        ker = _contraction_kernel(n, field, F, cols)
        if ker:
            piv, R = rref(ker, field)
            R = [list(r) for r in R]
        else:
            piv, R = [], []
        pivset = set(piv)
        free = [j for j in range(len(cols)) if j not in pivset]
        dims[d] = len(free)
        reduced[d] = (cols, {m: j for j, m in enumerate(cols)}, list(piv), R, free)

    steps = []
    for d in range(top):
        cols_d, _, _, _, free_d = reduced[d]
        cols_t, idx_t, piv_t, R_t, free_t = reduced[d + 1]
        columns = []
        for j in free_d:
            m = cols_d[j]
            v = [field.zero()] * len(cols_t)
            for i in range(n):
                if m[i]:
                    continue
                mm = list(m)
                mm[i] = 1
                v[idx_t[tuple(mm)]] = field.one()
            for k, p in enumerate(piv_t):
                c = v[p]
                if not field.is_zero(c):
                    row = R_t[k]
                    v = [field.sub(a, field.mul(c, b)) for a, b in zip(v, row)]
            columns.append([v[c] for c in free_t])
        steps.append(
            [[columns[c][r] for c in range(len(columns))] for r in range(len(free_t))]
        )

    for d in range(top + 1):
        if dims[d] == 0:
            continue
        M = None
        for j in range(1, top - d + 1):
            if dims[d + j] == 0:
                break
            step = steps[d + j - 1]
            M = step if M is None else matmul(step, M, field)
            if rank(M, field) != min(dims[d], dims[d + j]):
                return False
    return True


def slp_check_A(n: int, characteristic: int = 0) -> bool:
    """Strong Lefschetz check for the quotient by the dual form's annihilator.

    Over the rationals two independent routes must agree and both hold:
    every Hessian determinant is nonzero at the all-ones point, and every
    power of the variable sum multiplies with maximal rank between graded
    pieces.  The Hessian-determinant criterion belongs to characteristic
    zero, so in positive characteristic a warning is issued and the rank
    route alone decides (sensible when the characteristic exceeds n).
    """
    if characteristic:
        warnings.warn(
            "the Hessian-determinant criterion applies in characteristic zero; "
            f"using only the direct rank route over GF({characteristic})",
            stacklevel=2,
        )
        return _lefschetz_by_ranks(n, GF(characteristic))
    hessian_ok = all(
        hessian(n, i).determinant_at_ones() != 0 for i in range(ell(n) + 1)
    )
    direct_ok = _lefschetz_by_ranks(n, QQ)
    if hessian_ok != direct_ok:
        raise AssertionError(
            f"Hessian route ({hessian_ok}) and rank route ({direct_ok}) disagree at n={n}"
        )
    return hessian_ok and direct_ok
