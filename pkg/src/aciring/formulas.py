"""Closed-form combinatorics for the square-plus-total-square quotients.

Everything in this module is exact integer arithmetic: binomial and Catalan
helpers, the two recursively defined Betti-strand sequences (`rho_sequence`,
`gamma_sequence`), closed-form Hilbert functions, and the predicted Betti
tables for the rings R = Q/(x_1^2, ..., x_n^2, h^2) and the linked Gorenstein
quotient A.  The numeric engines in `quotient`/`resolution` recompute the same
data from scratch, so these two sides cross-check each other.
"""

from __future__ import annotations

from math import comb
from typing import Sequence

from .resolution import BettiTable

__all__ = [
    "binom",
    "ell",
    "catalan",
    "catalan_identities_check",
    "betti_strand",
    "rho_sequence",
    "gamma_sequence",
    "hilbert_formula",
    "multiplicity_R",
    "betti_table_formula",
]


def binom(a: int, b: int) -> int:
    """Binomial coefficient extended by zero outside 0 <= b <= a."""
    if 0 <= b <= a:
        return comb(a, b)
    return 0


def ell(n: int) -> int:
    """The strand parameter floor((n - 2) / 2) used throughout."""
    if n < 2:
        raise ValueError("defined for n >= 2")
    return (n - 2) // 2


def catalan(k: int) -> int:
    if k < 0:
        raise ValueError("Catalan numbers are indexed by k >= 0")
    return comb(2 * k, k) // (k + 1)


def catalan_identities_check(k: int) -> bool:
    """Check the three binomial-difference expressions for the k-th Catalan number."""
    if k < 1:
        raise ValueError("requires k >= 1")
    c = catalan(k)
    return (
        c == binom(2 * k, k) - binom(2 * k, k + 1)
        and c == binom(2 * k - 1, k - 1) - binom(2 * k - 1, k + 1)
        and c == binom(2 * k - 2, k - 1) - binom(2 * k - 2, k + 1)
    )


def betti_strand(
    h_M: Sequence[int],
    h_S: Sequence[int],
    known: BettiTable,
    a: int,
    k: int,
) -> int:
    """Solve the graded Euler characteristic at degree k + a for beta_{k,k+a}.

    ``h_M`` is the Hilbert function of the module, ``h_S`` that of the ambient
    polynomial ring (both indexed from degree 0; values past the end of the
    sequence count as zero).  ``known`` must already contain every Betti number
    the alternating sum touches: the strand entries beta_{i,i+a} for i < k and
    all off-strand entries beta_{i,j} with j <= k + a.  If the table carries a
    finite computation window that cannot vouch for one of those cells, a
    ValueError is raised rather than silently treating it as zero.
    """

    def hm(d: int) -> int:
        return h_M[d] if 0 <= d < len(h_M) else 0

    def hs(d: int) -> int:
        return h_S[d] if 0 <= d < len(h_S) else 0

    def cell(i: int, j: int) -> int:
        if known.window is not None:
            max_i, max_j = known.window
            if i > max_i or j > max_j:
                raise ValueError(
                    f"beta_{{{i},{j}}} lies outside the known window {known.window}"
                )
        return known.get(i, j)

    value = (-1) ** k * hm(k + a)
    for i in range(k):
        value -= (-1) ** (i + k) * hs(k - i) * cell(i, i + a)
    for i in range(k + a + 1):
        for j in range(i, k + a + 1):
            if j == i + a:
                continue
            value -= (-1) ** (i + k) * hs(k + a - j) * cell(i, j)
    return value


def _require_even(n: int) -> None:
    if n < 2 or n % 2 != 0:
        raise ValueError(
            "the recursion is only tabulated for even n >= 2; "
            "odd parameters are deliberately rejected"
        )


def _rho_values(n: int, count: int) -> list[int]:
    """First ``count`` values of the rho recursion for (even) parameter n."""
    l = ell(n)
    values = [0]
    for k in range(1, count):
        total = 0
        for i in range(k):
            total += (-1) ** (i + k + 1) * binom(n + k - i - 1, n - 1) * values[i]
        for i in range(l + 1):
            total += (-1) ** (i + k + 1) * binom(n + k + l - 2 * i, n - 1) * binom(n + 1, i)
        values.append(total)
    return values


def rho_sequence(n: int) -> list[int]:
    """[rho_0(n), ..., rho_n(n)] for even n >= 2."""
    _require_even(n)
    return _rho_values(n, n + 1)


def gamma_sequence(n: int) -> list[int]:
    """[gamma_0(n), ..., gamma_n(n)] for even n >= 2.

    The recursion pins indices 0..ell(n)+1; the rest follow from the symmetry
    gamma_k = gamma_{n-k}.
    """
    _require_even(n)
    l = ell(n)
    values = [1 if n == 2 else 0]
    for k in range(1, l + 2):
        total = (-1) ** k * binom(n, k + l + 2)
        for i in range(k):
            total -= (-1) ** (i + k) * binom(n - 1 + k - i, n - 1) * values[i]
        for i in range(l):
            total -= (-1) ** (i + k) * binom(n - 1 + l + k - 2 * i, n - 1) * binom(n, i)
        values.append(total)
    for k in range(l + 2, n + 1):
        values.append(values[n - k])
    return values


def hilbert_formula(ring: str, n: int) -> list[int]:
    """Closed-form Hilbert function of P, R or A through its last nonzero value."""
    if n < 2:
        raise ValueError("defined for n >= 2")
    if ring == "P":
        return [binom(n, i) for i in range(n + 1)]
    if ring == "R":
        value = lambda i: max(binom(n, i) - binom(n, i - 2), 0)
    elif ring == "A":
        value = lambda i: min(binom(n, i), binom(n, i + 2))
    else:
        raise ValueError(f"unknown ring {ring!r}; expected one of P, R, A")
    seq = []
    i = 0
    while True:
        v = value(i)
        if v == 0:
            return seq
        seq.append(v)
        i += 1


def multiplicity_R(n: int) -> int:
    """Length of R, i.e. binomial(n+1, ell+2)."""
    return binom(n + 1, ell(n) + 2)


def betti_table_formula(ring: str, n: int) -> BettiTable:
    """The predicted Betti table of R or A over the ambient polynomial ring.

    Even n uses the rho/gamma sequences with parameter n; odd n uses parameter
    n - 1 together with two corrected cells where a pure-binomial strand and a
    sequence strand land on the same spot.
    """
    if n < 2:
        raise ValueError("defined for n >= 2")
    l = ell(n)
    entries: dict[tuple[int, int], int] = {}

    def put(i: int, j: int, v: int) -> None:
        if v:
            entries[(i, j)] = v

    if ring == "R":
        if n % 2 == 0:
            rho = rho_sequence(n)
            for i in range(l + 1):
                put(i, 2 * i, binom(n + 1, i))
            for i in range(n + 1):
                put(i, i + l + 1, rho[i])
        else:
            rho = rho_sequence(n - 1)
            for i in range(l + 1):
                put(i, 2 * i, binom(n + 1, i))
            put(l + 1, 2 * l + 2, rho[l + 1] + binom(n, l))
            for i in range(n):
                if i != l + 1:
                    put(i, i + l + 1, rho[i])
            for i in range(1, n + 1):
                put(i, i + l + 2, rho[i - 1])
    elif ring == "A":
        if n % 2 == 0:
            gam = gamma_sequence(n)
            for i in range(l):
                put(i, 2 * i, binom(n, i))
            for i in range(l + 3, n + 1):
                put(i, 2 * i - 2, binom(n, i))
            for i in range(n + 1):
                put(i, i + l, gam[i])
        else:
            gam = gamma_sequence(n - 1)
            for i in range(l):
                put(i, 2 * i, binom(n, i))
            for i in range(l + 4, n + 1):
                put(i, 2 * i - 2, binom(n, i))
            put(l, 2 * l, gam[l] + binom(n - 1, l - 1))
            put(l + 3, 2 * l + 4, gam[l + 2] + binom(n - 1, l + 3))
            for i in range(n):
                if i != l:
                    put(i, i + l, gam[i])
            for i in range(1, n + 1):
                if i != l + 3:
                    put(i, i + l + 1, gam[i - 1])
    else:
        raise ValueError(f"unknown ring {ring!r}; expected R or A")
    return BettiTable(n, entries, module_label=ring, method="formula")
