"""Closed-form side: Catalan numbers, the rho/gamma recursions, Hilbert and
Betti formulas.  Every expected list below is a frozen literal copy — nothing
is imported from the implementation's own tables.
"""

from math import comb

import pytest

from aciring import (
    BettiTable,
    betti_strand,
    betti_table_formula,
    catalan,
    ell,
    gamma_sequence,
    hilbert_formula,
    multiplicity_R,
    rho_sequence,
)
from aciring.formulas import binom, catalan_identities_check

RHO = {
    2: [0, 3, 2],
    4: [0, 0, 15, 16, 5],
    6: [0, 0, 14, 105, 132, 70, 14],
    8: [0, 0, 42, 288, 945, 1216, 819, 288, 42],
}
GAMMA = {
    2: [1, 2, 1],
    4: [0, 9, 16, 9, 0],
    6: [0, 14, 85, 132, 85, 14, 0],
    8: [0, 42, 288, 875, 1216, 875, 288, 42, 0],
}

R4_TABLE = {(0, 0): 1, (1, 2): 5, (2, 4): 15, (3, 5): 16, (4, 6): 5}
R5_TABLE = {
    (0, 0): 1,
    (1, 2): 6,
    (2, 4): 20,
    (3, 5): 16,
    (4, 6): 5,
    (3, 6): 15,
    (4, 7): 16,
    (5, 8): 5,
}
A5_TABLE = {
    (0, 0): 1,
    (1, 2): 10,
    (2, 3): 16,
    (3, 4): 9,
    (2, 4): 9,
    (3, 5): 16,
    (4, 6): 10,
    (5, 8): 1,
}


def poly_ring_hilbert(n: int, through: int) -> list[int]:
    return [comb(n - 1 + d, n - 1) for d in range(through + 1)]


# ---------------------------------------------------------------------------
# small helpers
# ---------------------------------------------------------------------------


def test_binom_is_zero_outside_range():
    assert binom(4, 2) == 6
    assert binom(4, -1) == 0
    assert binom(3, 5) == 0


def test_ell_values():
    assert [ell(n) for n in range(2, 9)] == [0, 0, 1, 1, 2, 2, 3]


def test_catalan_values():
    assert catalan(0) == 1
    assert catalan(3) == 5
    assert catalan(4) == 14


def test_catalan_identities():
    assert catalan_identities_check(1)
    assert catalan_identities_check(2)  # 2 = 6-4 = 3-1 = 2-0
    assert catalan_identities_check(10)
    with pytest.raises(ValueError):
        catalan_identities_check(0)


# ---------------------------------------------------------------------------
# the rho and gamma sequences
# ---------------------------------------------------------------------------


def test_rho_sequence_frozen_lists():
    for n, expected in RHO.items():
        assert rho_sequence(n) == expected


def test_gamma_sequence_frozen_lists():
    for n, expected in GAMMA.items():
        assert gamma_sequence(n) == expected


def test_sequences_reject_odd_parameters():
    for fn in (rho_sequence, gamma_sequence):
        for bad in (3, 5, 1, 0):
            with pytest.raises(ValueError):
                fn(bad)


def test_rho_properties_even_n():
    for n in range(2, 11, 2):
        l = ell(n)
        rho = rho_sequence(n)
        c = catalan(l + 2)
        if n >= 4:
            assert rho[1] == 0
        # symmetry across the strand, with out-of-range values read as zero
        for k in range(l + 1):
            mirrored = rho[n - k + 2] if n - k + 2 <= n else 0
            assert rho[k] == mirrored
        assert rho[n] == c
        if n >= 6:
            assert rho[2] == c
        assert rho[l + 1] == (rho[l + 3] if l + 3 <= n else 0) + binom(n + 1, l + 1)


def test_gamma_properties_even_n():
    for n in range(6, 11, 2):
        l = ell(n)
        gam = gamma_sequence(n)
        rho = rho_sequence(n)
        c = catalan(l + 2)
        assert gam[1] == gam[n - 1] == c
        for i in range(l):
            assert gam[i] == rho[i + 1]
    for n in range(2, 11, 2):
        gam = gamma_sequence(n)
        for k in range(1, n):
            assert gam[k] == gam[n - k]


def test_odd_n_strand_collision_identity():
    # for odd n the two corrected table cells must agree
    for n in (3, 5, 7, 9):
        l = ell(n)
        rho = rho_sequence(n - 1)
        left = rho[l + 1] + binom(n, l)
        right = (rho[l + 3] if l + 3 <= n - 1 else 0) + binom(n + 1, l + 1)
        assert left == right


# ---------------------------------------------------------------------------
# the strand recursion
# ---------------------------------------------------------------------------


def test_betti_strand_reproduces_rho_2_of_4():
    known = BettiTable(4, {(0, 0): 1, (1, 2): 5})
    got = betti_strand([1, 4, 5], poly_ring_hilbert(4, 4), known, a=2, k=2)
    assert got == 15 == rho_sequence(4)[2]


def test_betti_strand_reproduces_gamma_1_of_6():
    known = BettiTable(6, {(0, 0): 1, (1, 2): 6})
    got = betti_strand([1, 6, 15, 6, 1], poly_ring_hilbert(6, 3), known, a=2, k=1)
    assert got == 14 == gamma_sequence(6)[1]


def test_betti_strand_base_case():
    assert betti_strand([1, 3], poly_ring_hilbert(3, 1), BettiTable(3, {}), a=0, k=0) == 1


def test_betti_strand_refuses_blind_window():
    known = BettiTable(4, {(0, 0): 1, (1, 2): 5}, window=(1, 2))
    with pytest.raises(ValueError):
        betti_strand([1, 4, 5], poly_ring_hilbert(4, 4), known, a=2, k=2)


# ---------------------------------------------------------------------------
# Hilbert closed forms and multiplicity
# ---------------------------------------------------------------------------


def test_hilbert_formula_literals():
    assert hilbert_formula("R", 4) == [1, 4, 5]
    assert hilbert_formula("A", 5) == [1, 5, 5, 1]
    assert hilbert_formula("P", 3) == [1, 3, 3, 1]
    assert hilbert_formula("R", 8) == [1, 8, 27, 48, 42]
    assert hilbert_formula("A", 8) == [1, 8, 28, 56, 28, 8, 1]


def test_hilbert_formula_rejects_bad_input():
    with pytest.raises(ValueError):
        hilbert_formula("R", 1)
    with pytest.raises(ValueError):
        hilbert_formula("T", 4)


def test_multiplicity_literals():
    assert multiplicity_R(5) == 20
    assert multiplicity_R(2) == 3
    assert multiplicity_R(8) == 126
    for n in range(2, 9):
        assert multiplicity_R(n) == sum(hilbert_formula("R", n))


# ---------------------------------------------------------------------------
# full closed-form Betti tables
# ---------------------------------------------------------------------------


def test_betti_table_formula_literals():
    assert betti_table_formula("R", 4).entries == R4_TABLE
    assert betti_table_formula("R", 5).entries == R5_TABLE
    assert betti_table_formula("A", 5).entries == A5_TABLE


def test_betti_table_formula_small_literals():
    assert betti_table_formula("R", 2).entries == {(0, 0): 1, (1, 2): 3, (2, 3): 2}
    assert betti_table_formula("R", 3).entries == {
        (0, 0): 1,
        (1, 2): 4,
        (2, 3): 2,
        (2, 4): 3,
        (3, 5): 2,
    }
    assert betti_table_formula("A", 2).entries == {(0, 0): 1, (1, 1): 2, (2, 2): 1}
    assert betti_table_formula("A", 3).entries == {
        (0, 0): 1,
        (1, 1): 2,
        (2, 2): 1,
        (1, 2): 1,
        (2, 3): 2,
        (3, 4): 1,
    }
    assert betti_table_formula("A", 4).entries == {
        (0, 0): 1,
        (1, 2): 9,
        (2, 3): 16,
        (3, 4): 9,
        (4, 6): 1,
    }


def test_betti_table_formula_strands_use_the_sequences():
    for n in (6, 8):
        l = ell(n)
        rho, gam = rho_sequence(n), gamma_sequence(n)
        tR = betti_table_formula("R", n)
        tA = betti_table_formula("A", n)
        for i in range(n + 1):
            assert tR.get(i, i + l + 1) == rho[i]
            assert tA.get(i, i + l) == gam[i]
        for i in range(l + 1):
            assert tR.get(i, 2 * i) == binom(n + 1, i)


def test_betti_table_formula_rejects_bad_input():
    with pytest.raises(ValueError):
        betti_table_formula("P", 4)
    with pytest.raises(ValueError):
        betti_table_formula("R", 1)
