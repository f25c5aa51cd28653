"""Quotient-ring behaviour: Hilbert functions, multiplication matrices,
annihilators, socles, and the zero-divisor / regular-element checks.

All expected numbers are frozen literals.  Rings are cached per test module
because several tests want the same handful of quotients.
"""

from functools import lru_cache
from math import comb

from aciring import (
    QQ,
    Polynomial,
    annihilator,
    build_quotient,
    exact_zero_divisor_check,
    hilbert_function,
    max_rank_check,
    mult_map,
    named_quotient,
    primed_aci_ideal,
    primed_squares_ideal,
    regular_element_check,
    socle,
    squared_variable_sum,
    squares_ideal,
    variable_sum,
)
from aciring.linalg import rank


@lru_cache(maxsize=None)
def ring(label: str, n: int):
    return named_quotient(label, n, QQ)


def var(n: int, i: int) -> Polynomial:
    return Polynomial.variable(n, QQ, i)


# ---------------------------------------------------------------------------
# construction and Hilbert functions
# ---------------------------------------------------------------------------


def test_build_quotient_dimension_examples():
    assert hilbert_function(ring("P", 3)) == [1, 3, 3, 1]
    assert hilbert_function(ring("R", 5)) == [1, 5, 9, 5]
    # the n=2 Gorenstein quotient collapses to the ground field
    assert hilbert_function(ring("A", 2)) == [1]


def test_hilbert_function_literals():
    assert hilbert_function(ring("P", 4)) == [1, 4, 6, 4, 1]
    assert hilbert_function(ring("R", 4)) == [1, 4, 5]
    assert hilbert_function(ring("A", 5)) == [1, 5, 5, 1]
    assert hilbert_function(ring("R", 2)) == [1, 2]
    assert hilbert_function(ring("R", 3)) == [1, 3, 2]
    assert hilbert_function(ring("A", 4)) == [1, 4, 1]


def test_hilbert_function_r8():
    assert hilbert_function(ring("R", 8)) == [1, 8, 27, 48, 42]


# ---------------------------------------------------------------------------
# multiplication maps
# ---------------------------------------------------------------------------


def test_mult_map_by_x1_on_p2():
    P2 = ring("P", 2)
    mm = mult_map(P2, var(2, 0), 0)
    assert (mm.source_degree, mm.target_degree) == (0, 1)
    assert mm.shape() == (2, 1)
    # degree-1 basis in descending order is (x1, x2); the image is x1
    assert [row[0] for row in mm.matrix] == [QQ.one(), QQ.zero()]


def test_mult_map_by_h_squared_on_p5():
    P5 = ring("P", 5)
    mm = mult_map(P5, squared_variable_sum(5, QQ), 1)
    assert mm.shape() == (10, 5)
    assert rank(mm.matrix, QQ) == 5


def test_mult_map_by_h_squared_on_p4_top():
    P4 = ring("P", 4)
    mm = mult_map(P4, squared_variable_sum(4, QQ), 2)
    assert mm.shape() == (1, 6)
    assert rank(mm.matrix, QQ) == 1


def test_mult_map_columns_are_normal_forms():
    R3 = ring("R", 3)
    f = var(3, 0) + var(3, 1)
    mm = mult_map(R3, f, 1)
    for j, m in enumerate(R3.basis(1)):
        image = R3.nf(f.mul(Polynomial.monomial(3, QQ, m), None))
        col = [mm.matrix[i][j] for i in range(mm.shape()[0])]
        assert R3.from_vector(2, col) == image


# ---------------------------------------------------------------------------
# annihilators (the colon construction)
# ---------------------------------------------------------------------------


def test_annihilator_p2_is_maximal_ideal():
    P2 = ring("P", 2)
    extra = P2.annihilator_of_element(squared_variable_sum(2, QQ))
    assert sorted(str(g) for g in extra) == ["x1", "x2"]
    # the lifted ideal contains the defining squares as well
    assert len(annihilator(P2, squared_variable_sum(2, QQ))) == 4


def test_annihilator_p4_five_quadrics():
    P4 = ring("P", 4)
    extra = P4.annihilator_of_element(squared_variable_sum(4, QQ))
    assert len(extra) == 5
    assert all(g.degree == 2 for g in extra)


def test_annihilator_p7_catalan_many_cubics():
    P7 = ring("P", 7)
    extra = P7.annihilator_of_element(squared_variable_sum(7, QQ))
    assert len(extra) == 14  # the fourth Catalan number
    assert all(g.degree == 3 for g in extra)


# ---------------------------------------------------------------------------
# socles
# ---------------------------------------------------------------------------


def test_socle_literals():
    assert socle(ring("R", 5)) == [0, 0, 0, 5]
    assert socle(ring("A", 5)) == [0, 0, 0, 1]
    assert socle(ring("R", 2)) == [0, 2]


def test_r_is_level_and_a_is_gorenstein():
    for n in range(2, 9):
        ell = (n - 2) // 2
        dims = socle(ring("R", n))
        nonzero = [d for d, s in enumerate(dims) if s]
        assert nonzero == [n - ell - 1]
        catalan = comb(2 * (ell + 2), ell + 2) // (ell + 3)
        assert dims[n - ell - 1] == catalan
    for n in range(3, 8):
        dims = socle(ring("A", n))
        assert [d for d, s in enumerate(dims) if s] == [n - 2]
        assert dims[n - 2] == 1


# ---------------------------------------------------------------------------
# maximal-rank and Lefschetz-style checks
# ---------------------------------------------------------------------------


def test_max_rank_check_h_squared_on_p():
    for n in range(2, 9):
        assert max_rank_check(ring("P", n), squared_variable_sum(n, QQ))


def test_max_rank_check_rejects_single_square():
    assert not max_rank_check(ring("P", 3), var(3, 0).mul(var(3, 0)))


def test_p_has_strong_lefschetz():
    for n in range(2, 6):
        P = ring("P", n)
        h = variable_sum(n, QQ)
        for j in range(1, n + 1):
            assert max_rank_check(P, h.power(j, None))


# ---------------------------------------------------------------------------
# exact zero divisors and regular elements
# ---------------------------------------------------------------------------


def test_exact_zero_divisor_odd_n():
    assert exact_zero_divisor_check(ring("R", 5), var(5, 4))
    assert exact_zero_divisor_check(ring("A", 7), var(7, 6))


def test_exact_zero_divisor_fails_for_even_n():
    assert not exact_zero_divisor_check(ring("R", 4), var(4, 3))


def test_regular_element_in_primed_rings():
    R3p = build_quotient(primed_aci_ideal(3, QQ), 10, name="R'")
    assert regular_element_check(R3p, var(3, 2), 8)

    P5p = build_quotient(primed_squares_ideal(5, QQ), 12, name="P'")
    f = primed_aci_ideal(5, QQ)[-1]  # (x1+..+x5)^2 - x5^2
    A5p = build_quotient(annihilator(P5p, f, 6), 10, name="A'")
    assert regular_element_check(A5p, var(5, 4), 8)


def test_zero_divisor_is_not_regular():
    assert not regular_element_check(ring("R", 3), var(3, 2), 4)


# ---------------------------------------------------------------------------
# invariants tying P, R and A together
# ---------------------------------------------------------------------------


def test_short_exact_sequence_of_hilbert_functions():
    # h_A(i) = h_P(i+2) - h_R(i+2) for every degree i
    for n in range(2, 8):
        A, P, R = ring("A", n), ring("P", n), ring("R", n)
        for i in range(n + 1):
            assert A.hilbert_function(i) == P.hilbert_function(i + 2) - R.hilbert_function(i + 2)


def test_multiplicity_of_r():
    for n in range(2, 9):
        ell = (n - 2) // 2
        assert sum(hilbert_function(ring("R", n))) == comb(n + 1, ell + 2)
    assert sum(hilbert_function(ring("R", 5))) == 20
    assert sum(hilbert_function(ring("R", 2))) == 3
    assert sum(hilbert_function(ring("R", 8))) == 126


def test_primed_gorenstein_slices():
    # modding A' by the last square recovers A; modding by the last
    # variable recovers the (n-1)-variable analogue
    expected = {
        3: ([1, 1], [1]),
        5: ([1, 5, 5, 1], [1, 4, 1]),
        7: ([1, 7, 21, 21, 7, 1], [1, 6, 15, 6, 1]),
    }
    for n, (h_full, h_bar) in expected.items():
        Pp = build_quotient(primed_squares_ideal(n, QQ), 2 * n + 2, name="P'")
        f = primed_aci_ideal(n, QQ)[-1]
        gens = annihilator(Pp, f, n + 1)
        xn = var(n, n - 1)
        mod_square = build_quotient(gens + [xn.mul(xn)])
        mod_var = build_quotient(gens + [xn])
        assert hilbert_function(mod_square) == h_full
        assert hilbert_function(mod_var) == h_bar


def test_hilbert_step_down_for_odd_n():
    # going down one variable splits each value of the bigger ring
    for n in (3, 5, 7):
        for label in ("R", "A"):
            big = hilbert_function(ring(label, n))
            small = hilbert_function(ring(label, n - 1))

            def at(seq, i):
                return seq[i] if 0 <= i < len(seq) else 0

            for i in range(len(big) + 1):
                assert at(small, i + 1) + at(small, i) == at(big, i + 1)


# ---------------------------------------------------------------------------
# coordinate plumbing
# ---------------------------------------------------------------------------


def test_vector_round_trip():
    R4 = ring("R", 4)
    f = R4.nf(var(4, 0).mul(var(4, 1)) - var(4, 2).mul(var(4, 3)))
    v = R4.to_vector(f, 2)
    assert R4.from_vector(2, v) == f


def test_variable_annihilator_is_principal_report():
    ok, rows = ring("R", 5).variable_annihilator_is_principal(4)
    assert ok
    # each row records (degree, dim annihilator, dim principal part)
    assert all(a == b for _, a, b in rows)
