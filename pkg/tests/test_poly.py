"""Polynomial arithmetic, the monomial order, orbits, and contraction."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from aciring.errors import DimensionMismatch, ExponentCapExceeded
from aciring.fields import GF, QQ
from aciring.poly import (
    DividedPowerForm,
    Polynomial,
    contract,
    format_poly,
    monomials_of_degree,
    parse_poly,
    revlex_compare,
    revlex_key,
    squared_variable_sum,
    squarefree_monomials,
    symmetric_orbit,
    variable_sum,
)

from _oracle import all_monomials, dict_mul, revlex_greater


def P(text, n, field=QQ):
    return parse_poly(text, n, field)


# ----------------------------------------------------------------------
# monomial order
# ----------------------------------------------------------------------


def test_revlex_order_worked_examples():
    # x1*x2 > x1*x3 (n=3): smaller exponent on the last differing variable
    assert revlex_compare((1, 1, 0), (1, 0, 1)) > 0
    # x1^2 > x1*x2
    assert revlex_compare((2, 0), (1, 1)) > 0
    # leading monomial of (x1-x2)(x3-x4) in n=5 is x1*x3
    g = P("x1*x3 - x1*x4 - x2*x3 + x2*x4", 5)
    assert g.lm == (1, 0, 1, 0, 0)


def test_revlex_mismatched_n_rejected():
    with pytest.raises(DimensionMismatch):
        revlex_compare((1, 0), (1, 0, 0))


def _random_monos(n, max_deg):
    return st.tuples(*[st.integers(min_value=0, max_value=max_deg) for _ in range(n)])


@given(_random_monos(4, 3), _random_monos(4, 3))
def test_revlex_matches_oracle_and_antisymmetry(a, b):
    c = revlex_compare(a, b)
    assert (c > 0) == revlex_greater(a, b)
    assert (c < 0) == revlex_greater(b, a)
    assert (c == 0) == (a == b)


@given(_random_monos(5, 2), _random_monos(5, 2), _random_monos(5, 2))
def test_revlex_transitive_and_multiplicative(a, b, w):
    if revlex_compare(a, b) > 0:
        aw = tuple(x + y for x, y in zip(a, w))
        bw = tuple(x + y for x, y in zip(b, w))
        assert revlex_compare(aw, bw) > 0
    # transitivity via the sort key
    assert (revlex_key(a) > revlex_key(b)) == (revlex_compare(a, b) > 0)


def test_monomial_enumeration_counts():
    # C(n+d-1, d) monomials of degree d; C(n, d) squarefree ones
    assert len(list(monomials_of_degree(4, 3))) == 20
    assert sorted(monomials_of_degree(3, 2)) == all_monomials(3, 2)
    assert len(squarefree_monomials(5, 2)) == 10
    assert len(squarefree_monomials(4, 5)) == 0


# ----------------------------------------------------------------------
# arithmetic
# ----------------------------------------------------------------------


def test_product_worked_examples():
    f = P("x1 + x2", 2)
    assert f.mul(f, None) == P("x1^2 + 2*x1*x2 + x2^2", 2)
    assert not (f - f)  # zero polynomial has empty term list
    h3 = variable_sum(3)
    assert h3.mul(h3, None) == P(
        "x1^2 + x2^2 + x3^2 + 2*x1*x2 + 2*x1*x3 + 2*x2*x3", 3
    )
    assert squared_variable_sum(3) == h3.mul(h3, None)


coeffs = st.integers(min_value=-3, max_value=3)


def _poly_strategy(n, field):
    mono = _random_monos(n, 2)
    return st.lists(st.tuples(mono, coeffs), max_size=5).map(
        lambda items: Polynomial(
            n, field, [(m, field.from_int(c)) for m, c in items if c % (field.characteristic or 10**9)]
        )
    )


@settings(max_examples=60)
@given(_poly_strategy(3, QQ), _poly_strategy(3, QQ), _poly_strategy(3, QQ))
def test_ring_laws_rationals(f, g, h):
    assert f.mul(g, None) == g.mul(f, None)
    assert (f + g).mul(h, None) == f.mul(h, None) + g.mul(h, None)
    assert f.mul(g.mul(h, None), None) == f.mul(g, None).mul(h, None)
    assert f + (-f) == Polynomial(3, QQ, [])


@settings(max_examples=60)
@given(_poly_strategy(3, GF(5)), _poly_strategy(3, GF(5)))
def test_mul_matches_dict_oracle_gf5(f, g):
    got = f.mul(g, None)
    want = dict_mul(dict(f.terms), dict(g.terms))
    want = {m: c % 5 for m, c in want.items() if c % 5}
    assert dict(got.terms) == want


@settings(max_examples=60)
@given(_poly_strategy(2, QQ), _poly_strategy(2, QQ))
def test_mul_matches_dict_oracle_qq(f, g):
    got = f.mul(g, None)
    want = {m: c for m, c in dict_mul(dict(f.terms), dict(g.terms)).items() if c}
    assert dict(got.terms) == want


def test_terms_stay_sorted_and_nonzero():
    f = P("x2^2 - x1*x2 + x1^2 + x1*x2", 2)
    monos = [m for m, _ in f.terms]
    assert monos == sorted(monos, key=revlex_key, reverse=True)
    assert all(c != 0 for _, c in f.terms)


def test_exponent_cap_enforced():
    f = P("x1^2", 2)
    with pytest.raises(ExponentCapExceeded):
        f.mul(f.mul(f))  # x1^6 exceeds the default cap of 4
    # cap=None lifts the guard entirely
    assert f.mul(f.mul(f, None), None).lm == (6, 0)


def test_parse_format_round_trip():
    # texts already in canonical (descending grevlex) term order
    for text in ["x1^2 - 2*x1*x2", "x1*x3 - x2*x3 - x1*x4 + x2*x4", "3*x2"]:
        n = 4
        assert format_poly(parse_poly(text, n)) == text
    # and in general parse . format is the identity on polynomials
    f = parse_poly("x2*x4 - x2*x3 + 5*x1^2", 4)
    assert parse_poly(format_poly(f), 4) == f


# ----------------------------------------------------------------------
# symmetric orbit
# ----------------------------------------------------------------------


def test_orbit_worked_examples():
    assert {format_poly(q) for q in symmetric_orbit(P("x1", 2))} == {"x1", "x2"}
    orbit3 = symmetric_orbit(P("x1 - x2", 3))
    assert len(orbit3) == 6  # includes both signs of each difference
    assert P("x2 - x1", 3) in orbit3 and P("x1 - x3", 3) in orbit3
    orbit4 = symmetric_orbit(P("x1*x3 - x2*x3", 4))
    assert len(orbit4) == 24  # all of S_4, pairwise exactly distinct


def test_orbit_closed_under_transpositions():
    f = P("x1*x2 - x3", 4)
    orbit = set(symmetric_orbit(f))
    for i in range(3):
        perm = list(range(4))
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
        assert all(g.permute(perm) in orbit for g in orbit)
    assert len(orbit) in {1, 2, 3, 4, 6, 8, 12, 24}  # divides 4!


# ----------------------------------------------------------------------
# contraction
# ----------------------------------------------------------------------


def test_contract_monomial_rules():
    F = DividedPowerForm(2, QQ, [((1, 1), Fraction(1))])  # y1*y2
    assert contract(P("x1", 2), F) == DividedPowerForm(2, QQ, [((0, 1), Fraction(1))])
    assert not contract(P("x1^2", 2), F)  # over-contraction is zero


def test_contract_h_squared_on_top_form():
    # (x1+..+xn)^2 applied to y1..yn leaves 2 * (all squarefree of degree n-2)
    for n in (3, 4, 5):
        top = DividedPowerForm(n, QQ, [(tuple([1] * n), Fraction(1))])
        got = contract(squared_variable_sum(n), top)
        want = {
            m: Fraction(2)
            for m in map(tuple, all_monomials(n, n - 2))
            if max(m) <= 1
        }
        assert dict(got.terms) == want


@settings(max_examples=40)
@given(_poly_strategy(3, QQ), _poly_strategy(3, QQ))
def test_contract_is_module_action(f, g):
    F = DividedPowerForm(3, QQ, [((1, 1, 1), Fraction(1)), ((2, 1, 0), Fraction(-2))])
    assert contract(f.mul(g, None), F) == contract(f, contract(g, F))
