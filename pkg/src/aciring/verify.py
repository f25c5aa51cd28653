"""Verification suites: every headline identity re-checked from scratch.

Each suite runs a family of independent checks over a range of n, timing
each one and recording expected versus computed values.  Suites mirror the
module-level invariants: closed-form Hilbert functions against quotient
computations, Betti tables by formula against actual resolutions, the
Gorenstein ideal built three ways, socle structure, exact zero divisors,
reduction/lifting across the hypersurface, duality, the sequence
recursions, and the strong Lefschetz checks.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .errors import AciringError
from .fields import QQ, default_characteristic, field_for_char
from .formulas import betti_table_formula, catalan, ell, gamma_sequence, hilbert_formula, rho_sequence
from .gorenstein import (
    G_from_orbit,
    ann_of_form,
    ballot_sequences,
    disjointness_invertible,
    g_identity_check,
    predicted_initial_ideal,
    slp_check_A,
)
from .groebner import aci_ideal, buchberger, ideal_equal, squares_ideal
from .poly import squared_variable_sum
from .quotient import QuotientRing, annihilator, build_quotient
from .resolution import ci_resolution_betti, duality_check, koszul_betti, lifting_identity_check

SUITE_NAMES = (
    "hilbert",
    "betti-even",
    "betti-odd",
    "duality",
    "socle",
    "ezd",
    "lifting",
    "groebner",
    "slp",
    "sequences",
)

# frozen reference data for the sequences suite (even n only)
RHO_LISTS = {
    2: [0, 3, 2],
    4: [0, 0, 15, 16, 5],
    6: [0, 0, 14, 105, 132, 70, 14],
    8: [0, 0, 42, 288, 945, 1216, 819, 288, 42],
}
GAMMA_LISTS = {
    2: [1, 2, 1],
    4: [0, 9, 16, 9, 0],
    6: [0, 14, 85, 132, 85, 14, 0],
    8: [0, 42, 288, 875, 1216, 875, 288, 42, 0],
}


@dataclass
class CheckRecord:
    check_id: str
    n: int
    expected: str
    computed: str
    passed: bool
    runtime_ms: float

    def to_json(self) -> dict:
        return {
            "check": self.check_id,
            "n": self.n,
            "expected": self.expected,
            "computed": self.computed,
            "pass": self.passed,
            "runtime_ms": round(self.runtime_ms, 3),
        }


@dataclass
class VerificationReport:
    suite: str
    records: list[CheckRecord]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "pass": self.passed,
            "checks": [r.to_json() for r in self.records],
        }

    def format_text(self) -> str:
        lines = []
        for r in self.records:
            verdict = "PASS" if r.passed else "FAIL"
            line = f"{verdict}  {r.check_id}  n={r.n}  ({r.runtime_ms:.0f} ms)"
            if not r.passed:
                line += f"\n      expected {r.expected}\n      computed {r.computed}"
            lines.append(line)
        total = len(self.records)
        good = sum(r.passed for r in self.records)
        lines.append(f"{self.suite}: {good}/{total} checks passed")
        return "\n".join(lines)


# ----------------------------------------------------------------------
# ring builders
# ----------------------------------------------------------------------


def _field(n: int, characteristic: int | None):
    if characteristic is None:
        characteristic = default_characteristic(n)
    return field_for_char(characteristic)


def _ring_P(n, field):
    return build_quotient(squares_ideal(n, field), n=n, field=field, name="P")


def _ring_R(n, field):
    return build_quotient(aci_ideal(n, field), n=n, field=field, name="R")


def _gorenstein_generators(n, field):
    return annihilator(_ring_P(n, field), squared_variable_sum(n, field))


def _ring_A(n, field):
    return build_quotient(_gorenstein_generators(n, field), n=n, field=field, name="A")


# ----------------------------------------------------------------------
# individual checks; each returns (expected, computed, passed)
# ----------------------------------------------------------------------


def _check_hilbert(ring: str, n: int, field):
    builder = {"P": _ring_P, "R": _ring_R, "A": _ring_A}[ring]
    expected = hilbert_formula(ring, n)
    computed = builder(n, field).hilbert_series()
    return str(expected), str(computed), expected == computed


def _check_hilbert_step_down(ring: str, n: int, field):
    """For odd n the Hilbert function drops to n-1 variables by h(i+1) + h(i)."""
    builder = {"R": _ring_R, "A": _ring_A}[ring]
    big = builder(n, field).hilbert_series()
    small = builder(n - 1, field).hilbert_series()

    def val(seq, i):
        return seq[i] if 0 <= i < len(seq) else 0

    top = max(len(big), len(small) + 1)
    ok = all(val(small, i + 1) + val(small, i) == val(big, i + 1) for i in range(-1, top))
    return f"pairwise sums of {small}", str(big), ok


def _check_betti(ring: str, n: int, field):
    builder = {"R": _ring_R, "A": _ring_A}[ring]
    expected = betti_table_formula(ring, n)
    computed = koszul_betti(builder(n, field))
    return str(sorted(expected.entries.items())), str(sorted(computed.entries.items())), (
        expected.entries == computed.entries
    )


def _check_duality(n: int, field):
    ok = duality_check(n, field)
    return "flip-symmetric tables", "match" if ok else "mismatch", ok


def _check_socle_R(n: int, field):
    R = _ring_R(n, field)
    dims = R.socle_dimensions()
    expected = [0] * (n - ell(n) - 1) + [catalan(ell(n) + 2)]
    return str(expected), str(dims), dims == expected


def _check_socle_gens(n: int, field):
    lifts = _ring_P(n, field).annihilator_of_element(squared_variable_sum(n, field))
    want = catalan(ell(n) + 2)
    degs = sorted(g.degree for g in lifts)
    expected = [ell(n) + 1] * want
    return f"{want} generators in degree {ell(n) + 1}", str(degs), degs == expected


def _check_ezd(ring: str, n: int, field):
    builder = {"R": _ring_R, "A": _ring_A}[ring]
    q = builder(n, field)
    ok, rows = q.variable_annihilator_is_principal(n - 1)
    return "annihilator = principal ideal", f"dimension rows {rows}", ok


def _check_reduction(ring: str, n: int, field):
    """Resolving over the single-square hypersurface matches the ring one
    variable down."""
    builder = {"R": _ring_R, "A": _ring_A}[ring]
    big = builder(n, field)
    small = builder(n - 1, field)
    over_small = koszul_betti(small)
    max_i = n - 1
    max_j = max_i + max(big.socle_degree(), small.socle_degree())
    over_t = ci_resolution_betti(big, U=(n - 1,), max_i=max_i, max_j=max_j)
    keys = set(over_t.entries) | set(over_small.entries)
    ok = all(over_t.get(i, j) == over_small.get(i, j) for i, j in keys)
    return str(sorted(over_small.entries.items())), str(sorted(over_t.entries.items())), ok


def _check_lifting(n: int, field):
    ok = lifting_identity_check(n, field)
    return "additive two-term splitting", "holds" if ok else "fails", ok


def _check_three_way(n: int, field):
    colon = _gorenstein_generators(n, field)
    orbit = G_from_orbit(n, field)
    dual = ann_of_form(n, field)
    bound = 2 * n
    ok = (
        ideal_equal(colon, orbit, degree_bound=bound)
        and ideal_equal(orbit, dual, degree_bound=bound)
        and ideal_equal(colon, dual, degree_bound=bound)
    )
    return "three equal ideals", "equal" if ok else "different", ok


def _check_initial_ideal(n: int, field):
    gb = buchberger(G_from_orbit(n, field))
    predicted = predicted_initial_ideal(n)
    computed = gb.initial_ideal()
    degs = sorted({g.degree for g in gb.polys})
    ok = computed == predicted and set(degs) <= {2, ell(n) + 1}
    return (
        f"{sorted(predicted.gens)} in degrees {{2, {ell(n) + 1}}}",
        f"{sorted(computed.gens)} in degrees {degs}",
        ok,
    )


def _check_g_identity(n: int, field):
    ok = g_identity_check(n, field)
    return "product reduces to zero", "zero" if ok else "nonzero", ok


def _check_slp(n: int, characteristic: int):
    ok = slp_check_A(n, characteristic)
    return "Lefschetz in every degree and power", "holds" if ok else "fails", ok


def _check_disjointness(n: int):
    bad = [i for i in range(1, ell(n) + 1) if not disjointness_invertible(n, i)]
    return "all orders invertible", "all invertible" if not bad else f"singular at {bad}", not bad


def _check_ballot_count(n: int):
    expected = catalan(ell(n) + 2)
    computed = len(ballot_sequences(n))
    return str(expected), str(computed), expected == computed


def _check_sequence_list(kind: str, n: int):
    table = RHO_LISTS if kind == "rho" else GAMMA_LISTS
    fn = rho_sequence if kind == "rho" else gamma_sequence
    expected = table[n]
    computed = fn(n)
    return str(expected), str(computed), expected == computed


def _check_rho_properties(n: int):
    from .formulas import _rho_values

    values = _rho_values(n, n + 4)
    L = ell(n)
    problems = []
    if n >= 4 and values[1] != 0:
        problems.append("rho_1 != 0")
    if any(values[k] != 0 for k in range(n + 1, n + 4)):
        problems.append("tail not zero")
    if any(values[k] != values[n - k + 2] for k in range(0, L + 1)):
        problems.append("symmetry fails")
    if values[n] != catalan(L + 2):
        problems.append("end value not Catalan")
    if n >= 6 and values[2] != catalan(L + 2):
        problems.append("second value not Catalan")
    from math import comb

    if values[L + 1] != values[L + 3] + comb(n + 1, L + 1):
        problems.append("middle-column identity fails")
    return "all properties", "all hold" if not problems else "; ".join(problems), not problems


def _check_gamma_properties(n: int):
    values = gamma_sequence(n)
    L = ell(n)
    rho = rho_sequence(n)
    problems = []
    if n >= 6 and (values[1] != catalan(L + 2) or values[n - 1] != catalan(L + 2)):
        problems.append("edge values not Catalan")
    if any(values[i] != rho[i + 1] for i in range(0, L)):
        problems.append("interleaving with the first sequence fails")
    if any(values[k] != values[n - k] for k in range(0, n + 1)):
        problems.append("symmetry fails")
    return "all properties", "all hold" if not problems else "; ".join(problems), not problems


# ----------------------------------------------------------------------
# suite assembly
# ----------------------------------------------------------------------


def _timed(records: list[CheckRecord], check_id: str, n: int, fn):
    t0 = time.perf_counter()
    try:
        expected, computed, ok = fn()
    except AciringError as exc:
        ms = (time.perf_counter() - t0) * 1000.0
        records.append(CheckRecord(check_id, n, "completes within caps", f"resource: {exc}", False, ms))
        return
    ms = (time.perf_counter() - t0) * 1000.0
    records.append(CheckRecord(check_id, n, expected, computed, ok, ms))


def _wanted(ns, default):
    if ns is None:
        return list(default)
    return [n for n in ns if n in set(default)]


def run_suite(suite: str, ns: list[int] | None = None, characteristic: int | None = None) -> VerificationReport:
    """Run one suite (or "all") over the requested n values.

    Without an explicit range each suite uses its own default, chosen to
    stay within the documented runtime budgets: rationals through n = 7
    and the default prime field at n = 8.
    """
    if suite == "all":
        records = []
        for name in SUITE_NAMES:
            records.extend(run_suite(name, ns, characteristic).records)
        return VerificationReport("all", records)
    if suite not in SUITE_NAMES:
        raise ValueError(f"unknown suite {suite!r}; choose from {('all',) + SUITE_NAMES}")

    records: list[CheckRecord] = []

    if suite == "hilbert":
        for n in _wanted(ns, range(2, 9)):
            field = _field(n, characteristic)
            for ring in ("P", "R", "A"):
                _timed(records, f"hilbert-{ring}", n, lambda r=ring, n=n, f=field: _check_hilbert(r, n, f))
        for n in _wanted(ns, (3, 5, 7)):
            field = _field(n, characteristic)
            for ring in ("R", "A"):
                _timed(
                    records,
                    f"hilbert-step-down-{ring}",
                    n,
                    lambda r=ring, n=n, f=field: _check_hilbert_step_down(r, n, f),
                )

    elif suite == "betti-even":
        for n in _wanted(ns, (2, 4, 6, 8)):
            field = _field(n, characteristic)
            for ring in ("R", "A"):
                _timed(records, f"betti-even-{ring}", n, lambda r=ring, n=n, f=field: _check_betti(r, n, f))

    elif suite == "betti-odd":
        for n in _wanted(ns, (3, 5, 7)):
            field = _field(n, characteristic)
            for ring in ("R", "A"):
                _timed(records, f"betti-odd-{ring}", n, lambda r=ring, n=n, f=field: _check_betti(r, n, f))

    elif suite == "duality":
        for n in _wanted(ns, range(2, 7)):
            field = _field(n, characteristic)
            _timed(records, "duality", n, lambda n=n, f=field: _check_duality(n, f))

    elif suite == "socle":
        for n in _wanted(ns, range(2, 8)):
            field = _field(n, characteristic)
            _timed(records, "socle-level", n, lambda n=n, f=field: _check_socle_R(n, f))
            _timed(records, "socle-generators", n, lambda n=n, f=field: _check_socle_gens(n, f))

    elif suite == "ezd":
        for n in _wanted(ns, (3, 5, 7)):
            field = _field(n, characteristic)
            for ring in ("R", "A"):
                _timed(records, f"ezd-{ring}", n, lambda r=ring, n=n, f=field: _check_ezd(r, n, f))
                _timed(
                    records,
                    f"ezd-reduction-{ring}",
                    n,
                    lambda r=ring, n=n, f=field: _check_reduction(r, n, f),
                )

    elif suite == "lifting":
        for n in _wanted(ns, (3, 5, 7)):
            field = _field(n, characteristic)
            _timed(records, "lifting", n, lambda n=n, f=field: _check_lifting(n, f))

    elif suite == "groebner":
        for n in _wanted(ns, range(2, 8)):
            field = _field(n, characteristic)
            _timed(records, "groebner-three-way", n, lambda n=n, f=field: _check_three_way(n, f))
            _timed(records, "groebner-initial-ideal", n, lambda n=n, f=field: _check_initial_ideal(n, f))
        for n in _wanted(ns, range(2, 10)):
            field = _field(n, characteristic)
            _timed(records, "groebner-identity", n, lambda n=n, f=field: _check_g_identity(n, f))

    elif suite == "slp":
        for n in _wanted(ns, range(2, 8)):
            char = characteristic if characteristic is not None else 0
            _timed(records, "slp-both-routes", n, lambda n=n, c=char: _check_slp(n, c))
        for n in _wanted(ns, range(2, 11)):
            _timed(records, "slp-disjointness", n, lambda n=n: _check_disjointness(n))

    elif suite == "sequences":
        for n in _wanted(ns, (2, 4, 6, 8)):
            _timed(records, "sequences-rho-list", n, lambda n=n: _check_sequence_list("rho", n))
            _timed(records, "sequences-gamma-list", n, lambda n=n: _check_sequence_list("gamma", n))
        for n in _wanted(ns, (2, 4, 6, 8, 10)):
            _timed(records, "sequences-rho-properties", n, lambda n=n: _check_rho_properties(n))
            _timed(records, "sequences-gamma-properties", n, lambda n=n: _check_gamma_properties(n))
        for n in _wanted(ns, range(2, 13)):
            _timed(records, "sequences-ballot-count", n, lambda n=n: _check_ballot_count(n))

    return VerificationReport(suite, records)
