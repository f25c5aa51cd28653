"""Command-line front end: compute tables, print sequences, run verification.

Subcommands
-----------
hilbert     Hilbert function of P, R or A, by closed formula or from the
            quotient ring itself; ``--cross-check`` runs both and compares.
betti       Graded Betti table of R or A, by closed formula or through the
            Koszul-complex resolution; ``--cross-check`` compares.
sequence    The rho or gamma integer sequence for even n.
gorenstein  Generators of the Gorenstein ideal, predicted vs computed
            initial ideal, ballot sequences, Hessian determinants, and the
            strong-Lefschetz verdict.
verify      Run a named verification suite and report PASS/FAIL per check.

Exit codes: 0 success / all checks pass, 1 verification or cross-check
failure, 2 usage error, 3 resource cap exceeded.

Results of the compute subcommands are cached as JSON under the directory
named by the ``ACIRING_CACHE_DIR`` environment variable (defaulting to the
user cache directory); ``--no-cache`` bypasses the cache entirely.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import __version__
from .cache import cache_key, lookup, store
from .errors import AciringError
from .fields import GF, QQ, default_characteristic
from .formulas import betti_table_formula, ell, gamma_sequence, hilbert_formula, rho_sequence
from .gorenstein import (
    G_from_orbit,
    ballot_sequences,
    g_polynomial,
    hessian,
    predicted_initial_ideal,
    slp_check_A,
)
from .groebner import buchberger
from .poly import _format_mono, format_poly
from .quotient import hilbert_function
from .resolution import BettiTable, koszul_betti, named_quotient
from .verify import SUITE_NAMES, run_suite

__all__ = ["main", "build_parser"]


# ----------------------------------------------------------------------
# argument plumbing
# ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="aciring",
        description="Exact computations for the almost-complete-intersection "
        "quadric quotients and their linked Gorenstein rings.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_n(p, required=True):
        group = p.add_mutually_exclusive_group(required=required)
        group.add_argument("--n", type=int, help="number of variables")
        group.add_argument("--n-range", metavar="A..B", help="inclusive range of n values")

    def add_output(p):
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")
        p.add_argument("--out", metavar="FILE", help="write output to FILE instead of stdout")

    ph = sub.add_parser("hilbert", help="Hilbert function of P, R or A")
    add_n(ph)
    ph.add_argument("--ring", choices=("P", "R", "A"), required=True)
    ph.add_argument("--char", type=int, default=None, help="coefficient characteristic (0 = rationals)")
    ph.add_argument("--method", choices=("formula", "quotient"), default="formula")
    ph.add_argument("--cross-check", action="store_true", help="run both methods and compare")
    ph.add_argument("--degree-cap", type=int, default=None, help="abort if the computation needs higher degrees")
    ph.add_argument("--no-cache", action="store_true")
    add_output(ph)

    pb = sub.add_parser("betti", help="graded Betti table of R or A")
    add_n(pb)
    pb.add_argument("--ring", choices=("R", "A"), required=True)
    pb.add_argument("--char", type=int, default=None, help="coefficient characteristic (0 = rationals)")
    pb.add_argument("--method", choices=("formula", "koszul"), default="formula")
    pb.add_argument("--cross-check", action="store_true", help="run both methods and compare")
    pb.add_argument("--degree-cap", type=int, default=None, help="compute the table only through this internal degree")
    pb.add_argument("--no-cache", action="store_true")
    add_output(pb)

    ps = sub.add_parser("sequence", help="rho or gamma sequence (even n)")
    ps.add_argument("kind", choices=("rho", "gamma"))
    add_n(ps)
    ps.add_argument("--no-cache", action="store_true")
    add_output(ps)

    pg = sub.add_parser("gorenstein", help="Gorenstein ideal: generators, initial ideal, Lefschetz data")
    add_n(pg)
    pg.add_argument("--char", type=int, default=None, help="coefficient characteristic (0 = rationals)")
    pg.add_argument("--no-cache", action="store_true")
    add_output(pg)

    pv = sub.add_parser("verify", help="run a verification suite")
    pv.add_argument("--suite", choices=("all",) + SUITE_NAMES, default="all")
    add_n(pv, required=False)
    pv.add_argument("--char", type=int, default=None, help="coefficient characteristic (0 = rationals)")
    add_output(pv)

    return parser


def _parse_ns(args, parser) -> list[int] | None:
    if args.n is not None:
        if args.n < 2:
            parser.error("--n must be at least 2")
        return [args.n]
    if args.n_range is not None:
        m = re.fullmatch(r"(\d+)\.\.(\d+)", args.n_range)
        if m is None:
            parser.error("--n-range must look like A..B")
        a, b = int(m.group(1)), int(m.group(2))
        if a < 2 or b < a:
            parser.error("--n-range needs 2 <= A <= B")
        return list(range(a, b + 1))
    return None


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _resolve_char(args, ns, parser) -> int:
    if args.char is None:
        return default_characteristic(max(ns))
    c = args.char
    if c == 0:
        return 0
    if not _is_prime(c) or c <= max(ns):
        parser.error("--char must be 0 or a prime larger than every requested n")
    return c


def _field_for(characteristic: int):
    return QQ if characteristic == 0 else GF(characteristic)


def _emit(text: str, args) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_text(payload: dict) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _cached(args, key, compute):
    """Return the payload for ``key``, recomputing unless cached."""
    if not args.no_cache:
        hit = lookup(key)
        if hit is not None:
            return hit
    payload = compute()
    if not args.no_cache:
        store(key, payload)
    return payload


# ----------------------------------------------------------------------
# hilbert
# ----------------------------------------------------------------------


def _hilbert_by_quotient(ring: str, n: int, characteristic: int, degree_cap: int | None) -> list[int]:
    q = named_quotient(ring, n, _field_for(characteristic), degree_cap=degree_cap)
    return hilbert_function(q)


def cmd_hilbert(args, parser) -> tuple[str, int]:
    ns = _parse_ns(args, parser)
    characteristic = _resolve_char(args, ns, parser)
    method = "cross-check" if args.cross_check else args.method

    key = cache_key(
        "hilbert",
        ring=args.ring,
        ns=ns,
        characteristic=characteristic,
        method=method,
        degree_cap=args.degree_cap,
    )

    def compute():
        results = []
        for n in ns:
            if args.cross_check:
                by_formula = hilbert_formula(args.ring, n)
                by_quotient = _hilbert_by_quotient(args.ring, n, characteristic, args.degree_cap)
                results.append(
                    {"n": n, "formula": by_formula, "quotient": by_quotient, "match": by_formula == by_quotient}
                )
            elif args.method == "formula":
                results.append({"n": n, "values": hilbert_formula(args.ring, n)})
            else:
                results.append(
                    {"n": n, "values": _hilbert_by_quotient(args.ring, n, characteristic, args.degree_cap)}
                )
        return {
            "command": "hilbert",
            "ring": args.ring,
            "characteristic": characteristic,
            "method": method,
            "results": results,
        }

    payload = _cached(args, key, compute)
    code = 0
    if args.cross_check and not all(r["match"] for r in payload["results"]):
        code = 1

    if args.format == "json":
        return _json_text(payload), code
    if args.format == "csv":
        lines = ["n,i,value"]
        for r in payload["results"]:
            values = r["values"] if "values" in r else r["formula"]
            lines.extend(f"{r['n']},{i},{v}" for i, v in enumerate(values))
        return "\n".join(lines) + "\n", code
    lines = []
    single = len(payload["results"]) == 1
    for r in payload["results"]:
        if args.cross_check:
            lines.append(f"n={r['n']} formula:  " + " ".join(map(str, r["formula"])))
            lines.append(f"n={r['n']} quotient: " + " ".join(map(str, r["quotient"])))
            lines.append(f"n={r['n']} match: " + ("yes" if r["match"] else "NO"))
        elif single:
            lines.append(" ".join(map(str, r["values"])))
        else:
            lines.append(f"n={r['n']}: " + " ".join(map(str, r["values"])))
    return "\n".join(lines) + "\n", code


# ----------------------------------------------------------------------
# betti
# ----------------------------------------------------------------------


def _entries_to_json(entries: dict) -> list[dict]:
    return [{"i": i, "j": j, "value": v} for (i, j), v in sorted(entries.items())]


def _entries_from_json(items: list[dict]) -> dict:
    return {(e["i"], e["j"]): e["value"] for e in items}


def _betti_entries(ring: str, n: int, characteristic: int, method: str, degree_cap: int | None) -> dict:
    if method == "formula":
        entries = betti_table_formula(ring, n).entries
        if degree_cap is not None:
            entries = {(i, j): v for (i, j), v in entries.items() if j <= degree_cap}
        return entries
    module = named_quotient(ring, n, _field_for(characteristic))
    return koszul_betti(module, max_j=degree_cap).entries


def cmd_betti(args, parser) -> tuple[str, int]:
    ns = _parse_ns(args, parser)
    if args.format == "csv" and len(ns) > 1:
        parser.error("csv output needs a single --n")
    characteristic = _resolve_char(args, ns, parser)
    method = "cross-check" if args.cross_check else args.method

    key = cache_key(
        "betti",
        ring=args.ring,
        ns=ns,
        characteristic=characteristic,
        method=method,
        degree_cap=args.degree_cap,
    )

    def compute():
        results = []
        for n in ns:
            if args.cross_check:
                by_formula = _betti_entries(args.ring, n, characteristic, "formula", args.degree_cap)
                by_koszul = _betti_entries(args.ring, n, characteristic, "koszul", args.degree_cap)
                results.append(
                    {
                        "n": n,
                        "formula": _entries_to_json(by_formula),
                        "koszul": _entries_to_json(by_koszul),
                        "match": by_formula == by_koszul,
                    }
                )
            else:
                entries = _betti_entries(args.ring, n, characteristic, args.method, args.degree_cap)
                results.append({"n": n, "entries": _entries_to_json(entries)})
        return {
            "command": "betti",
            "ring": args.ring,
            "characteristic": characteristic,
            "method": method,
            "results": results,
        }

    payload = _cached(args, key, compute)
    code = 0
    if args.cross_check and not all(r["match"] for r in payload["results"]):
        code = 1

    if args.format == "json":
        return _json_text(payload), code
    if args.format == "csv":
        r = payload["results"][0]
        items = r["entries"] if "entries" in r else r["formula"]
        lines = ["i,j,value"]
        lines.extend(f"{e['i']},{e['j']},{e['value']}" for e in items)
        return "\n".join(lines) + "\n", code

    blocks = []
    for r in payload["results"]:
        head = f"{args.ring}, n = {r['n']}"
        if args.cross_check:
            left = BettiTable(r["n"], _entries_from_json(r["formula"]))
            right = BettiTable(r["n"], _entries_from_json(r["koszul"]))
            verdict = "yes" if r["match"] else "NO"
            blocks.append(
                f"{head}\nformula:\n{left.format()}\nkoszul:\n{right.format()}\nmatch: {verdict}"
            )
        else:
            table = BettiTable(r["n"], _entries_from_json(r["entries"]))
            blocks.append(f"{head}\n{table.format()}")
    return "\n\n".join(blocks) + "\n", code


# ----------------------------------------------------------------------
# sequence
# ----------------------------------------------------------------------


def cmd_sequence(args, parser) -> tuple[str, int]:
    ns = _parse_ns(args, parser)
    if args.n_range is not None:
        # the sequences live on even n only; a range keeps its even part
        ns = [n for n in ns if n % 2 == 0]
        if not ns:
            parser.error("--n-range contains no even n")
    fn = rho_sequence if args.kind == "rho" else gamma_sequence

    key = cache_key("sequence", kind=args.kind, ns=ns)

    def compute():
        return {
            "command": "sequence",
            "kind": args.kind,
            "results": [{"n": n, "values": fn(n)} for n in ns],
        }

    payload = _cached(args, key, compute)
    if args.format == "json":
        return _json_text(payload), 0
    if args.format == "csv":
        lines = ["n,k,value"]
        for r in payload["results"]:
            lines.extend(f"{r['n']},{k},{v}" for k, v in enumerate(r["values"]))
        return "\n".join(lines) + "\n", 0
    lines = []
    single = len(payload["results"]) == 1
    for r in payload["results"]:
        body = " ".join(map(str, r["values"]))
        lines.append(body if single else f"n={r['n']}: {body}")
    return "\n".join(lines) + "\n", 0


# ----------------------------------------------------------------------
# gorenstein
# ----------------------------------------------------------------------


def _gorenstein_result(n: int, characteristic: int) -> dict:
    field = _field_for(characteristic)
    gens = G_from_orbit(n, field)
    gb = buchberger(gens)
    computed = gb.initial_ideal()
    predicted = predicted_initial_ideal(n)
    dets = [str(hessian(n, i, QQ).determinant_at_ones()) for i in range(ell(n) + 1)]
    return {
        "n": n,
        "orbit_generator": format_poly(g_polynomial(n, field)),
        "generators": [format_poly(g) for g in gens],
        "predicted_initial_ideal": [_format_mono(m, "x") for m in predicted.gens],
        "computed_initial_ideal": [_format_mono(m, "x") for m in computed.gens],
        "initial_ideals_match": computed == predicted,
        "ballot_sequences": [list(seq) for seq in ballot_sequences(n)],
        "hessian_determinants": dets,
        "slp": bool(slp_check_A(n, characteristic=characteristic)),
    }


def cmd_gorenstein(args, parser) -> tuple[str, int]:
    ns = _parse_ns(args, parser)
    if args.format == "csv":
        parser.error("gorenstein output is text or json")
    characteristic = _resolve_char(args, ns, parser)

    key = cache_key("gorenstein", ns=ns, characteristic=characteristic)

    def compute():
        return {
            "command": "gorenstein",
            "characteristic": characteristic,
            "results": [_gorenstein_result(n, characteristic) for n in ns],
        }

    payload = _cached(args, key, compute)
    if args.format == "json":
        return _json_text(payload), 0

    blocks = []
    for r in payload["results"]:
        lines = [f"n = {r['n']}"]
        lines.append(f"orbit generator: {r['orbit_generator']}")
        lines.append(f"ideal generators ({len(r['generators'])}):")
        lines.extend(f"  {g}" for g in r["generators"])
        lines.append("predicted initial ideal: " + ", ".join(r["predicted_initial_ideal"]))
        lines.append("computed initial ideal:  " + ", ".join(r["computed_initial_ideal"]))
        lines.append("initial ideals match: " + ("yes" if r["initial_ideals_match"] else "NO"))
        lines.append(
            f"ballot sequences ({len(r['ballot_sequences'])}): "
            + ", ".join("(" + ",".join(map(str, s)) + ")" for s in r["ballot_sequences"])
        )
        for i, det in enumerate(r["hessian_determinants"]):
            lines.append(f"hessian determinant i={i}: {det}")
        lines.append("slp: " + ("true" if r["slp"] else "false"))
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n", 0


# ----------------------------------------------------------------------
# verify
# ----------------------------------------------------------------------


def cmd_verify(args, parser) -> tuple[str, int]:
    ns = _parse_ns(args, parser)
    if args.format == "csv":
        parser.error("verify output is text or json")
    if args.char is not None and ns:
        _resolve_char(args, ns, parser)
    report = run_suite(args.suite, ns=ns, characteristic=args.char)
    code = 0 if report.passed else 1
    if args.format == "json":
        return _json_text(report.to_json()), code
    return report.format_text() + "\n", code


# ----------------------------------------------------------------------
# entry point
# ----------------------------------------------------------------------


_DISPATCH = {
    "hilbert": cmd_hilbert,
    "betti": cmd_betti,
    "sequence": cmd_sequence,
    "gorenstein": cmd_gorenstein,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text, code = _DISPATCH[args.command](args, parser)
    except AciringError as exc:
        print(f"error: resource cap exceeded: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(text, args)
    return code


if __name__ == "__main__":
    sys.exit(main())
