"""Command-line interface: JSON documents in, one JSON document out.

Commands: profile, validate, search, gonality, clifford, bn-table, reduce,
verify. Chain and tableau documents are JSON files ('-' reads stdin).

A chain document takes exactly one of two forms:

* direct:    {"genus": 4, "torsion": [3, 0, 5]}
* geometric: {"cycles": [{"length": [1, 1], "arc": [1, 2]},
                          {"length": [3, 1], "arc": "irrational"}, ...]}

where length and arc are positive rationals [numerator, denominator] with
0 < arc < length, or the string "irrational" for the arc. A tableau document
is {"genus": 5, "rows": [[1, 2], [2, 3]]}; unknown keys are tolerated so a
traced reduce output can be fed back in.

Exit codes: 0 affirmative, 1 well-formed negative answer, 2 malformed input
or usage, 3 internal error or exhausted search budget. Diagnostics go to
standard error; standard output carries only the result document (the verify
command emits one record per line plus a final summary line).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any

from .chains import ArcRatio, ChainOfCycles, TorsionProfile, torsion_profile
from .invariants import bn_table, clifford_index, gonality
from .reduction import ReductionInternalError, reduce_to_rank_one
from .search import BudgetExhaustedError, SearchBudget, count_tableaux, find_tableau
from .tableaux import Tableau, ValidationReport, validate_grid

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3


class DocumentError(Exception):
    """Malformed input; carries the offending field for the diagnostic."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


# ── document parsing ────────────────────────────────────────────────────────

def _load_json(path: str) -> Any:
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, "r", encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise DocumentError("file", f"cannot read {path}: {exc.strerror}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError("document", f"{path} is not valid JSON ({exc.msg})") from exc


def _int_field(obj: Any, field: str) -> int:
    if not isinstance(obj, int) or isinstance(obj, bool):
        raise DocumentError(field, "must be an integer")
    return obj


def _rational(value: Any, field: str) -> Fraction:
    if (
        not isinstance(value, (list, tuple))
        or len(value) != 2
        or any(not isinstance(x, int) or isinstance(x, bool) for x in value)
    ):
        raise DocumentError(field, "must be a [numerator, denominator] integer pair")
    num, den = value
    if den == 0:
        raise DocumentError(field, "denominator must be nonzero")
    q = Fraction(num, den)
    if q <= 0:
        raise DocumentError(field, "must be a positive rational")
    return q


def parse_chain_document(obj: Any) -> TorsionProfile:
    """Torsion profile from either chain-document form."""
    if not isinstance(obj, dict):
        raise DocumentError("document", "chain document must be a JSON object")
    direct = "torsion" in obj
    geometric = "cycles" in obj
    if direct == geometric:
        raise DocumentError(
            "document", "exactly one of 'torsion' or 'cycles' must be present"
        )
    if direct:
        genus = _int_field(obj.get("genus"), "genus")
        torsion = obj.get("torsion")
        if not isinstance(torsion, list):
            raise DocumentError("torsion", "must be a list of integers")
        for i, m in enumerate(torsion):
            if not isinstance(m, int) or isinstance(m, bool):
                raise DocumentError(f"torsion[{i}]", "must be an integer")
        try:
            return TorsionProfile(genus, tuple(torsion))
        except ValueError as exc:
            raise DocumentError("torsion", str(exc)) from exc
    cycles = obj["cycles"]
    if not isinstance(cycles, list) or not cycles:
        raise DocumentError("cycles", "must be a nonempty list")
    arcs: list[ArcRatio] = []
    for i, cyc in enumerate(cycles):
        if not isinstance(cyc, dict):
            raise DocumentError(f"cycles[{i}]", "must be an object")
        length = _rational(cyc.get("length"), f"cycles[{i}].length")
        arc_raw = cyc.get("arc")
        if arc_raw == "irrational":
            arcs.append(ArcRatio.irrational())
            continue
        arc = _rational(arc_raw, f"cycles[{i}].arc")
        if not arc < length:
            raise DocumentError(
                f"cycles[{i}].arc", "must be strictly smaller than the length"
            )
        arcs.append(ArcRatio(arc / length))
    return torsion_profile(ChainOfCycles(tuple(arcs)))


def parse_tableau_document(obj: Any) -> tuple[int, list[list[int]]]:
    """Genus and raw grid; structural checks only, rule checks happen later."""
    if not isinstance(obj, dict):
        raise DocumentError("document", "tableau document must be a JSON object")
    genus = _int_field(obj.get("genus"), "genus")
    if genus < 1:
        raise DocumentError("genus", "must be >= 1")
    rows = obj.get("rows")
    if not isinstance(rows, list) or any(not isinstance(r, list) for r in rows):
        raise DocumentError("rows", "must be a list of lists")
    for x, row in enumerate(rows):
        for y, v in enumerate(row):
            if not isinstance(v, int) or isinstance(v, bool):
                raise DocumentError(f"rows[{x}][{y}]", "must be an integer")
    if rows:
        width = len(rows[0])
        if width == 0 or any(len(r) != width for r in rows):
            raise DocumentError("rows", "must be rectangular with nonempty rows")
    return genus, [list(r) for r in rows]


def serialize_chain(chain: ChainOfCycles) -> dict:
    """Geometric chain document with every circumference normalized to 1."""
    cycles = []
    for arc in chain.cycles:
        if arc.ratio is None:
            cycles.append({"length": [1, 1], "arc": "irrational"})
        else:
            cycles.append(
                {
                    "length": [1, 1],
                    "arc": [arc.ratio.numerator, arc.ratio.denominator],
                }
            )
    return {"cycles": cycles}


def profile_doc(profile: TorsionProfile) -> dict:
    return {"genus": profile.genus, "torsion": list(profile.entries)}


def tableau_doc(t: Tableau) -> dict:
    return {"genus": t.genus, "rows": [list(row) for row in t.entries]}


def report_doc(report: ValidationReport) -> dict:
    violations = []
    for v in report.violations:
        item: dict[str, Any] = {"rule": v.rule, "cells": [list(c) for c in v.cells]}
        if v.rule == "congruence":
            item["value"] = v.value
            item["modulus"] = v.modulus
        violations.append(item)
    if report.valid:
        return {"valid": True}
    return {"valid": False, "violations": violations}


def _emit(obj: Any) -> None:
    print(json.dumps(obj))


def _fail(message: str, code: int) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


# ── commands ────────────────────────────────────────────────────────────────

def cmd_profile(args: argparse.Namespace) -> int:
    profile = parse_chain_document(_load_json(args.chain))
    _emit(profile_doc(profile))
    return EXIT_OK


def cmd_validate(args: argparse.Namespace) -> int:
    profile = parse_chain_document(_load_json(args.chain))
    genus, grid = parse_tableau_document(_load_json(args.tableau))
    if genus != profile.genus:
        raise DocumentError(
            "genus", f"tableau genus {genus} != chain genus {profile.genus}"
        )
    report = validate_grid(grid, genus, profile)
    _emit(report_doc(report))
    return EXIT_OK if report.valid else EXIT_NEGATIVE


def cmd_search(args: argparse.Namespace) -> int:
    profile = parse_chain_document(_load_json(args.chain))
    if args.rows < 0 or args.cols < 0:
        return _fail("--rows and --cols must be nonnegative", EXIT_INPUT)
    budget = SearchBudget(node_cap=args.budget) if args.budget else None
    try:
        if args.count:
            n = count_tableaux(args.rows, args.cols, profile.genus, profile, budget)
            _emit({"count": n})
            return EXIT_OK
        witness = find_tableau(args.rows, args.cols, profile.genus, profile, budget)
    except BudgetExhaustedError as exc:
        return _fail(str(exc), EXIT_INTERNAL)
    if witness is None:
        _emit(None)
        return EXIT_NEGATIVE
    _emit(tableau_doc(witness))
    return EXIT_OK


def cmd_gonality(args: argparse.Namespace) -> int:
    profile = parse_chain_document(_load_json(args.chain))
    if profile.genus < 2:
        return _fail("gonality needs genus >= 2", EXIT_INPUT)
    result = gonality(profile.genus, profile)
    _emit({"gonality": result.value, "witness": tableau_doc(result.witness)})
    return EXIT_OK


def cmd_clifford(args: argparse.Namespace) -> int:
    profile = parse_chain_document(_load_json(args.chain))
    if profile.genus < 3:
        return _fail("Clifford index needs genus >= 3", EXIT_INPUT)
    result = clifford_index(profile.genus, profile)
    if result.value is None:
        _emit(
            {
                "clifford": "empty",
                "witness": None,
                "convention_applied": True,
                "convention_value": result.convention_value,
            }
        )
        return EXIT_OK
    assert result.witness is not None
    _emit(
        {
            "clifford": result.value,
            "witness": {
                "degree": result.witness.degree,
                "rank": result.witness.rank,
                "tableau": tableau_doc(result.witness.tableau),
            },
            "convention_applied": False,
        }
    )
    return EXIT_OK


def cmd_bn_table(args: argparse.Namespace) -> int:
    profile = parse_chain_document(_load_json(args.chain))
    if args.d_max < 1:
        return _fail("--d-max must be >= 1", EXIT_INPUT)
    table = bn_table(profile.genus, profile, args.d_max)
    rows = [
        {"degree": d, "rank": r, "exists": table[(d, r)]}
        for d, r in sorted(table)
    ]
    _emit({"genus": profile.genus, "d_max": args.d_max, "table": rows})
    return EXIT_OK


def cmd_reduce(args: argparse.Namespace) -> int:
    profile = parse_chain_document(_load_json(args.chain))
    genus, grid = parse_tableau_document(_load_json(args.tableau))
    if genus != profile.genus:
        raise DocumentError(
            "genus", f"tableau genus {genus} != chain genus {profile.genus}"
        )
    try:
        t = Tableau(tuple(tuple(r) for r in grid), genus)
        reduced, trace = reduce_to_rank_one(t, profile)
    except ReductionInternalError as exc:
        return _fail(str(exc), EXIT_INTERNAL)
    except ValueError as exc:
        return _fail(str(exc), EXIT_NEGATIVE)
    doc = tableau_doc(reduced)
    if args.trace:
        doc["trace"] = list(trace.labels())
    _emit(doc)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    from .verify import SweepConfig, sweep_theorem1  # heavy path, import lazily

    alphabet = []
    for part in args.torsion_values.split(","):
        part = part.strip()
        try:
            alphabet.append(int(part))
        except ValueError:
            return _fail(f"--torsion-values entry {part!r} is not an integer", EXIT_INPUT)
    try:
        config = SweepConfig(
            genus_min=args.genus_min,
            genus_max=args.genus_max,
            alphabet=tuple(alphabet),
            samples=args.samples,
            seed=args.seed,
            jobs=args.jobs,
        )
    except ValueError as exc:
        return _fail(str(exc), EXIT_INPUT)
    report = sweep_theorem1(config)
    for rec in report.records:
        line: dict[str, Any] = {
            "genus": rec.genus,
            "torsion": list(rec.torsion),
            "gonality": rec.gonality,
            "clifford": "empty" if rec.clifford is None else rec.clifford,
            "verdict": rec.verdict,
        }
        if rec.clifford is None:
            line["convention_value"] = rec.convention_value
        if rec.counterexample is not None:
            line["counterexample"] = rec.counterexample
        _emit(line)
    _emit({"summary": report.summary()})
    return EXIT_OK if report.failures == 0 else EXIT_NEGATIVE


# ── wiring ──────────────────────────────────────────────────────────────────

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclechains",
        description="Divisor invariants of chains of cycles via displacement tableaux.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("profile", help="torsion profile of a chain document")
    p.add_argument("chain", help="chain document path or '-' for stdin")
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("validate", help="check a tableau document against a chain")
    p.add_argument("chain")
    p.add_argument("tableau")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("search", help="find or count tableaux of a shape")
    p.add_argument("chain")
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--cols", type=int, required=True)
    p.add_argument("--count", action="store_true", help="emit the exact count")
    p.add_argument("--budget", type=int, default=None, help="node budget cap")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("gonality", help="minimal degree of a rank-1 divisor class")
    p.add_argument("chain")
    p.set_defaults(func=cmd_gonality)

    p = sub.add_parser("clifford", help="Clifford index with witness parameters")
    p.add_argument("chain")
    p.set_defaults(func=cmd_clifford)

    p = sub.add_parser("bn-table", help="rank-existence table up to a degree bound")
    p.add_argument("chain")
    p.add_argument("--d-max", type=int, required=True, dest="d_max")
    p.set_defaults(func=cmd_bn_table)

    p = sub.add_parser("reduce", help="reduce a rank-r witness to a rank-1 witness")
    p.add_argument("chain")
    p.add_argument("tableau")
    p.add_argument("--trace", action="store_true", help="include the case labels")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("verify", help="sweep profiles checking clifford = gonality - 2")
    p.add_argument("--genus-min", type=int, required=True)
    p.add_argument("--genus-max", type=int, required=True)
    p.add_argument(
        "--torsion-values",
        required=True,
        help="comma-separated torsion alphabet, e.g. 0,2,3",
    )
    p.add_argument("--samples", type=int, default=None, help="draws per genus")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors, which matches the input-error code
        return int(exc.code or 0)
    try:
        return args.func(args)
    except DocumentError as exc:
        return _fail(str(exc), EXIT_INPUT)
    except BudgetExhaustedError as exc:
        return _fail(str(exc), EXIT_INTERNAL)


if __name__ == "__main__":
    sys.exit(main())
