#!/usr/bin/env python3
"""
Command-line interface for weilgroups.

Exit status: 0 on success or a positive verdict, 1 on a negative verdict
(rejected polynomial, unrealizable group, failed check), 2 on usage and
precondition errors.
"""

import argparse
import json
import logging
import sys
from typing import Any, Dict, List, Optional, Sequence

from weilgroups import __version__
from weilgroups.arith import require_prime
from weilgroups.classify import (
    accepted_weil_report,
    classify_all,
    conjecture_local_groups,
    elliptic_classification,
    is_realizable,
    take_groups,
)
from weilgroups.errors import InvalidArgumentError, WeilGroupsError, WrongOrderError
from weilgroups.fixtures import run_fixtures
from weilgroups.groups import group_label, local_label, parse_group_label
from weilgroups.lattice import witness_transcript
from weilgroups.models import ClassifierSettings, OracleSettings, OutputFormat, Subcommand
from weilgroups.oracle import compare_with_criterion
from weilgroups.polynomials import IntPoly, substitute_one_minus_t, validate_weil

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_ERROR = 2


def configure_logging(verbosity: int) -> None:
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logging.basicConfig(
        level=level,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


def emit(args: argparse.Namespace, record: Any, lines: Sequence[str]) -> None:
    if args.format == OutputFormat.JSON.value:
        print(json.dumps(record, indent=2))
    else:
        print("\n".join(lines))


def _labels(groups) -> List[str]:
    return [group_label(g) for g in groups]


def _local_labels(groups) -> List[str]:
    return [local_label(g) for g in groups]


def _text_line(group) -> str:
    factors = " | ".join(str(n) for n in group.invariant_factors()) or "1"
    return f"  - {group_label(group)}  [{factors}]"


def validate_command(args: argparse.Namespace) -> int:
    """Handle validate command."""
    f = IntPoly.parse(args.poly)
    report = validate_weil(f, args.q)
    lines = [
        "=== Weil Polynomial ===",
        f"f(t) = {f}",
        f"q = {report.q}" + (f" = {report.p}^{report.e}" if report.p else ""),
        f"Verdict: {report.verdict.value}" + (f" ({report.reason})" if report.reason else ""),
        f"  Functional equation: {'Yes' if report.functional_equation else 'No'}",
        f"  Roots on |t| = sqrt(q): {report.roots_on_circle}",
        f"  Squarefree: {'Yes' if report.squarefree else 'No'}",
        f"  f(1) = {report.order_n}",
    ]
    if report.p_rank_degree is not None:
        lines.append(f"  p-adic unit roots: {report.p_rank_degree}")
    lines.extend(f"Note: {note}" for note in report.notes)
    emit(args, report.to_dict(), lines)
    return EXIT_OK if report.accepted else EXIT_NEGATIVE


def classify_command(args: argparse.Namespace) -> int:
    """Handle classify command."""
    f = IntPoly.parse(args.poly)
    if args.limit is not None and args.limit < 1:
        raise InvalidArgumentError(f"--limit must be positive, got {args.limit}")
    settings = ClassifierSettings(emission_limit=args.limit) if args.limit else ClassifierSettings()
    result = classify_all(f, args.q, settings)
    groups, truncated = take_groups(result, settings.emission_limit)

    per_prime: Dict[str, Any] = {}
    lines = ["=== Groups of Points ===", f"f(t) = {f}, q = {args.q}, f(1) = {result.weil.order_n}"]
    for entry in result.per_prime:
        per_prime[str(entry.prime)] = {
            "exponent": entry.exponent,
            "newton_polygon": entry.newton_polygon.to_dict(),
            "groups": _local_labels(entry.realizable),
        }
        lines.append(f"\nℓ = {entry.prime} (exponent {entry.exponent})")
        for candidate in entry.candidates:
            mark = "✓" if candidate.passes else "✗"
            lines.append(f"  {mark} {local_label(candidate.group)}")
    lines.append(f"\nTotal: {result.total_count}")
    lines.extend(_text_line(g) for g in groups)
    if truncated:
        lines.append(f"  ... truncated at {settings.emission_limit}")

    record = {
        "weil": result.weil.to_dict(),
        "per_prime": per_prime,
        "total_count": result.total_count,
        "groups": _labels(groups),
        "truncated": truncated,
    }
    emit(args, record, lines)
    return EXIT_OK


def check_command(args: argparse.Namespace) -> int:
    """Handle check command."""
    f = IntPoly.parse(args.poly)
    group = parse_group_label(args.group)
    report = is_realizable(f, group, q=args.q)
    if report.wrong_order:
        raise WrongOrderError(
            f"wrong order: |G| = {group.order} but f(1) = {report.order_n}",
            group=group_label(group),
        )
    lines = [f"{group_label(group)}: {'realizable' if report.realizable else 'not realizable'}"]
    for diag in report.diagnostics:
        line = f"  ℓ = {diag.prime}: {diag.status.value}"
        if diag.first_failing_abscissa is not None:
            line += (
                f" at x = {diag.first_failing_abscissa}"
                f" (Np = {diag.newton_value}, Hp = {diag.hodge_value})"
            )
        lines.append(line)
    record = {
        "group": group_label(group),
        "order_n": str(report.order_n),
        "realizable": report.realizable,
        "diagnostics": [diag.to_dict() for diag in report.diagnostics],
    }
    emit(args, record, lines)
    return EXIT_OK if report.realizable else EXIT_NEGATIVE


def witness_command(args: argparse.Namespace) -> int:
    """Handle witness command."""
    f = IntPoly.parse(args.poly)
    ell = require_prime(args.prime)
    accepted_weil_report(f, args.q)
    group = parse_group_label(args.group)
    others = [c.prime for c in group.components if c.prime != ell]
    if others:
        raise InvalidArgumentError(
            f"group {group_label(group)} has components at primes other than {ell}",
            primes=others,
        )
    local = group.local(ell)
    transcript = witness_transcript(substitute_one_minus_t(f), local, ell)
    transcript["group"] = local_label(local)

    basis = transcript["basis"]
    lines = [
        f"=== Witness lattice for {local_label(local)} at ℓ = {ell} ===",
        f"f(1-t) coefficients: {transcript['polynomial']}",
        f"exponents m: {basis['exponents']}",
        f"partial sums M(s): {basis['partial_sums']}",
        f"corrections u_s: {basis['corrections']}",
        "matrix of x:",
    ]
    lines.extend("  [" + ", ".join(row) + "]" for row in transcript["matrix"]["rows"])
    lines.append(f"elementary divisors: {transcript['elementary_divisors']}")
    lines.append(f"characteristic polynomial matches: {transcript['charpoly_matches']}")
    lines.append(f"verified: {transcript['verified']}")
    emit(args, transcript, lines)
    return EXIT_OK if transcript["verified"] and transcript["charpoly_matches"] else EXIT_NEGATIVE


def elliptic_command(args: argparse.Namespace) -> int:
    """Handle elliptic command."""
    result = elliptic_classification(args.q, args.b)
    record = {
        "q": result.q,
        "b": result.b,
        "order_n": str(result.order_n),
        "supersingular_double_root": result.supersingular_double_root,
        "groups": _labels(result.groups),
        "note": result.note,
    }
    lines = [f"t^2 - ({args.b})t + {args.q}: N = {result.order_n}"]
    lines.extend(_text_line(g) for g in result.groups)
    if result.note:
        lines.append(f"Note: {result.note}")
    emit(args, record, lines)
    return EXIT_OK


def conjecture_command(args: argparse.Namespace) -> int:
    """Handle conjecture command."""
    factors = [IntPoly.parse(text) for text in args.factors]
    result = conjecture_local_groups(factors, args.prime, q=args.q)
    record = {
        "prime": result.prime,
        "factors": list(result.factors),
        "groups": _local_labels(result.groups),
        "conjectural": result.conjectural,
        "proved": result.proved,
        "deg_bound_holds": result.deg_bound_holds,
        "note": result.note,
    }
    lines = [f"Direct sums at ℓ = {result.prime}:"]
    lines.extend(f"  - {label}" for label in record["groups"])
    lines.append(f"Note: {result.note}")
    emit(args, record, lines)
    return EXIT_OK


def oracle_command(args: argparse.Namespace) -> int:
    """Handle oracle command."""
    f = IntPoly.parse(args.poly)
    settings = OracleSettings.from_env(workers=args.workers)
    accepted_weil_report(f, args.q)
    comparison = compare_with_criterion(substitute_one_minus_t(f), args.prime, args.bound, settings)
    record = {
        "prime": comparison.prime,
        "bound": comparison.bound,
        "lattice_count": comparison.lattice_count,
        "achievable": _local_labels(comparison.achievable),
        "achievable_next": _local_labels(comparison.achievable_next),
        "criterion": _local_labels(comparison.criterion),
        "stable": comparison.stable,
        "agrees": comparison.agrees,
        "necessity_violations": comparison.necessity_violations,
    }
    lines = [
        f"=== Oracle at ℓ = {comparison.prime}, k = {comparison.bound} ===",
        f"Invariant lattices: {comparison.lattice_count}",
        f"Achievable: {', '.join(record['achievable'])}",
        f"Criterion:  {', '.join(record['criterion'])}",
        f"Stable at k+1: {'Yes' if comparison.stable else 'No'}",
        f"Necessity violations: {comparison.necessity_violations}",
        f"{'✓ agrees' if comparison.agrees else '✗ disagrees'}",
    ]
    emit(args, record, lines)
    return EXIT_OK if comparison.agrees else EXIT_NEGATIVE


def fixtures_command(args: argparse.Namespace) -> int:
    """Handle the hidden fixtures command."""
    outcomes = run_fixtures()
    record = [outcome.model_dump() for outcome in outcomes]
    lines = [f"{'PASS' if o.passed else 'FAIL'}  {o.name}: {o.detail}" for o in outcomes]
    passed = sum(o.passed for o in outcomes)
    lines.append(f"\n{passed}/{len(outcomes)} passed")
    emit(args, record, lines)
    return EXIT_OK if passed == len(outcomes) else EXIT_NEGATIVE


COMMANDS = {
    Subcommand.VALIDATE.value: validate_command,
    Subcommand.CLASSIFY.value: classify_command,
    Subcommand.CHECK.value: check_command,
    Subcommand.WITNESS.value: witness_command,
    Subcommand.ELLIPTIC.value: elliptic_command,
    Subcommand.CONJECTURE.value: conjecture_command,
    Subcommand.ORACLE.value: oracle_command,
    Subcommand.FIXTURES.value: fixtures_command,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weilgroups",
        description="Groups of points on abelian varieties in an isogeny class over a finite field.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for info, -vv for debug")
    visible = [c.value for c in Subcommand if c != Subcommand.FIXTURES]
    sub = parser.add_subparsers(dest="command", metavar="{" + ",".join(visible) + "}")

    def add(name: str, help_text: Optional[str]) -> argparse.ArgumentParser:
        kwargs = {"help": help_text} if help_text else {}
        p = sub.add_parser(name, **kwargs)
        p.add_argument(
            "--format",
            choices=[fmt.value for fmt in OutputFormat],
            default=OutputFormat.TEXT.value,
        )
        return p

    p = add("validate", "screen a candidate Weil polynomial")
    p.add_argument("--poly", required=True, help='coefficients "9,-2,1" or "t^2-2*t+9"')
    p.add_argument("--q", type=int, required=True)

    p = add("classify", "list the realizable groups of points")
    p.add_argument("--poly", required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--limit", type=int, default=None, help="maximum number of groups listed")

    p = add("check", "decide whether a group is realizable")
    p.add_argument("--poly", required=True)
    p.add_argument("--q", type=int, default=None, help="inferred from f(0) when omitted")
    p.add_argument("--group", required=True, help='e.g. "Z/2 + Z/4"')

    p = add("witness", "construct and verify a witness lattice")
    p.add_argument("--poly", required=True)
    p.add_argument("--q", type=int, default=None)
    p.add_argument("--group", required=True)
    p.add_argument("--prime", type=int, required=True)

    p = add("elliptic", "groups of points for elliptic curves with trace b")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--b", type=int, required=True)

    p = add("conjecture", "direct-sum candidates for a nested factorisation")
    p.add_argument("--factors", nargs="+", required=True, help="f_1 f_2 ... with f_j | f_(j-1)")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--q", type=int, default=None)

    p = add("oracle", "brute-force invariant lattices against the criterion")
    p.add_argument("--poly", required=True)
    p.add_argument("--q", type=int, default=None)
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--bound", type=int, default=None, help="index exponent k (default ord + 2)")
    p.add_argument("--workers", type=int, default=None)

    add("fixtures", None)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main CLI entry point."""
    parser = build_parser()
    args = parser.parse_args(argv)
    if not args.command:
        parser.print_help()
        return EXIT_ERROR
    configure_logging(args.verbose)

    try:
        return COMMANDS[args.command](args)
    except WeilGroupsError as e:
        logger.debug("%s failed", args.command, exc_info=True)
        if args.format == OutputFormat.JSON.value:
            print(json.dumps({"error": e.to_dict()}, indent=2))
        else:
            print(f"Error: {e.message}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
