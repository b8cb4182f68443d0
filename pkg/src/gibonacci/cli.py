"""Command-line front end.

Every subcommand maps to one library operation; output is deterministic
text or JSON.  All integers in JSON are decimal strings, since values
routinely exceed 64-bit range.  Exit codes: 0 success, 1 domain error,
2 verification failure.
"""

from __future__ import annotations

import argparse
import enum
import json
import sys
from typing import Any

from . import applications, gcdsum, pisano, sequences, verify
from .sequences import Seed


def parse_seed(text: str) -> Seed:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"seed must be 'g0,g1', got {text!r}")
    try:
        return Seed(int(parts[0]), int(parts[1]))
    except ValueError:
        raise ValueError(f"seed entries must be integers, got {text!r}") from None


def jsonable(value: Any) -> Any:
    """Recursively convert results to JSON-safe data; ints become strings."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, str):
        return value
    if isinstance(value, Seed):
        return [str(value.g0), str(value.g1)]
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, enum.Enum):
        return value.value
    if hasattr(value, "__dataclass_fields__"):
        return {f: jsonable(getattr(value, f)) for f in value.__dataclass_fields__}
    raise TypeError(f"cannot serialize {type(value)!r}")


def emit(args: argparse.Namespace, payload: dict[str, Any], text: str) -> None:
    if args.format == "json":
        print(json.dumps(jsonable(payload), sort_keys=True))
    else:
        print(text)


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # usage problems are domain errors
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(1)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gibonacci", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_)
        p.add_argument("--seed", type=parse_seed, default=Seed(0, 1),
                       help="initial pair g0,g1 (default 0,1 = Fibonacci)")
        p.add_argument("--format", choices=("text", "json"), default="text")
        return p

    p = add("term", "one sequence term")
    p.add_argument("--n", type=int, required=True)

    p = add("sum", "sum of k consecutive terms starting at n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)

    p = add("gcd-sum", "GCD of all sums of k consecutive terms")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--method", choices=("closed", "brute", "lcm", "all"), default="closed")
    p.add_argument("--windows", type=int, default=10, help="windows for the brute method")
    p.add_argument("--mode", choices=("divisor_verified", "bounded_scan"),
                   default="divisor_verified", help="lcm method variant")
    p.add_argument("--bound", type=int, default=None, help="bounded_scan modulus cap")

    p = add("pisano", "period of the sequence modulo m")
    p.add_argument("--m", type=int, required=True)

    p = add("classify", "predicted vs actual GCD value by k mod 12")
    p.add_argument("--k", type=int, required=True)

    p = add("parity-scan", "moduli in (2, m-max] with odd period")
    p.add_argument("--m-max", type=int, required=True)

    p = add("max-modulus", "largest modulus with Fibonacci period k")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--exhaustive", action="store_true")

    p = add("lucas-odd", "odd-indexed Lucas number from a seed's GCD")
    p.add_argument("--j", type=int, required=True)

    p = add("primes-check", "forbidden prime factors of the odd-k value")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--bound", type=int, default=10**6)

    p = add("squares", "empirical GCD of sums of k consecutive squares")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--windows", type=int, default=None)

    p = add("identities", "run one or all identity families")
    p.add_argument("--id", choices=[i.value for i in sequences.Identity
                                    if i is not sequences.Identity.PERTURBED])
    p.add_argument("--lo", type=int, default=0)
    p.add_argument("--hi", type=int, default=200)

    p = add("verify", "run the full verification suite")
    return parser


def _cmd_gcd_sum(args: argparse.Namespace) -> int:
    methods = {
        "closed": lambda: gcdsum.gcd_sum(args.seed, args.k),
        "brute": lambda: gcdsum.gcd_sum_bruteforce(args.seed, args.k, args.windows),
        "lcm": lambda: gcdsum.gcd_sum_lcm(
            args.seed, args.k, mode=gcdsum.LcmMode(args.mode), bound=args.bound
        ),
    }
    chosen = ("closed", "brute", "lcm") if args.method == "all" else (args.method,)
    results = [methods[name]() for name in chosen]
    payload = {"seed": args.seed, "k": args.k, "results": results}
    lines = [f"{r.method.value}: {r.value}" + (" (partial)" if r.partial else "")
             for r in results]
    emit(args, payload, "\n".join(lines))
    return 0


def _cmd_identities(args: argparse.Namespace) -> int:
    idents = ([sequences.Identity(args.id)] if args.id else
              [i for i in sequences.Identity if i is not sequences.Identity.PERTURBED])
    reports = []
    for ident in idents:
        ranges = sequences.default_identity_ranges(ident, args.lo, args.hi)
        reports.append(sequences.verify_identity(ident, ranges))
    payload = {"reports": [
        {"identity": r.identity.value, "ranges": r.ranges, "checked": r.checked,
         "failures": [(s, list(pt), lhs, rhs) for s, pt, lhs, rhs in r.failures[:10]]}
        for r in reports
    ]}
    lines = [f"{r.identity.value}: {'ok' if r.ok else 'FAIL'} ({r.checked} points)"
             for r in reports]
    emit(args, payload, "\n".join(lines))
    return 0 if all(r.ok for r in reports) else 2


def _cmd_verify(args: argparse.Namespace) -> int:
    results = verify.run_all()
    total = sum(r.elapsed for r in results)
    payload = {
        "checks": [
            {"criterion": r.criterion, "name": r.name, "passed": r.passed,
             "detail": r.detail}
            for r in results
        ],
        "passed": sum(r.passed for r in results),
        "failed": sum(not r.passed for r in results),
    }
    lines = [
        f"[{'PASS' if r.passed else 'FAIL'}] {r.criterion:2d} {r.name:28s} "
        f"{r.elapsed:6.2f}s  {r.detail}"
        for r in results
    ] + [f"{payload['passed']}/{len(results)} checks passed in {total:.1f}s"]
    emit(args, payload, "\n".join(lines))
    return 0 if payload["failed"] == 0 else 2


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    cmd = args.command
    if cmd == "term":
        value = sequences.gib_term(args.seed, args.n)
        emit(args, {"seed": args.seed, "n": args.n, "value": value}, str(value))
    elif cmd == "sum":
        value = sequences.window_sum(args.seed, args.n, args.k)
        emit(args, {"seed": args.seed, "n": args.n, "k": args.k, "value": value}, str(value))
    elif cmd == "gcd-sum":
        return _cmd_gcd_sum(args)
    elif cmd == "pisano":
        record = pisano.period_record(args.seed, args.m)
        emit(args, {"record": record}, str(record.period))
    elif cmd == "classify":
        c = gcdsum.classify(args.seed, args.k)
        payload = {
            "seed": c.seed, "k": c.k, "residue_mod_12": c.residue_mod_12,
            "case_row": c.case_row.value,
            "predicted": c.predicted if c.table_applies else "table-inapplicable",
            "footnote": c.footnote.value, "actual": c.actual,
        }
        pred = c.predicted if c.table_applies else "table-inapplicable"
        emit(args, payload,
             f"k={c.k} (mod 12: {c.residue_mod_12}) row={c.case_row.value} "
             f"predicted={pred} actual={c.actual} footnote={c.footnote.value}")
    elif cmd == "parity-scan":
        report = pisano.parity_scan(args.seed, args.m_max)
        text = ("none" if report.empty else
                " ".join(f"({m},{p})" for m, p in report.odd_period_moduli))
        emit(args, {"report": report}, text)
    elif cmd == "max-modulus":
        result = applications.max_modulus_for_period(args.k, exhaustive=args.exhaustive)
        emit(args, {"result": result},
             f"m={result.m_f} form={result.predicted_form} period={result.verified_period}")
    elif cmd == "lucas-odd":
        value = applications.lucas_from_gcd(args.seed, args.j)
        emit(args, {"seed": args.seed, "j": args.j, "value": value}, str(value))
    elif cmd == "primes-check":
        report = applications.prime_restriction_check(args.seed, args.k, args.bound)
        emit(args, {"report": report},
             f"value={report.value} offending={list(report.offending_primes)} "
             f"cofactor={report.unfactored_cofactor}")
    elif cmd == "squares":
        rec = applications.squares_gcd(args.seed, args.k, args.windows)
        conj = "" if rec.conjectured is None else (
            f" conjectured={rec.conjectured} match={rec.matches_conjecture}")
        emit(args, {"record": rec},
             f"empirical={rec.empirical_value} windows={rec.windows_used}{conj}")
    elif cmd == "identities":
        return _cmd_identities(args)
    elif cmd == "verify":
        return _cmd_verify(args)
    return 0


def main() -> None:
    try:
        raise SystemExit(run())
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(1)


if __name__ == "__main__":
    main()
