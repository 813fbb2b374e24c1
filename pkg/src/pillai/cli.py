"""Command-line entry point with stable text output for scripting.

Exit codes: 0 success, 1 usage error, 2 verification failure, 3 numeric
failure.  All output is plain decimal ASCII and byte-stable across runs.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from mpmath import nstr

from . import __version__
from .bounds import (
    NumericError,
    lemma15_bound,
    sigma,
    theorem2_fixed_points,
)
from .catalog import catalog_entries, verify_catalog
from .equation import Instance, enumerate_solutions
from .families import ReductionError, format_set, parse_set, reduce_to_basic_form
from .generators import (
    FAMILY_IDS,
    GeneratorParameterError,
    default_sweep_ranges,
    generate,
    sweep,
)
from .search import CheckpointError, SearchBox, classify_finding, run_search


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit 1 on usage errors, not argparse's 2
        raise _UsageError(message)


def _parse_range(text: str) -> tuple[int, int]:
    if ":" in text:
        lo, hi = text.split(":", 1)
        return int(lo), int(hi)
    value = int(text)
    return value, value


def _parse_value(text: str):
    try:
        return int(text)
    except ValueError:
        return Fraction(text)


def _mpf_str(value, digits: int = 12) -> str:
    return nstr(value, digits)


def build_parser() -> _Parser:
    parser = _Parser(
        prog="pillai",
        description=(
            "Exact-arithmetic toolkit for the generalized Pillai equation "
            "(-1)^u r a^x + (-1)^v s b^y = c"
        ),
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="enumerate all solutions of one instance")
    for name in "abcrs":
        p.add_argument(f"--{name}", type=int, required=True)
    p.add_argument("--xmax", type=int, default=64)
    p.add_argument("--ymax", type=int, default=64)

    p = sub.add_parser("normalize", help="reduce a solution set to basic form")
    p.add_argument("--set", required=True, dest="sset")

    p = sub.add_parser("classify", help="match a solution set against the catalog")
    p.add_argument("--set", required=True, dest="sset")

    p = sub.add_parser("generate", help="build three-solution sets from a family")
    p.add_argument("--family", type=int, required=True, choices=FAMILY_IDS)
    p.add_argument(
        "--param",
        action="append",
        default=[],
        metavar="NAME=VALUE",
        help="fix one parameter (single-set mode)",
    )
    p.add_argument(
        "--sweep",
        action="append",
        default=[],
        metavar="NAME=LO:HI",
        help="sweep one parameter over an inclusive integer range",
    )
    p.add_argument("--caps", type=int, default=64)

    p = sub.add_parser("search", help="exhaustive box search for solution sets")
    for name in "ab":
        p.add_argument(f"--{name}", type=_parse_range, required=True, metavar="LO:HI")
    for name in "rsc":
        p.add_argument(f"--{name}", type=_parse_range, required=True, metavar="LO:HI")
    p.add_argument("--exp-cap", type=int, default=40)
    p.add_argument("--min-n", type=int, default=3)
    p.add_argument("--gcd-filter", choices=("any", "coprime", "common"), default="any")
    p.add_argument("--checkpoint", default=None)
    p.add_argument("--shard", default=None, metavar="I/N")
    p.add_argument("--out", default=None, help="findings file (default stdout)")
    p.add_argument("--figure", default=None, help="render a findings figure to this file")

    p = sub.add_parser("bound", help="crossing points of the transcendental bounds")
    p.add_argument(
        "--which",
        required=True,
        choices=("lemma15", "t2-case1", "t2-case2", "t2-81", "t2-83", "t2-all"),
    )
    for name in ("r", "s", "a", "b", "c", "d"):
        p.add_argument(f"--{name}", type=int, default=None)
    p.add_argument("--dps", type=int, default=60)
    p.add_argument("--figure", default=None, help="render the crossing figure to this file")

    p = sub.add_parser("sigma", help="divisibility index of a coprime pair")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--dps", type=int, default=60)

    p = sub.add_parser("verify-catalog", help="re-verify every catalog entry")
    p.add_argument("--g-max", type=int, default=30)
    p.add_argument("--caps", type=int, default=64)

    return parser


def _cmd_solve(args) -> int:
    inst = Instance(args.a, args.b, args.c, args.r, args.s)
    enum = enumerate_solutions(inst, args.xmax, args.ymax)
    for sol in enum.solutions:
        print(f"{sol.x} {sol.y} {sol.u} {sol.v}")
    if not enum.complete:
        print(
            "note: completeness not certified at these caps",
            file=sys.stderr,
        )
    return 0


def _cmd_normalize(args) -> int:
    sset = parse_set(args.sset)
    print(format_set(reduce_to_basic_form(sset).set))
    return 0


def _cmd_classify(args) -> int:
    sset = parse_set(args.sset)
    print(classify_finding(sset))
    return 0


def _report_generated(gen) -> None:
    params = ",".join(f"{k}={v}" for k, v in gen.params)
    overlap = gen.overlap if gen.overlap is not None else "-"
    print(format_set(gen.set))
    print(
        f"# family={gen.family_id} params={params} "
        f"verified_n={gen.verified_n} overlap={overlap}"
    )


def _cmd_generate(args) -> int:
    if args.param and args.sweep:
        raise _UsageError("--param and --sweep are mutually exclusive")
    if args.param:
        params = {}
        for item in args.param:
            name, _, value = item.partition("=")
            if not _:
                raise _UsageError(f"bad --param {item!r}")
            params[name] = _parse_value(value)
        gen = generate(args.family, caps=args.caps, **params)
        _report_generated(gen)
        return 0
    if args.sweep:
        ranges = dict(default_sweep_ranges(args.family))
        for item in args.sweep:
            name, _, span = item.partition("=")
            if not _:
                raise _UsageError(f"bad --sweep {item!r}")
            lo, hi = _parse_range(span)
            ranges[name] = tuple(range(lo, hi + 1))
    else:
        ranges = None
    result = sweep(args.family, ranges, caps=args.caps)
    for gen in result.sets:
        _report_generated(gen)
    for reason, count in sorted(result.skipped.items()):
        print(f"# skipped {count}: {reason}")
    return 0


def _cmd_search(args) -> int:
    shard = None
    if args.shard is not None:
        index, _, count = args.shard.partition("/")
        try:
            shard = (int(index), int(count))
        except ValueError:
            raise _UsageError(f"bad --shard {args.shard!r}") from None
    box = SearchBox(
        a_range=args.a,
        b_range=args.b,
        r_range=args.r,
        s_range=args.s,
        c_range=args.c,
        exp_cap=args.exp_cap,
        min_n=args.min_n,
        gcd_filter=args.gcd_filter,
    )
    findings = list(run_search(box, checkpoint=args.checkpoint, shard=shard))
    lines = [f.line() for f in findings]
    if args.out is not None:
        with open(args.out, "w") as fh:
            fh.write("\n".join(lines) + ("\n" if lines else ""))
    else:
        for line in lines:
            print(line)
    if args.figure is not None:
        from .figures import render_findings

        render_findings(findings, args.figure)
    return 0


def _print_bound_report(report) -> None:
    print(f"bound {report.name} (binding branch {report.branch})")
    for name, value in report.inputs:
        print(f"  input {name} = {value}")
    for name, value in report.constants:
        print(f"  constant {name} = {value}")
    for crossing in report.crossings:
        print(f"  crossing {crossing.name} z* = {_mpf_str(crossing.z_star)}")
    print(f"  binding z* = {_mpf_str(report.z_star)}")
    if report.cap is not None:
        status = "yes" if report.within_cap else "NO"
        print(f"  cap {_mpf_str(report.cap, 6)} satisfied: {status}")


def _cmd_bound(args) -> int:
    reports = []
    if args.which == "lemma15":
        needed = {name: getattr(args, name) for name in ("r", "s", "a", "b", "c", "d")}
        missing = [k for k, v in needed.items() if v is None]
        if missing:
            raise _UsageError(f"lemma15 needs --{' --'.join(missing)}")
        reports.append(lemma15_bound(dps=args.dps, **needed))
    else:
        wanted = {
            "t2-case1": ("t2-case1",),
            "t2-case2": ("t2-case2",),
            "t2-81": ("t2-81",),
            "t2-83": ("t2-83",),
            "t2-all": ("t2-case1", "t2-case2", "t2-81", "t2-83"),
        }[args.which]
        reports = [
            r for r in theorem2_fixed_points(dps=args.dps) if r.name in wanted
        ]
    for report in reports:
        _print_bound_report(report)
    if args.figure is not None and reports:
        from .figures import render_bound_crossing

        render_bound_crossing(reports[0], args.figure)
    if any(report.within_cap is False for report in reports):
        return 2
    return 0


def _cmd_sigma(args) -> int:
    breakdown = sigma(args.a, args.b, dps=args.dps)
    for row in breakdown.rows:
        sign = "+1" if row.sign > 0 else "-1"
        print(f"p={row.p} n={row.n} g={row.g} sign={sign}")
    print(f"sigma = {_mpf_str(breakdown.sigma, 15)}")
    return 0


def _cmd_verify_catalog(args) -> int:
    problems = verify_catalog(param_g_max=args.g_max, caps=args.caps)
    bad_labels = {p.split(":", 1)[0] for p in problems}
    for entry in catalog_entries():
        status = "FAIL" if entry.label in bad_labels else "ok"
        print(f"{status} {entry.label}")
    for problem in problems:
        print(f"problem: {problem}")
    print(f"checked {len(catalog_entries())} entries, {len(problems)} problems")
    return 2 if problems else 0


_HANDLERS = {
    "solve": _cmd_solve,
    "normalize": _cmd_normalize,
    "classify": _cmd_classify,
    "generate": _cmd_generate,
    "search": _cmd_search,
    "bound": _cmd_bound,
    "sigma": _cmd_sigma,
    "verify-catalog": _cmd_verify_catalog,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _HANDLERS[args.command](args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, GeneratorParameterError, CheckpointError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except ReductionError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 2
    except NumericError as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
