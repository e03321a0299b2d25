"""Command-line surface: 6j evaluation, level scans, and identity checks.

Subcommands
-----------
sixj                evaluate one 6j-symbol with diagnostics
scan                sweep odd levels with a coloring policy, emit CSV/JSON
reproduce-appendix  run one of the four wheel-graph volume experiments
verify              run a named identity suite, exit 1 on any failure

Scan output follows the fixed CSV schema
``r,kind,color_policy,log_value,slope,target,rel_gap,cancel_digits,wall_ms``
and is byte-identical for a given invocation regardless of the thread count
(timings are opt-in because they would break that). Human-readable
summaries go to stderr so stdout stays machine-readable.

Environment overrides: SKEIN_THREADS (worker threads), SKEIN_BUDGET
(evaluation budget for engine-backed policies), SKEIN_PRECISION_BITS
(floor for high-precision arithmetic). Flags take precedence.

Exit codes: 0 success, 1 failed verification, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from typing import List, Optional

from .errors import SkeinError
from .hypvol import (
    CSV_FIELDS,
    ScanRecord,
    extrapolate_limit,
    records_to_csv,
)
from .planar import PlanarGraph, graph_from_json
from .qnum import sixj_info
from .scans import appendix_record, family_record, run_levels, tv_tet_record
from .verify import FIXTURES, run_suite, suite_names
from .yokota import maximizing_color, tv_graph, yokota_ext

POLICIES = (
    "fixed",
    "maximizer",
    "ideal-square-pyramid",
    "ideal-pentagonal-pyramid",
    "zero-angled",
    "full-TV-sweep",
)

# coloring policy -> (required wheel fixture, appendix experiment kind)
_IDEAL_POLICY = {
    "ideal-square-pyramid": ("square-pyramid", "sq-ideal"),
    "ideal-pentagonal-pyramid": ("pentagonal-pyramid", "pent-ideal"),
}
_ZERO_KIND = {"square-pyramid": "sq-zero", "pentagonal-pyramid": "pent-zero"}

APPENDIX_KINDS = ("sq-ideal", "sq-zero", "pent-ideal", "pent-zero")


def _fail(msg: str) -> "SystemExit":
    print(f"error: {msg}", file=sys.stderr)
    raise SystemExit(2)


def _env_int(name: str) -> Optional[int]:
    raw = os.environ.get(name, "").strip()
    return int(raw) if raw else None


def _odd_levels(rmin: int, rmax: int, rstep: int) -> List[int]:
    if rmin < 5 or rmin % 2 == 0:
        _fail(f"--rmin must be an odd level >= 5, got {rmin}")
    if rstep < 2 or rstep % 2:
        _fail(f"--rstep must be a positive even integer, got {rstep}")
    if rmax < rmin:
        _fail(f"--rmax {rmax} is below --rmin {rmin}")
    return list(range(rmin, rmax + 1, rstep))


def _parse_colors(text: str, expected: Optional[int] = None) -> List[int]:
    try:
        colors = [int(x) for x in text.split(",")]
    except ValueError:
        _fail(f"--colors must be a comma-separated integer list, got {text!r}")
    if expected is not None and len(colors) != expected:
        _fail(f"expected {expected} colors, got {len(colors)}")
    if any(c < 0 or c % 2 for c in colors):
        _fail(f"colors must be even and non-negative, got {colors}")
    return colors


def _resolve_graph(ref: str) -> tuple[PlanarGraph, str, Optional[tuple]]:
    """A fixture name (dashes or underscores) or a JSON graph file."""
    name = ref.replace("_", "-")
    if name in FIXTURES:
        return FIXTURES[name](), name, None
    if os.path.exists(ref):
        try:
            with open(ref, "r", encoding="utf-8") as fh:
                g, col = graph_from_json(fh.read())
        except (ValueError, KeyError, json.JSONDecodeError) as exc:
            _fail(f"could not parse graph file {ref}: {exc}")
        return g, os.path.basename(ref), col
    _fail(f"unknown graph {ref!r}: not a fixture ({', '.join(sorted(FIXTURES))}) or a file")


def _emit(records, args) -> None:
    if args.format == "json":
        payload = [
            {field: getattr(rec, field) for field in CSV_FIELDS} for rec in records
        ]
        text = json.dumps(payload, indent=2, allow_nan=True) + "\n"
    else:
        text = records_to_csv(records)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"# wrote {len(records)} rows to {args.output}", file=sys.stderr)
    else:
        sys.stdout.write(text)


def _extrapolation_note(records) -> None:
    pairs = [
        (rec.r, rec.slope)
        for rec in records
        if isinstance(rec.slope, float) and math.isfinite(rec.slope)
    ]
    if len(pairs) < 4:
        print("# extrapolation skipped: fewer than 4 usable rows", file=sys.stderr)
        return
    try:
        limit = extrapolate_limit(pairs)
    except SkeinError as exc:
        print(f"# extrapolation failed: {exc}", file=sys.stderr)
        return
    last_r, last_slope = pairs[-1]
    print(
        f"# extrapolated limit (model a + b*log(r)/r): {limit:.6f}; "
        f"raw slope at r={last_r}: {last_slope:.6f}",
        file=sys.stderr,
    )


# ------------------------------------------------------------------ sixj


def cmd_sixj(args) -> int:
    if args.r < 5 or args.r % 2 == 0:
        _fail(f"--r must be an odd level >= 5, got {args.r}")
    colors = _parse_colors(args.colors, expected=6)
    if any(c > args.r - 3 for c in colors):
        _fail(f"colors must lie in 0..{args.r - 3} at r={args.r}, got {colors}")
    info = sixj_info(*colors, args.r)
    val = info["value"].to_complex()
    print(f"6j{tuple(colors)} at r={args.r}")
    print(f"value = {val.real:.12f} {'+' if val.imag >= 0 else '-'} {abs(val.imag):.12f}i")
    if abs(val) > 0:
        print(f"log|value| = {math.log(abs(val)):.12f}")
    else:
        print("log|value| = -inf")
    print(f"admissible: {'yes' if info['admissible'] else 'no (inadmissible coloring)'}")
    path = f"escalated to {info['prec_bits']}-bit arithmetic" if info["used_mp"] else "float path"
    print(f"cancellation: {info['cancel_digits']:.1f} digits ({path}, {info['terms']} terms)")
    return 0


# ------------------------------------------------------------------ scan


def _fixed_builder(graph, colors, policy, budget):
    def build(r: int) -> ScanRecord:
        val = yokota_ext(graph, colors, r, budget=budget)
        if val.is_zero():
            return ScanRecord(r, "fixed", policy + "!zero", None, None, None, None, None)
        lg = val.log_abs()
        return ScanRecord(r, "fixed", policy, lg, (math.pi / r) * lg, None, None, None)

    return build


def _maximizer_builder(graph, name, budget):
    if name == "tetrahedron":
        return lambda r: family_record(r, 0)
    if name == "triangular-prism":
        return lambda r: family_record(r, 1)

    def build(r: int) -> ScanRecord:
        c = maximizing_color(r)
        val = yokota_ext(graph, [c] * graph.ne, r, budget=budget)
        policy = f"maximizer[c={c}]"
        if val.is_zero():
            return ScanRecord(r, "maximizer", policy + "!zero", None, None, None, None, None)
        lg = val.log_abs()
        return ScanRecord(r, "maximizer", policy, lg, (math.pi / r) * lg, None, None, None)

    return build


def _tv_builder(graph, name, budget):
    if name == "tetrahedron":
        return lambda r: tv_tet_record(r, budget=budget)

    def build(r: int) -> ScanRecord:
        val = tv_graph(graph, r, budget=budget)
        lg = val.log_abs()
        return ScanRecord(r, "tv", "full-TV-sweep", lg, (math.pi / r) * lg, None, None, None)

    return build


def cmd_scan(args) -> int:
    levels = _odd_levels(args.rmin, args.rmax, args.rstep)
    graph, name, file_colors = _resolve_graph(args.graph)
    budget = args.budget

    if args.policy == "fixed":
        colors = (
            _parse_colors(args.colors, expected=graph.ne)
            if args.colors
            else list(file_colors or ())
        )
        if len(colors) != graph.ne:
            _fail("fixed policy needs --colors (or a graph file with a colors array)")
        if any(c > levels[0] - 3 for c in colors):
            _fail(f"colors must lie in 0..{levels[0] - 3} at the smallest level r={levels[0]}")
        # space-separated so the policy label never breaks the 9-column CSV
        policy = "fixed[" + " ".join(str(c) for c in colors) + "]"
        build, kind = _fixed_builder(graph, colors, policy, budget), "fixed"
    elif args.policy == "maximizer":
        build, kind = _maximizer_builder(graph, name, budget), "maximizer"
        policy = "maximizer"
    elif args.policy in _IDEAL_POLICY:
        wheel, exp_kind = _IDEAL_POLICY[args.policy]
        if name != wheel:
            _fail(f"policy {args.policy} applies to the {wheel} fixture, not {name}")
        build, kind, policy = (lambda r: appendix_record(exp_kind, r)), exp_kind, args.policy
    elif args.policy == "zero-angled":
        if name not in _ZERO_KIND:
            _fail(f"policy zero-angled applies to a pyramid fixture, not {name}")
        exp_kind = _ZERO_KIND[name]
        build, kind, policy = (lambda r: appendix_record(exp_kind, r)), exp_kind, "zero-angled"
    else:  # full-TV-sweep
        build, kind = _tv_builder(graph, name, budget), "tv"
        policy = "full-TV-sweep"

    records = run_levels(
        build, levels, threads=args.threads, timings=args.timings, mark=(kind, policy)
    )
    _emit(records, args)
    if args.extrapolate:
        _extrapolation_note(records)
    return 0


# ------------------------------------------------- reproduce-appendix


def cmd_reproduce_appendix(args) -> int:
    levels = _odd_levels(args.rmin, args.rmax, args.rstep)
    records = run_levels(
        lambda r: appendix_record(args.which, r),
        levels,
        threads=args.threads,
        timings=args.timings,
        mark=(args.which, args.which),
    )
    _emit(records, args)

    usable = [
        rec
        for rec in records
        if isinstance(rec.rel_gap, float) and math.isfinite(rec.rel_gap)
    ]
    if usable:
        first, last = usable[0], usable[-1]
        trend = "decreasing" if abs(last.rel_gap) < abs(first.rel_gap) else "NOT decreasing"
        within = "within" if abs(last.rel_gap) <= 0.05 else "outside"
        print(
            f"# {args.which}: target {last.target:.6f}; final slope at r={last.r}: "
            f"{last.slope:.6f} (gap {last.rel_gap:+.2%}, {within} 5%)",
            file=sys.stderr,
        )
        print(
            f"# gap trend over r={first.r}..{last.r}: {trend} "
            f"({first.rel_gap:+.2%} -> {last.rel_gap:+.2%})",
            file=sys.stderr,
        )
    return 0


# ---------------------------------------------------------------- verify


def cmd_verify(args) -> int:
    graph = None
    if args.graph:
        graph = args.graph.replace("_", "-")
        if graph not in FIXTURES:
            _fail(f"unknown fixture {args.graph!r}; choose from {', '.join(sorted(FIXTURES))}")
    if args.r is not None and (args.r < 5 or args.r % 2 == 0):
        _fail(f"--r must be an odd level >= 5, got {args.r}")
    try:
        results = run_suite(args.suite, r=args.r, rmax=args.rmax, graph=graph)
    except KeyError as exc:
        _fail(str(exc.args[0]))
    for res in results:
        print(res.line())
    failed = sum(not res.passed for res in results)
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return 1 if failed else 0


# ------------------------------------------------------------------ main


def _add_output_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--output", "-o", help="write records to this file instead of stdout")
    p.add_argument("--format", choices=("csv", "json"), default="csv", help="output format")
    p.add_argument(
        "--threads",
        type=int,
        default=_env_int("SKEIN_THREADS") or 1,
        help="worker threads for the level sweep (default: SKEIN_THREADS or 1)",
    )
    p.add_argument(
        "--timings",
        action="store_true",
        help="fill the wall_ms column (off by default: timings vary run to run)",
    )
    p.add_argument(
        "--precision-bits",
        type=int,
        default=None,
        help="floor for high-precision arithmetic (default: SKEIN_PRECISION_BITS)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skeinvol",
        description="Quantum invariants of colored planar graphs and their volume scans.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sixj", help="evaluate one 6j-symbol with diagnostics")
    p.add_argument("--r", type=int, required=True, help="odd level >= 5")
    p.add_argument("--colors", required=True, help="six comma-separated even colors")
    p.set_defaults(fn=cmd_sixj)

    p = sub.add_parser("scan", help="sweep odd levels with a coloring policy")
    p.add_argument("--graph", required=True, help="fixture name or JSON graph file")
    p.add_argument("--policy", required=True, choices=POLICIES)
    p.add_argument("--rmin", type=int, default=5)
    p.add_argument("--rmax", type=int, required=True)
    p.add_argument("--rstep", type=int, default=2, help="even step so levels stay odd")
    p.add_argument("--colors", help="fixed policy: comma-separated colors, one per edge")
    p.add_argument(
        "--budget",
        type=int,
        default=_env_int("SKEIN_BUDGET"),
        help="evaluation budget for engine-backed policies (default: SKEIN_BUDGET)",
    )
    p.add_argument(
        "--extrapolate",
        action="store_true",
        help="print the fitted limit of the slope column to stderr",
    )
    _add_output_flags(p)
    p.set_defaults(fn=cmd_scan)

    p = sub.add_parser(
        "reproduce-appendix", help="run one wheel-graph volume experiment"
    )
    p.add_argument("--which", required=True, choices=APPENDIX_KINDS)
    p.add_argument("--rmin", type=int, default=101)
    p.add_argument("--rmax", type=int, default=321)
    p.add_argument("--rstep", type=int, default=20)
    _add_output_flags(p)
    p.set_defaults(fn=cmd_reproduce_appendix)

    p = sub.add_parser("verify", help="run a named identity suite")
    p.add_argument("suite", choices=suite_names() + ["all"])
    p.add_argument("--r", type=int, default=None, help="level override for the suite")
    p.add_argument("--rmax", type=int, default=None, help="level cap for sweep suites")
    p.add_argument("--graph", default=None, help="fixture name for graph-based suites")
    p.set_defaults(fn=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "precision_bits", None):
        os.environ["SKEIN_PRECISION_BITS"] = str(args.precision_bits)
    if getattr(args, "threads", 1) < 1:
        _fail("--threads must be at least 1")
    try:
        return args.fn(args)
    except SkeinError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
