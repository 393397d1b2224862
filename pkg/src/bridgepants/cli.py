"""Command line front end.

    bridgepants invariants 2/5
    bridgepants cf 3/11
    bridgepants distance 3/11
    bridgepants bounds 7/17 --via pants
    bridgepants cover 2/5
    bridgepants graph --surface s04 --complex dual --bound 1 --format json
    bridgepants batch knots.txt
    bridgepants --schema

Exit codes: 0 ok, 1 some batch line failed, 2 parse error or unreadable
file, 3 even denominator (a link), 4 bounds requested for a non-hyperbolic
knot, 5 graph bound above the cap (``BRIDGEPANTS_MAX_BOUND``, default 500).
"""

from __future__ import annotations

import argparse
import json
import math
import os
import re
import sys
from importlib import resources
from typing import Any, Iterable, TextIO

from . import __version__
from .complexity import dual_distance_02, known_complexity, pants_distance_02
from .farey import geodesic, truncation_path
from .pantscomplex import Complex, MetricGraphView, SurfaceKind, bounded_view
from .twobridge import (
    TwoBridgeKnot,
    TwoBridgeLinkError,
    continued_fraction,
    double_branched_cover,
    is_hyperbolic,
    is_torus_two_bridge,
    parse_knot,
    twist_number,
)
from .volume import bounds_for_knot

EXIT_OK = 0
EXIT_BATCH_FAILURES = 1
EXIT_PARSE = 2
EXIT_LINK = 3
EXIT_NOT_HYPERBOLIC = 4
EXIT_BOUND = 5

DEFAULT_MAX_BOUND = 500
MAX_BOUND_ENV = "BRIDGEPANTS_MAX_BOUND"
FLOAT_DIGITS = 12


class CLIError(Exception):
    def __init__(self, message: str, code: int) -> None:
        super().__init__(message)
        self.code = code


def load_schema() -> dict:
    text = resources.files("bridgepants").joinpath("schema/report.schema.json").read_text()
    return json.loads(text)


def _num(x: float) -> float:
    if not math.isfinite(x):
        raise ValueError(f"non-finite value {x}")
    return float(f"{x:.{FLOAT_DIGITS}g}")


def _dumps(obj: Any) -> str:
    return json.dumps(obj, allow_nan=False)


def _knot(text: str) -> TwoBridgeKnot:
    try:
        return parse_knot(text)
    except TwoBridgeLinkError as exc:
        raise CLIError(str(exc), EXIT_LINK) from exc
    except ValueError as exc:
        raise CLIError(str(exc), EXIT_PARSE) from exc


def _normal_form(k: TwoBridgeKnot) -> dict:
    return {"p": k.p, "q": k.q, "mirrored": k.mirrored}


def invariants_report(text: str) -> dict:
    """Full invariant report for one knot description."""
    k = _knot(text)
    reasons: dict[str, str] = {}
    if k.is_unknot:
        cf = None
        tw = None
        reasons["cf"] = "the unknot has no continued fraction in (0, 1/2]"
        reasons["twist_number"] = "the unknot has no canonical twist diagram"
    else:
        cf = list(continued_fraction(k))
        tw = twist_number(k)

    dp = pants_distance_02(k)
    known = known_complexity(k)
    if known.B_pants is None:
        reasons["known_BP"] = (
            f"{known.provenance.get('B_pants', 'open')}: no closed form; "
            "BP_sigma_upper_bound bounds it from above"
        )

    hyperbolic = is_hyperbolic(k)
    if hyperbolic:
        volume_bounds = {
            via: [_num(x) for x in bounds_for_knot(k, via).as_list()] for via in ("twist", "pants")
        }
    else:
        volume_bounds = None
        kind = "the unknot" if k.is_unknot else "a (2, q) torus knot"
        reasons["volume_bounds"] = f"not hyperbolic ({kind}); volume bounds do not apply"

    lens = double_branched_cover(k)
    return {
        "input": text,
        "normal_form": _normal_form(k),
        "cf": cf,
        "twist_number": tw,
        "pants_distance": dp,
        "dual_distance": dual_distance_02(k),
        "B_sigma": dual_distance_02(k) - 1,
        "BP_sigma_upper_bound": dp - 1,
        "known_B": known.B,
        "known_BP": known.B_pants,
        "lens_space": {"q": lens.q, "p": lens.p},
        "hyperbolic": hyperbolic,
        "volume_bounds": volume_bounds,
        "reasons": reasons,
    }


def cf_report(text: str) -> dict:
    k = _knot(text)
    out: dict[str, Any] = {"input": text, "normal_form": _normal_form(k)}
    if k.is_unknot:
        out.update(cf=None, truncation_path=None, crossing_count=None)
        out["reasons"] = {"cf": "the unknot has no continued fraction in (0, 1/2]"}
        return out
    cf = continued_fraction(k)
    out["cf"] = list(cf)
    out["truncation_path"] = truncation_path(cf).labels()
    out["crossing_count"] = sum(cf)
    return out


def distance_report(text: str) -> dict:
    k = _knot(text)
    return {
        "input": text,
        "normal_form": _normal_form(k),
        "pants_distance": pants_distance_02(k),
        "dual_distance": dual_distance_02(k),
        "geodesic": geodesic(k.slope).labels(),
    }


def bounds_report(text: str, via: str | None) -> dict:
    k = _knot(text)
    if not is_hyperbolic(k):
        kind = "a (2, q) torus knot" if is_torus_two_bridge(k) else "the unknot"
        raise CLIError(f"{text}: {kind} is not hyperbolic; volume bounds do not apply", EXIT_NOT_HYPERBOLIC)
    vias = (via,) if via else ("twist", "pants")
    return {
        "input": text,
        "normal_form": _normal_form(k),
        "volume_bounds": {v: [_num(x) for x in bounds_for_knot(k, v).as_list()] for v in vias},
    }


def cover_report(text: str) -> dict:
    k = _knot(text)
    lens = double_branched_cover(k)
    return {"input": text, "normal_form": _normal_form(k), "lens_space": {"q": lens.q, "p": lens.p}}


def max_bound() -> int:
    raw = os.environ.get(MAX_BOUND_ENV)
    if raw is None:
        return DEFAULT_MAX_BOUND
    try:
        return int(raw)
    except ValueError as exc:
        raise CLIError(f"{MAX_BOUND_ENV}={raw!r} is not an integer", EXIT_PARSE) from exc


def graph_lines(view: MetricGraphView, fmt: str) -> Iterable[str]:
    if fmt == "json":
        yield _dumps({"vertices": [str(v) for v in view.vertices], "edges": [list(e) for e in view.edges()]})
        return
    yield f"graph {view.surface.value}_{view.complex.value} {{"
    for i, v in enumerate(view.vertices):
        yield f'  {i} [label="{v}"];'
    for i, j in view.edges():
        yield f"  {i} -- {j};"
    yield "}"


def run_batch(lines: Iterable[str], out: TextIO) -> int:
    """Write one JSON line per non-comment input line; 1 if any line failed."""
    status = EXIT_OK
    for lineno, raw in enumerate(lines, start=1):
        text = raw.strip()
        if not text or text.startswith("#"):
            continue
        try:
            record = {"line": lineno, **invariants_report(text)}
        except (CLIError, ValueError) as exc:
            record = {"line": lineno, "error": str(exc)}
            status = EXIT_BATCH_FAILURES
        out.write(_dumps(record) + "\n")
    return status


class _SlopeArgumentParser(argparse.ArgumentParser):
    """Lets negative slopes such as ``-3/11`` pass as positionals."""

    def __init__(self, *args: Any, **kwargs: Any) -> None:
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = re.compile(r"^-\d+(/-?\d+)?$")


def build_parser() -> argparse.ArgumentParser:
    parser = _SlopeArgumentParser(
        prog="bridgepants",
        description="Invariants of 2-bridge knots from Farey graph geometry.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--quiet", action="store_true", help="suppress diagnostics on stderr")
    parser.add_argument("--schema", action="store_true", help="print the report JSON schema and exit")
    sub = parser.add_subparsers(dest="command", parser_class=_SlopeArgumentParser)

    for name, help_text in [
        ("invariants", "full invariant report"),
        ("cf", "continued fraction and truncation path"),
        ("distance", "pants and dual distance of the (0,2)-splitting"),
        ("cover", "double branched cover"),
    ]:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("slope", help="'p/q' (leading minus allowed) or 'unknot'")

    p = sub.add_parser("bounds", help="hyperbolic volume bounds")
    p.add_argument("slope")
    p.add_argument("--via", choices=("twist", "pants"))

    p = sub.add_parser("graph", help="export a bounded window of a complex")
    p.add_argument("--surface", choices=("s04", "s11"), default="s04")
    p.add_argument("--complex", choices=("pants", "dual"), default="pants")
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--format", choices=("dot", "json"), default="json")

    p = sub.add_parser("batch", help="process a file of knot descriptions")
    p.add_argument("path")
    return parser


def main(argv: list[str] | None = None, out: TextIO | None = None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)

    def fail(exc: CLIError) -> int:
        if not args.quiet:
            print(f"bridgepants: {exc}", file=sys.stderr)
        return exc.code

    if args.schema:
        out.write(json.dumps(load_schema(), indent=2) + "\n")
        return EXIT_OK
    if args.command is None:
        parser.print_usage(sys.stderr)
        return EXIT_PARSE

    try:
        if args.command == "invariants":
            out.write(_dumps(invariants_report(args.slope)) + "\n")
        elif args.command == "cf":
            out.write(_dumps(cf_report(args.slope)) + "\n")
        elif args.command == "distance":
            out.write(_dumps(distance_report(args.slope)) + "\n")
        elif args.command == "bounds":
            out.write(_dumps(bounds_report(args.slope, args.via)) + "\n")
        elif args.command == "cover":
            out.write(_dumps(cover_report(args.slope)) + "\n")
        elif args.command == "graph":
            cap = max_bound()
            if args.bound < 1:
                raise CLIError(f"bound must be positive, got {args.bound}", EXIT_PARSE)
            if args.bound > cap:
                raise CLIError(f"bound {args.bound} exceeds the cap {cap} (set {MAX_BOUND_ENV})", EXIT_BOUND)
            view = bounded_view(SurfaceKind(args.surface), Complex(args.complex), args.bound)
            for line in graph_lines(view, args.format):
                out.write(line + "\n")
        elif args.command == "batch":
            try:
                with open(args.path, encoding="utf-8") as fh:
                    lines = fh.readlines()
            except OSError as exc:
                raise CLIError(f"cannot read {args.path}: {exc.strerror}", EXIT_PARSE) from exc
            return run_batch(lines, out)
    except CLIError as exc:
        return fail(exc)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
