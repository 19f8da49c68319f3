"""Command-line interface.

Exit codes: 0 success, 1 a checked relation failed, 2 unreadable input,
3 resource limit, 4 violated precondition.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .counting import color_function_table, count_colorings, count_colorings_oracle
from .cover import Limits, canonical_cover, format_cover, parse_cover, random_cover, twister
from .errors import InputError, ParseError, ResourceLimitError
from .formulas import auto_formula, chromatic_polynomial
from .multigraph import MultiGraph, parse_graph
from .relations import dc_bounds_check, dc_check_cover, gap_table, run_sweep

EXIT_OK, EXIT_FAILED, EXIT_PARSE, EXIT_RESOURCE, EXIT_PRECONDITION = 0, 1, 2, 3, 4

ENV_MAX_COVERS = "DPCOLOR_MAX_COVERS"
ENV_MAX_LEAVES = "DPCOLOR_MAX_LEAVES"


@dataclass
class RunConfig:
    command: str
    inputs: list[str] = field(default_factory=list)
    ms: list[int] = field(default_factory=list)
    fmt: str = "human"
    limits: Limits = field(default_factory=Limits)
    seed: int | None = None


def parse_m_range(text: str) -> list[int]:
    """``"a..b"`` (inclusive) or a single ``"m"``."""
    try:
        if ".." in text:
            lo, hi = (int(x) for x in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected <m> or <a>..<b>, got {text!r}") from None
    if lo < 1 or hi < lo:
        raise argparse.ArgumentTypeError(f"need 1 <= a <= b, got {text!r}")
    return list(range(lo, hi + 1))


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _env_limit(name: str, default: int) -> int:
    raw = os.environ.get(name)
    return int(raw) if raw else default


def _read_graph(path: str) -> MultiGraph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return parse_graph(text)
    except ParseError as exc:
        raise ParseError(f"{path}: {exc}") from None


def _read_cover(path: str, g: MultiGraph):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return parse_cover(text, g)
    except ParseError as exc:
        raise ParseError(f"{path}: {exc}") from None


# -- subcommands -----------------------------------------------------------------


def cmd_poly(args, cfg: RunConfig) -> tuple[str, int]:
    poly = chromatic_polynomial(_read_graph(args.graph))
    if cfg.fmt == "json":
        return json.dumps({"polynomial": str(poly), "coefficients": list(poly.coeffs)}) + "\n", EXIT_OK
    return f"{poly}\n{poly.to_json()}\n", EXIT_OK


def cmd_table(args, cfg: RunConfig) -> tuple[str, int]:
    table = color_function_table(_read_graph(args.graph), cfg.ms, cfg.limits)
    return (table.to_json() if cfg.fmt == "json" else table.to_tsv()), EXIT_OK


def cmd_count(args, cfg: RunConfig) -> tuple[str, int]:
    h = _read_cover(args.cover, _read_graph(args.graph))
    value = count_colorings(h)
    if args.oracle:
        check = count_colorings_oracle(h, cfg.limits)
        if check != value:
            return f"{value}\noracle disagrees: {check}\n", EXIT_FAILED
    return f"{value}\n", EXIT_OK


def cmd_cover(args, cfg: RunConfig) -> tuple[str, int]:
    g = _read_graph(args.graph)
    (m,) = cfg.ms
    if args.kind == "canonical":
        h = canonical_cover(g, m)
    elif args.kind == "twister":
        h = twister(g, m)
    else:
        h = random_cover(g, m, cfg.seed)
    return format_cover(h), EXIT_OK


def cmd_dc_verify(args, cfg: RunConfig) -> tuple[str, int]:
    h = _read_cover(args.cover, _read_graph(args.graph))
    report = dc_check_cover(h, args.edge)
    code = EXIT_OK if report.consistent else EXIT_FAILED
    if cfg.fmt == "json":
        doc = {
            "lhs": report.lhs,
            "deleted": report.deleted,
            "contracted": report.contracted,
            "condition": report.equality_condition,
            "inequality": report.inequality_holds,
            "equality": report.equality_holds,
        }
        return json.dumps(doc) + "\n", code
    return f"{report}\n", code


def cmd_dc_bounds(args, cfg: RunConfig) -> tuple[str, int]:
    g = _read_graph(args.graph)
    (m,) = cfg.ms
    report = dc_bounds_check(g, args.edge, m, cfg.limits)
    text = f"{report}\n"
    if not report.lower_holds or report.upper_holds is False:
        return text, EXIT_FAILED
    if not report.upper_applicable:
        return text, EXIT_PRECONDITION
    return text, EXIT_OK


def cmd_sweep(args, cfg: RunConfig) -> tuple[str, int]:
    lines: list[str] = []
    summary = run_sweep(args.n, args.max_edges, cfg.ms, cfg.limits, sink=lines.append if args.cases else None)
    out = "\n".join(lines) + "\n" if lines else ""
    out += f"# {summary}\n"
    if summary.first_strict is not None:
        out += f"# first strict case: {summary.first_strict.tsv()}\n"
    return out, EXIT_OK if summary.ok else EXIT_FAILED


def cmd_formula(args, cfg: RunConfig) -> tuple[str, int]:
    f = auto_formula(_read_graph(args.graph), args.which)
    if f is None:
        return "no closed form\n", EXIT_OK
    if cfg.fmt == "json":
        doc = {
            "family": f.describe(),
            "which": args.which,
            "expression": f.expression,
            "polynomial": str(f.poly),
            "coefficients": list(f.poly.coeffs),
            "min_m": f.min_m,
        }
        return json.dumps(doc) + "\n", EXIT_OK
    return (
        f"family: {f.describe()}\n"
        f"{f.expression}\n"
        f"= {f.poly}\n"
        f"valid for m >= {f.min_m}\n"
    ), EXIT_OK


def cmd_gaps(args, cfg: RunConfig) -> tuple[str, int]:
    rows = gap_table(_read_graph(args.graph), cfg.ms, args.method, cfg.limits)
    lines = ["m\tp_dp\tp\tp_dual\tgap_dp\tgap_dual"]
    lines += [f"{r.m}\t{r.p_dp}\t{r.chromatic}\t{r.p_dual}\t{r.gap_dp}\t{r.gap_dual}" for r in rows]
    return "\n".join(lines) + "\n", EXIT_OK


# -- parser -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dpcolor", description="Exact DP-coloring computations on small multigraphs.", allow_abbrev=False
    )
    parser.add_argument("--max-covers", type=_positive, default=None, help=f"cover enumeration cap (env {ENV_MAX_COVERS})")
    parser.add_argument("--max-leaves", type=_positive, default=None, help=f"oracle m^n cap (env {ENV_MAX_LEAVES})")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poly", help="chromatic polynomial")
    p.add_argument("graph")
    p.add_argument("--format", choices=["human", "json"], default="human")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("table", help="P_DP, P and P*_DP by exhaustive search")
    p.add_argument("graph")
    p.add_argument("--m", type=parse_m_range, required=True, metavar="A..B")
    p.add_argument("--format", choices=["tsv", "json"], default="tsv")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("count", help="number of H-colorings of one cover")
    p.add_argument("graph")
    p.add_argument("cover")
    p.add_argument("--oracle", action="store_true", help="also count by full enumeration and compare")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("cover", help="write a canonical, twister or random cover")
    p.add_argument("graph")
    p.add_argument("--kind", choices=["canonical", "twister", "random"], default="canonical")
    p.add_argument("--m", type=parse_m_range, required=True)
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=cmd_cover)

    p = sub.add_parser("dc-verify", help="deletion-contraction counts for one cover and edge")
    p.add_argument("graph")
    p.add_argument("cover")
    p.add_argument("--edge", type=int, required=True)
    p.add_argument("--format", choices=["human", "json"], default="human")
    p.set_defaults(func=cmd_dc_verify)

    p = sub.add_parser("dc-bounds", help="color-function bounds from deletion-contraction")
    p.add_argument("graph")
    p.add_argument("--edge", type=int, required=True)
    p.add_argument("--m", type=parse_m_range, required=True)
    p.set_defaults(func=cmd_dc_bounds)

    p = sub.add_parser("sweep", help="check the cover inequality over the multigraph catalog")
    p.add_argument("--n", type=_positive, required=True, help="max vertices")
    p.add_argument("--max-edges", type=int, default=6)
    p.add_argument("--m", type=parse_m_range, default=[2, 3])
    p.add_argument("--cases", action="store_true", help="emit one TSV line per case")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("formula", help="closed form for a recognized family")
    p.add_argument("graph")
    p.add_argument("--which", choices=["dp", "dual"], default="dp")
    p.add_argument("--format", choices=["human", "json"], default="human")
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("gaps", help="P - P_DP and P*_DP - P over a range of m")
    p.add_argument("graph")
    p.add_argument("--m", type=parse_m_range, required=True)
    p.add_argument("--method", choices=["auto", "formula", "exhaustive"], default="auto")
    p.set_defaults(func=cmd_gaps)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    limits = Limits(
        max_covers=args.max_covers or _env_limit(ENV_MAX_COVERS, Limits.max_covers),
        max_leaves=args.max_leaves or _env_limit(ENV_MAX_LEAVES, Limits.max_leaves),
    )
    ms = getattr(args, "m", [])
    if args.command in ("cover", "dc-bounds") and len(ms) != 1:
        parser.error(f"{args.command} takes a single --m value")
    cfg = RunConfig(
        command=args.command,
        inputs=[v for k, v in vars(args).items() if k in ("graph", "cover")],
        ms=ms,
        fmt=getattr(args, "format", "human"),
        limits=limits,
        seed=getattr(args, "seed", None),
    )
    try:
        out, code = args.func(args, cfg)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
