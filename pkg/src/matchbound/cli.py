"""Command-line front end: one subcommand per library area.

Exit codes: 0 success, 2 usage or input error (bad flags, unreadable or
malformed files), 1 a detected mathematical violation (a bound exceeding
the matching number under audit or fuzz). Data goes to stdout or named
output files; diagnostics go to stderr. Identical invocations produce
byte-identical output. Rationals are serialized as exact "p/q" strings;
decimal columns are advisory, five places, round-half-even.
"""

from __future__ import annotations

import json
import sys
from fractions import Fraction
from pathlib import Path

import argparse

from matchbound import __version__
from matchbound.bounds import (BoundReport, audit_graph, format_decimal,
                               scaled_bound_row)
from matchbound.edgelist import (EdgeListError, emit_edge_list,
                                 parse_edge_list, to_dot)
from matchbound.families import (GeneratedGraph, bipartite_tree, block_chain,
                                 canonical_tree, regular_gadget_ring,
                                 tree_with_gadgets)
from matchbound.fuzz import FuzzConfig, run_fuzz
from matchbound.graphs import Graph, GraphError
from matchbound.matching import maximum_matching, tutte_berge
from matchbound.region import (classify_pair, classify_pair_geometric,
                               extreme_points, half_spaces, polygon_svg,
                               region_polygon)

# Strictly contains the extreme points of every k >= 3 (|gamma| <= 1/11,
# beta in (0, 3/11]), so `region` works without an explicit --bbox.
DEFAULT_BBOX = (Fraction(-1, 4), Fraction(1, 4),
                Fraction(-1, 2), Fraction(1, 2))


def main(argv: list[str] | None = None) -> None:
    sys.exit(run_cli(argv))


def run_cli(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = _build_parser()
    try:
        args = parser.parse_args(_merge_tuple_flags(argv))
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.handler(args)
    except (EdgeListError, GraphError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _merge_tuple_flags(argv: list[str]) -> list[str]:
    """Join `--point -1/11,3/11` into `--point=-1/11,3/11`.

    argparse would otherwise read a value with a leading minus sign as an
    unknown flag; pre-merging keeps both the spaced and `=` spellings
    working.
    """
    merged: list[str] = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in ("--point", "--bbox") and i + 1 < len(argv):
            merged.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            merged.append(tok)
            i += 1
    return merged


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matchbound",
        description="Matching numbers, lower bounds, extremal families, "
                    "and the valid-coefficient region for graphs of "
                    "bounded maximum degree.")
    parser.add_argument("--version", action="version",
                        version=f"matchbound {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("matching",
                       help="maximum matching of an edge-list file")
    p.add_argument("file")
    p.set_defaults(handler=_cmd_matching)

    p = sub.add_parser("tutte-berge",
                       help="exhaustive deficiency-formula certificate")
    p.add_argument("file")
    p.add_argument("--max-n", type=int, default=22,
                   help="refuse graphs larger than this (default 22)")
    p.set_defaults(handler=_cmd_tutte_berge)

    p = sub.add_parser("audit",
                       help="evaluate every applicable lower bound")
    p.add_argument("file")
    p.add_argument("--k", type=int, required=True,
                   help="degree cap the bounds are taken at")
    p.add_argument("--json", metavar="OUT",
                   help="also write the report as JSON to OUT")
    p.set_defaults(handler=_cmd_audit)

    p = sub.add_parser("construct", help="generate an extremal family member")
    fam = p.add_subparsers(dest="family", required=True)

    f = fam.add_parser("gkr", help="chain of blocks joined by connectors")
    f.add_argument("--k", type=int, required=True)
    f.add_argument("--r", type=int, required=True,
                   help="number of connector vertices")
    f.add_argument("--blocks", default="gadgets",
                   help="'gadgets', 'singles', or a per-block string of "
                        "g/s (or 1/0) letters (default: gadgets)")
    _construct_output_flags(f)
    f.set_defaults(handler=_cmd_construct)

    f = fam.add_parser("hkr", help="tree with gadget copies on one side")
    f.add_argument("--k", type=int, required=True)
    f.add_argument("--mode", choices=("tree", "regular"), default="tree",
                   help="canonical backbone shape (with --r)")
    f.add_argument("--r", type=int,
                   help="size parameter of the canonical backbone")
    f.add_argument("--tree", metavar="FILE",
                   help="explicit backbone tree as an edge-list file")
    f.add_argument("--part2", metavar="IDS",
                   help="comma-separated vertex ids forming the gadget "
                        "side of --tree (default: the bipartition class "
                        "not containing vertex 0)")
    _construct_output_flags(f)
    f.set_defaults(handler=_cmd_construct)

    f = fam.add_parser("fkr", help="k-regular ring of shared gadgets")
    f.add_argument("--k", type=int, required=True)
    f.add_argument("--r", type=int, required=True,
                   help="number of hub vertices")
    _construct_output_flags(f)
    f.set_defaults(handler=_cmd_construct)

    p = sub.add_parser("region",
                       help="the convex set of good (gamma, beta) pairs")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--point", metavar="G,B",
                   help="classify one rational pair, e.g. -1/11,3/11")
    p.add_argument("--polygon", metavar="OUT.csv",
                   help="write the clipped region polygon as CSV")
    p.add_argument("--svg", metavar="OUT.svg",
                   help="write an SVG rendering of the region")
    p.add_argument("--bbox", metavar="G0,G1,B0,B1",
                   help="clip box for --polygon/--svg "
                        "(default -1/4,1/4,-1/2,1/2)")
    p.set_defaults(handler=_cmd_region)

    p = sub.add_parser("fuzz",
                       help="random-graph audit sweep; exits 1 on violation")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--allow-regular", action="store_true",
                   help="keep samples that happen to be k-regular")
    p.set_defaults(handler=_cmd_fuzz)

    p = sub.add_parser("tables", help="reference tables as CSV")
    p.add_argument("--which", choices=("1", "2"), required=True,
                   help="1: k-regular connected reference bounds; "
                        "2: scaled integer bound coefficients")
    p.set_defaults(handler=_cmd_tables)

    return parser


def _construct_output_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out", metavar="FILE",
                   help="write the graph to FILE and a JSON sidecar to "
                        "FILE.json (default: stdout, no sidecar)")
    p.add_argument("--dot", action="store_true",
                   help="emit Graphviz text instead of an edge list")


def _read_graph(path: str) -> Graph:
    return parse_edge_list(Path(path).read_text())


def _cmd_matching(args: argparse.Namespace) -> int:
    m = maximum_matching(_read_graph(args.file))
    payload = {"alpha": m.size,
               "witness": [list(e) for e in sorted(m.edges)]}
    print(json.dumps(payload, separators=(",", ":")))
    return 0


def _cmd_tutte_berge(args: argparse.Namespace) -> int:
    cert = tutte_berge(_read_graph(args.file), max_n=args.max_n)
    payload = {"alpha": cert.value, "witness": list(cert.witness)}
    print(json.dumps(payload, separators=(",", ":")))
    return 0


def _cmd_audit(args: argparse.Namespace) -> int:
    report = audit_graph(_read_graph(args.file), args.k)
    print(f"alpha = {report.alpha}")
    for e in report.entries:
        if not e.applicable:
            print(f"{e.name:24} skipped: {e.reason}")
            continue
        flag = "  VIOLATED" if e.violated else ("  tight" if e.tight else "")
        print(f"{e.name:24} value {str(e.value):>8}  slack "
              f"{str(e.slack):>8}{flag}")
    if args.json:
        Path(args.json).write_text(_report_json(report, args.k))
    return 1 if report.violations else 0


def _report_json(report: BoundReport, k: int) -> str:
    payload = {
        "alpha": report.alpha,
        "k": k,
        "entries": [
            {
                "name": e.name,
                "applicable": e.applicable,
                "reason": e.reason,
                "value": None if e.value is None else str(e.value),
                "slack": None if e.slack is None else str(e.slack),
                "tight": e.tight,
                "violated": e.violated,
            }
            for e in report.entries
        ],
    }
    return json.dumps(payload, indent=2) + "\n"


def _cmd_construct(args: argparse.Namespace) -> int:
    gg = _build_family(args)
    text = to_dot(gg.graph) if args.dot else emit_edge_list(gg.graph)
    if args.out:
        Path(args.out).write_text(text)
        sidecar = {
            "n": gg.graph.vertex_count,
            "m": gg.graph.edge_count,
            "alpha_predicted": gg.predicted_alpha,
            "link_vertices": list(gg.link_vertices),
        }
        Path(args.out + ".json").write_text(
            json.dumps(sidecar, indent=2) + "\n")
    else:
        sys.stdout.write(text)
    return 0


def _build_family(args: argparse.Namespace) -> GeneratedGraph:
    if args.family == "gkr":
        return block_chain(args.k, args.r, args.blocks)
    if args.family == "fkr":
        return regular_gadget_ring(args.k, args.r)
    if args.tree is not None:
        if args.r is not None:
            raise ValueError("construct hkr takes --tree or --r, not both")
        backbone = _read_graph(args.tree)
        if args.part2 is not None:
            part2 = [int(s) for s in args.part2.split(",")]
        else:
            part2 = _odd_distance_class(backbone)
        return tree_with_gadgets(args.k, bipartite_tree(backbone, part2))
    if args.r is None:
        raise ValueError("construct hkr needs --r (or an explicit --tree)")
    return tree_with_gadgets(args.k,
                             canonical_tree(args.k, args.r, args.mode))


def _odd_distance_class(g: Graph) -> list[int]:
    """Vertices at odd distance from vertex 0 (one bipartition class)."""
    if g.vertex_count == 0:
        return []
    dist = [-1] * g.vertex_count
    dist[0] = 0
    queue = [0]
    for u in queue:
        for v in g.adjacency[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    return [v for v, d in enumerate(dist) if d > 0 and d % 2 == 1]


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"not a rational number: {text!r}") from None


def _parse_rationals(text: str, count: int, what: str) -> list[Fraction]:
    parts = text.split(",")
    if len(parts) != count:
        raise ValueError(
            f"{what} needs {count} comma-separated rationals, got {text!r}")
    return [_parse_fraction(p) for p in parts]


def _cmd_region(args: argparse.Namespace) -> int:
    k = args.k
    acted = False
    if args.point is not None:
        gamma, beta = _parse_rationals(args.point, 2, "--point")
        p = (gamma, beta)
        good = classify_pair(k, p)
        if good != classify_pair_geometric(k, p):
            raise AssertionError(
                f"classifier disagreement at {p} for k={k}")
        boundary = good and any(h.on_boundary(p) for h in half_spaces(k))
        print(json.dumps(
            {"classification": "good" if good else "bad",
             "boundary": boundary},
            separators=(",", ":")))
        acted = True
    if args.polygon or args.svg:
        if args.bbox is not None:
            g0, g1, b0, b1 = _parse_rationals(args.bbox, 4, "--bbox")
            bbox = (g0, g1, b0, b1)
        else:
            bbox = DEFAULT_BBOX
        points = region_polygon(k, bbox)
        if args.polygon:
            rows = ["gamma_exact,beta_exact,gamma_dec,beta_dec"]
            rows.extend(
                f"{g},{b},{format_decimal(g)},{format_decimal(b)}"
                for g, b in points)
            Path(args.polygon).write_text("\n".join(rows) + "\n")
        if args.svg:
            Path(args.svg).write_text(polygon_svg(points, bbox))
        acted = True
    if not acted:
        payload = {
            "k": k,
            "extreme_points": [[str(g), str(b)]
                               for g, b in extreme_points(k)],
            "half_spaces": [{"slope": str(h.slope),
                             "intercept": str(h.intercept)}
                            for h in half_spaces(k)],
        }
        print(json.dumps(payload, separators=(",", ":")))
    return 0


def _cmd_fuzz(args: argparse.Namespace) -> int:
    config = FuzzConfig(k=args.k, trials=args.trials, max_n=args.max_n,
                        seed=args.seed,
                        forbid_regular_components=not args.allow_regular)
    outcome = run_fuzz(config)
    sys.stdout.write(outcome.to_json())
    return 1 if outcome.violations else 0


def _cmd_tables(args: argparse.Namespace) -> int:
    if args.which == "1":
        print("k,n_coeff,constant,cap_n_coeff,cap_constant")
        for k in range(3, 9):
            # Recover the two affine pieces from the closed forms the
            # bound is built from; sampling would work too, but this keeps
            # the emitted row exact for every n at once.
            if k % 2:
                coeff = Fraction(k ** 3 - k * k - 2, 2 * (k ** 3 - 3 * k))
                const = Fraction(-2 * k + 2, 2 * (k ** 3 - 3 * k))
                print(f"{k},{coeff},{const},,")
            else:
                coeff = Fraction(k * k + 4, 2 * (k * k + k + 2))
                print(f"{k},{coeff},0,1/2,-1/2")
        return 0
    print("k,scale,n_coeff,m_coeff,constant,n_coeff_dec,m_coeff_dec")
    for k in range(3, 12):
        d, a_num, b_num, c_num = scaled_bound_row(k)
        a_dec = format_decimal(Fraction(a_num, d))
        b_dec = format_decimal(Fraction(b_num, d))
        print(f"{k},{d},{a_num},{b_num},{c_num},{a_dec},{b_dec}")
    return 0


if __name__ == "__main__":
    main()
