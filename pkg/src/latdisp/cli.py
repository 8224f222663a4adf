"""Command-line front end.

Exit codes: 0 on success, 1 on a domain error (reported as one line on
stderr), 2 on usage errors (argparse's own convention).
"""

from __future__ import annotations

import argparse
import json
import sys

from .anticodes import (
    AnticodeKind,
    AnticodeSpec,
    centered_anticode_1pt,
    centered_anticode_2pt,
    centered_quadristance_anticode_3pt,
    optimal_anticode,
)
from .apps import interleaving_lower_bound
from .dispersion import dispersion_diameter, dispersion_oracle
from .document import RegionDocument, document_to_json, locus_document
from .lattice import DomainError, Model, parse_points
from .render import ascii_region, svg_region
from .report import verify_table, write_report_files
from .search import SearchBudget, max_anticode

__all__ = ["main"]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latdisp",
        description="Lattice dispersion, anticode, and Go-locus toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dispersion",
                       help="dispersion of 2-5 points (closed form or DP)")
    p.add_argument("--model", required=True)
    p.add_argument("--points", required=True,
                   help='semicolon-separated, e.g. "0,0;1,0;0,1"')
    p.add_argument("--oracle", action="store_true",
                   help="also run the Steiner DP and report agreement")

    p = sub.add_parser("anticode", help="optimal anticode for a diameter")
    p.add_argument("--model", required=True)
    p.add_argument("--kind", required=True)
    p.add_argument("--diameter", type=int, required=True)
    p.add_argument("--format", choices=("json", "ascii", "svg"),
                   default="json")

    p = sub.add_parser("centered",
                       help="largest anticode through 1-3 fixed centers")
    p.add_argument("--model", required=True)
    p.add_argument("--centers", required=True)
    p.add_argument("--diameter", type=int, required=True)

    p = sub.add_parser("verify-tables",
                       help="re-check one construction family per diameter")
    p.add_argument("--table", type=int, required=True, choices=(1, 2, 3, 4, 5))
    p.add_argument("--max-d", type=int, required=True)
    p.add_argument("--out-dir",
                   help="also write a CSV and a size-curve PNG here")

    p = sub.add_parser("search", help="exhaustive maximum-anticode search")
    p.add_argument("--model", required=True)
    p.add_argument("--kind", required=True)
    p.add_argument("--diameter", type=int, required=True)
    p.add_argument("--witnesses", action="store_true",
                   help="collect canonical maximum witnesses")
    p.add_argument("--budget-nodes", type=int,
                   default=SearchBudget.max_nodes)
    p.add_argument("--budget-seconds", type=float,
                   default=SearchBudget.max_seconds)

    p = sub.add_parser("go-locus",
                       help="board cells keeping stones k-connectable")
    p.add_argument("--stones", default="",
                   help='0-3 stones, e.g. "9,9;11,9" (empty for none)')
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--board", type=int, default=19)

    p = sub.add_parser("bound", help="interleaving-degree lower bound")
    p.add_argument("--model", required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--r", type=int, required=True)

    p = sub.add_parser("serve", help="JSON API over HTTP")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--static",
                   help="also serve files from this directory at /")
    return parser


def _cmd_dispersion(args) -> int:
    model = Model.parse(args.model)
    points = parse_points(model, args.points)
    if not 2 <= len(points) <= 5:
        raise DomainError("dispersion takes between 2 and 5 points")
    r = len(points)
    closed = False
    if r <= 4:
        try:
            value = dispersion_diameter(model, r, points)
            closed = True
        except DomainError:
            pass
    if not closed:
        # No closed form (5 points, or 4 points off the square grid).
        value = dispersion_oracle(model, points)
    print(value)
    if args.oracle and closed:
        oracle = dispersion_oracle(model, points)
        agree = oracle == value
        print(f"oracle: {oracle} ({'agree' if agree else 'DISAGREE'})")
        if not agree:
            return 1
    return 0


def _cmd_anticode(args) -> int:
    spec = AnticodeSpec(Model.parse(args.model),
                        AnticodeKind.parse(args.kind), args.diameter)
    sol = optimal_anticode(spec)
    doc = RegionDocument.from_solution(sol, spec.kind, spec.diameter)
    if args.format == "json":
        sys.stdout.write(document_to_json(doc))
    elif args.format == "ascii":
        print(ascii_region(sol.region))
    else:
        sys.stdout.write(svg_region(sol.region))
    return 0


def _cmd_centered(args) -> int:
    model = Model.parse(args.model)
    centers = parse_points(model, args.centers)
    d = args.diameter
    if len(centers) == 1:
        if model is not Model.GRID2:
            raise DomainError("single-center anticodes are grid2 only")
        region = centered_anticode_1pt(centers[0], d)
        kind = AnticodeKind.TRISTANCE
    elif len(centers) == 2:
        region = centered_anticode_2pt(model, centers[0], centers[1], d)
        kind = AnticodeKind.TRISTANCE
    elif len(centers) == 3:
        if model is not Model.GRID2:
            raise DomainError("three-center anticodes are grid2 only")
        region = centered_quadristance_anticode_3pt(*centers, d)
        kind = AnticodeKind.QUADRISTANCE
    else:
        raise DomainError("centered anticodes take 1 to 3 centers")
    doc = RegionDocument.from_region(region, kind, d)
    sys.stdout.write(document_to_json(doc))
    return 0


def _cmd_verify_tables(args) -> int:
    rows = verify_table(args.table, args.max_d)
    for row in rows:
        print(row.line())
    if args.out_dir:
        csv_path, png_path = write_report_files(args.table, rows,
                                                args.out_dir)
        print(f"wrote {csv_path} and {png_path}", file=sys.stderr)
    return 0 if all(row.ok for row in rows) else 1


def _cmd_search(args) -> int:
    report = max_anticode(
        Model.parse(args.model), AnticodeKind.parse(args.kind),
        args.diameter,
        budget=SearchBudget(max_nodes=args.budget_nodes,
                            max_seconds=args.budget_seconds),
        collect_witnesses=args.witnesses)
    payload = {
        "model": report.model.value,
        "kind": report.kind.value,
        "diameter": report.diameter,
        "max_size": report.max_size,
        "witnesses": [[list(p) for p in wit.points]
                      for wit in report.witnesses],
        "nodes_explored": report.nodes_explored,
        "wall_budget_hit": report.wall_budget_hit,
    }
    print(json.dumps(payload, indent=2))
    return 0


def _cmd_go_locus(args) -> int:
    sys.stdout.write(document_to_json(
        locus_document(args.stones, args.k, args.board)))
    return 0


def _cmd_bound(args) -> int:
    bound = interleaving_lower_bound(Model.parse(args.model), args.t, args.r)
    print(bound.value)
    return 0


def _cmd_serve(args) -> int:
    from .serve import run_server
    run_server(host=args.host, port=args.port, static_dir=args.static)
    return 0


_COMMANDS = {
    "dispersion": _cmd_dispersion,
    "anticode": _cmd_anticode,
    "centered": _cmd_centered,
    "verify-tables": _cmd_verify_tables,
    "search": _cmd_search,
    "go-locus": _cmd_go_locus,
    "bound": _cmd_bound,
    "serve": _cmd_serve,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
