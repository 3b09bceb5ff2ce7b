"""Command-line front end.

Subcommands: group, graph, analyze, verify-paper, sweep-single-arcs.
All JSON output is deterministic (sorted keys, fixed indentation); CSV uses
fixed columns with LF line endings.  Exit codes: 0 success / all pass,
1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Optional

from . import SCHEMA, engel, topology
from .analysis import CLIQUE_VERTEX_LIMIT, clique_number, is_planar, recognize_complete_multipartite
from .cache import cache_dir_from_env
from .groups import FiniteGroup, hypercenter, is_nilpotent, is_soluble
from .spectra import spectrum_report
from .specs import GroupSpecError, build_group, parse_group_spec
from .verify import run_paper_verification, sweep_single_arcs

USAGE_ERROR = 2


def _dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _build_or_exit(spec_text: str, cache_dir: Optional[str]) -> FiniteGroup:
    try:
        return build_group(parse_group_spec(spec_text), cache_dir=cache_dir)
    except GroupSpecError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        raise SystemExit(USAGE_ERROR) from exc


def _skip_doc(spec_text: str, reason: str) -> str:
    return _dump_json(
        {"schema": SCHEMA, "spec": spec_text, "skipped": {"reason": reason}}
    )


def cmd_group(args) -> int:
    g = _build_or_exit(args.spec, args.cache_dir)
    if args.max_order is not None and g.order > args.max_order:
        sys.stdout.write(_skip_doc(args.spec, f"order {g.order} exceeds --max-order {args.max_order}"))
        return 0
    lset = engel.left_engel_set(g)
    try:
        engel.validate_left_engel_baer(g)
        fitting_valid = True
    except ValueError:
        fitting_valid = False
    doc = {
        "schema": SCHEMA,
        "spec": args.spec,
        "label": g.label,
        "order": g.order,
        "order_census": [[k, v] for k, v in sorted(g.order_census().items())],
        "left_engel": {
            "size": len(lset),
            "elements": [g.element_names[i] for i in sorted(lset)],
        },
        "fitting_valid": fitting_valid,
        "nilpotent": is_nilpotent(g),
        "soluble": is_soluble(g),
        "hypercenter_order": hypercenter(g).size,
    }
    sys.stdout.write(_dump_json(doc))
    return 0


def cmd_graph(args) -> int:
    g = _build_or_exit(args.spec, args.cache_dir)
    if args.max_order is not None and g.order > args.max_order:
        sys.stdout.write(_skip_doc(args.spec, f"order {g.order} exceeds --max-order {args.max_order}"))
        return 0
    try:
        if args.kind == "reduced":
            graph = engel.reduced_co_engel_graph(g)
        elif args.kind == "full":
            graph = engel.co_engel_graph(g)
        else:
            graph = engel.directed_engel_graph(g)
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    if args.format == "dot":
        sys.stdout.write(graph.to_dot(g.label))
    else:
        sys.stdout.write(_dump_json(graph.to_json_obj()))
    return 0


def cmd_analyze(args) -> int:
    g = _build_or_exit(args.spec, args.cache_dir)
    if args.max_order is not None and g.order > args.max_order:
        sys.stdout.write(_skip_doc(args.spec, f"order {g.order} exceeds --max-order {args.max_order}"))
        return 0
    try:
        graph = engel.reduced_co_engel_graph(g)
    except ValueError as exc:
        sys.stdout.write(
            _dump_json(
                {
                    "schema": SCHEMA,
                    "spec": args.spec,
                    "label": g.label,
                    "order": g.order,
                    "reduced_graph": {"skipped": {"reason": str(exc)}},
                }
            )
        )
        return 0
    shape = recognize_complete_multipartite(graph)
    if graph.n <= CLIQUE_VERTEX_LIMIT:
        clique: object = clique_number(graph)
    else:
        clique = {
            "skipped": {
                "reason": f"{graph.n} vertices exceeds clique limit {CLIQUE_VERTEX_LIMIT}"
            }
        }
    sc = topology.surface_class_of_reduced(g)
    doc = {
        "schema": SCHEMA,
        "spec": args.spec,
        "label": g.label,
        "order": g.order,
        "reduced_vertices": graph.n,
        "reduced_edges": graph.n_edges(),
        "shape": None if shape is None else list(shape.parts),
        "clique_number": clique,
        "planar": is_planar(graph),
        "surface": {
            "genus": sc.genus,
            "crosscap": sc.crosscap,
            "classification": sc.classification,
            "projective": sc.projective,
        },
        "spectrum": spectrum_report(graph).to_json_obj(),
        "zagreb": topology.zagreb_report(graph).to_json_obj(),
    }
    sys.stdout.write(_dump_json(doc))
    return 0


def _records_csv(records) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["claim_id", "group", "expected", "computed", "status"])
    for r in records:
        writer.writerow(
            [
                r.claim_id,
                r.group,
                json.dumps(r.expected, sort_keys=True, separators=(",", ":")),
                json.dumps(r.computed, sort_keys=True, separators=(",", ":")),
                r.status,
            ]
        )
    return buf.getvalue()


def cmd_verify_paper(args) -> int:
    families = None
    if args.families:
        families = [f.strip() for f in args.families.split(",") if f.strip()]
    records = run_paper_verification(families=families, max_order=args.max_order)
    if args.out == "json":
        sys.stdout.write(
            _dump_json(
                {"schema": SCHEMA, "records": [r.to_json_obj() for r in records]}
            )
        )
    else:
        sys.stdout.write(_records_csv(records))
    n_fail = sum(1 for r in records if r.status == "fail")
    print(
        f"{len(records)} records: "
        f"{sum(1 for r in records if r.status == 'pass')} pass, {n_fail} fail, "
        f"{sum(1 for r in records if r.status == 'skipped')} skipped",
        file=sys.stderr,
    )
    return 1 if n_fail else 0


def cmd_sweep_single_arcs(args) -> int:
    rows = sweep_single_arcs(args.max_order)
    sys.stdout.write(_dump_json({"schema": SCHEMA, "groups": rows}))
    return 0


def _make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="engel-lab",
        description="Engel-commutator laboratory for finite groups.",
    )
    parser.add_argument(
        "--cache-dir",
        default=cache_dir_from_env(),
        help="multiplication-table cache directory (default: $ENGEL_LAB_CACHE)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_group = sub.add_parser("group", help="order census, L(G), structure flags")
    p_group.add_argument("spec", help="group spec, e.g. D:24 or P:(C:3)x(D:6)")
    p_group.add_argument("--max-order", type=int, default=None)
    p_group.set_defaults(func=cmd_group)

    p_graph = sub.add_parser("graph", help="export a co-Engel or directed Engel graph")
    p_graph.add_argument("spec")
    kind = p_graph.add_mutually_exclusive_group(required=True)
    kind.add_argument("--reduced", dest="kind", action="store_const", const="reduced")
    kind.add_argument("--full", dest="kind", action="store_const", const="full")
    kind.add_argument("--directed", dest="kind", action="store_const", const="directed")
    fmt = p_graph.add_mutually_exclusive_group()
    fmt.add_argument("--dot", dest="format", action="store_const", const="dot")
    fmt.add_argument("--json", dest="format", action="store_const", const="json")
    p_graph.set_defaults(func=cmd_graph, format="json")
    p_graph.add_argument("--max-order", type=int, default=None)

    p_an = sub.add_parser("analyze", help="shape, clique, planarity, surface, spectra, Zagreb")
    p_an.add_argument("spec")
    p_an.add_argument("--max-order", type=int, default=None)
    p_an.set_defaults(func=cmd_analyze)

    p_ver = sub.add_parser("verify-paper", help="run the full verification sweep")
    p_ver.add_argument("--families", default=None,
                       help="comma-separated family filter (cyclic,dihedral,quaternion,frobenius,symmetric,alternating,product)")
    p_ver.add_argument("--max-order", type=int, default=None)
    p_ver.add_argument("--out", choices=("csv", "json"), default="csv")
    p_ver.set_defaults(func=cmd_verify_paper)

    p_sw = sub.add_parser("sweep-single-arcs",
                          help="survey single arcs outside L(G) over built-in soluble groups")
    p_sw.add_argument("--max-order", type=int, default=48)
    p_sw.set_defaults(func=cmd_sweep_single_arcs)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = _make_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
