"""Command line entry points for verification campaigns and data export.

``basilica verify <campaign>`` runs one campaign and writes its report;
the exit code is 0 when the report is certified, 1 when a violation was
found, and 2 when a budgeted search ended inconclusive.  ``basilica
export <what>`` serializes stock objects for external tooling.
"""

import argparse
import json
import os
import sys

from basilica import certificates
from basilica.cubes import CubeVertex, bfs_sublevel
from basilica.diagrams import identity_diagram
from basilica.graphs import AddressedGraph, make_g0, make_j, make_o


def _stock_graph(name: str) -> AddressedGraph:
    if name == "g0":
        return make_g0()
    if name.startswith("j") and name[1:].isdigit():
        return make_j(int(name[1:]))
    if name.startswith("o") and name[1:].isdigit():
        return make_o(int(name[1:]))
    raise SystemExit(f"unknown stock graph {name!r} (use g0, jN, or oN)")


def _emit(payload: dict, out: str, fmt: str) -> None:
    if fmt == "json":
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    else:
        raise SystemExit(f"unknown format {fmt!r}")
    if out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)


def _verify(args: argparse.Namespace) -> int:
    campaign = args.campaign
    if campaign == "key-lemma":
        report = certificates.key_lemma_report(
            args.n, slack=args.slack, node_budget=args.budget
        )
    elif campaign == "quarter-spaces":
        report = certificates.quarter_spaces_report(args.n)
    elif campaign == "detour-path":
        report = certificates.detour_report()
    elif campaign == "nerve":
        report = certificates.nerve_report(args.n)
    elif campaign == "descending-links":
        report = certificates.descending_links_report(node_budget=args.budget)
    elif campaign == "diagram-algebra":
        report = certificates.diagram_algebra_report(
            seed=args.seed, count=args.count
        )
    else:
        raise SystemExit(f"unknown campaign {campaign!r}")
    _emit(report, args.out, args.format)
    if report["certified"]:
        return 0
    if not report.get("exhaustive", True) and not report.get("violations"):
        return 2
    return 1


def _export(args: argparse.Namespace) -> int:
    if args.what == "graph":
        payload = _stock_graph(args.name).to_json_obj()
    elif args.what == "diagram":
        from basilica.cubes import make_fn

        if args.name == "identity":
            payload = identity_diagram(_stock_graph(args.base)).to_json_obj()
        elif args.name == "carrier":
            payload = make_fn(args.n).to_json_obj()
        else:
            raise SystemExit(f"unknown diagram {args.name!r} (use identity or carrier)")
    elif args.what == "bfs":
        start = CubeVertex(identity_diagram(_stock_graph(args.base)))
        cap = args.rank_cap if args.rank_cap is not None else start.rank + 2
        result = bfs_sublevel(start, rank_cap=cap, node_budget=args.budget)
        from collections import Counter

        payload = {
            "base": args.base,
            "rank_cap": cap,
            "exhaustive": result.exhaustive,
            "classes": len(result.vertices),
            "rank_histogram": {str(k): v for k, v in sorted(Counter(result.ranks()).items())},
        }
    elif args.what == "complex":
        from basilica.cubes import descending_link

        start = CubeVertex(identity_diagram(_stock_graph(args.base)))
        link = descending_link(start)
        payload = link.to_json_obj()
        payload["betti"] = link.betti_numbers(up_to=1)
    else:
        raise SystemExit(f"unknown export target {args.what!r}")
    _emit(payload, args.out, args.format)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="basilica",
        description="verification campaigns for the rearrangement groupoid of the Basilica",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    default_out = os.environ.get("BASILICA_OUT", "-")

    verify = sub.add_parser("verify", help="run a verification campaign")
    verify.add_argument(
        "campaign",
        choices=[
            "key-lemma",
            "quarter-spaces",
            "detour-path",
            "nerve",
            "descending-links",
            "diagram-algebra",
        ],
    )
    verify.add_argument("--n", type=int, default=0, help="family index")
    verify.add_argument("--slack", type=int, default=2, help="edge slack above the floor")
    verify.add_argument("--budget", type=int, default=20000, help="node budget for searches")
    verify.add_argument("--seed", type=int, default=20240901, help="random seed")
    verify.add_argument("--count", type=int, default=1000, help="random trial count")
    verify.add_argument("--out", default=default_out, help="output path, - for stdout")
    verify.add_argument("--format", default="json", choices=["json"])
    verify.set_defaults(func=_verify)

    export = sub.add_parser("export", help="serialize stock objects")
    export.add_argument("what", choices=["graph", "diagram", "bfs", "complex"])
    export.add_argument("--name", default="g0", help="stock graph or diagram name")
    export.add_argument("--base", default="g0", help="base graph for diagrams and searches")
    export.add_argument("--n", type=int, default=0, help="family index")
    export.add_argument("--rank-cap", type=int, default=None, help="rank cap for sublevel sweeps")
    export.add_argument("--budget", type=int, default=500, help="node budget for searches")
    export.add_argument("--out", default=default_out, help="output path, - for stdout")
    export.add_argument("--format", default="json", choices=["json"])
    export.set_defaults(func=_export)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
