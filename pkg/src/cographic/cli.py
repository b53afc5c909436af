"""Command-line front end.

Machine-readable JSON goes to stdout with sorted keys and compact
separators, so identical inputs produce byte-identical reports; a short
human summary goes to stderr.  Exit codes: 0 success, 1 usage error or
failed verification, 2 graph parse error, 3 capacity error.
"""

import argparse
import json
import os
import sys

from . import catalog
from .errors import CapacityError, GraphParseError
from .fan import build_fan
from .graph import betti1, parse_graph_text, separating_edges
from .invariants import check_iso_truncated
from .orientations import enumerate_tco
from .circuits import enumerate_oriented_circuits
from .ring import present_ring, ring_report
from .semigroup import hilbert_basis, semigroup_report
from .torelli import same_cographic_ring, three_edge_connectivization

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_CAPACITY = 3


def _load_graph(arg):
    """A path to a graph file, or the name of a bundled example."""
    if os.path.exists(arg):
        with open(arg) as fh:
            return parse_graph_text(fh.read())
    if arg in catalog.CATALOG:
        return catalog.catalog_graph(arg)
    raise GraphParseError(f"no such file or bundled example: {arg}")


def _emit(obj, summary=None):
    print(json.dumps(obj, sort_keys=True, separators=(",", ":")))
    if summary:
        print(summary, file=sys.stderr)


def _graph_summary(g):
    return {
        "vertices": [str(v) for v in g.vertices],
        "edges": [{"id": e, "source": str(g.ends(e)[0]),
                   "target": str(g.ends(e)[1])} for e in g.edges],
        "betti1": betti1(g),
        "separating_edges": list(separating_edges(g)),
    }


def cmd_analyze(args):
    g = _load_graph(args.graph)
    fan = build_fan(g, max_edges=args.max_poset_edges)
    poset = fan.poset
    maximal = poset.maximal_elements()
    presentation = present_ring(g, degree=args.degree,
                                max_edges=args.max_poset_edges)
    report = ring_report(g, max_edges=args.max_poset_edges)
    chambers = [semigroup_report(hilbert_basis(g, pair), degree=args.degree,
                                 horizon=args.hs_horizon)
                for pair in maximal]
    out = {
        "graph": _graph_summary(g),
        "orientation_poset": {
            "size": len(poset),
            "num_maximal": len(maximal),
            "minimum": poset.minimum.to_json(g),
        },
        "fan": {
            "num_cones": len(fan),
            "num_chambers": len(maximal),
            "dimension": betti1(g),
        },
        "ring": report.to_json(g),
        "presentation": presentation.to_json(),
        "chambers": chambers,
    }
    _emit(out, f"analyze: |V|={len(g.vertices)} |E|={len(g.edges)} "
               f"b1={betti1(g)} poset={len(poset)} chambers={len(maximal)} "
               f"multiplicity={report.multiplicity}")
    return EXIT_OK


def cmd_orientations(args):
    g = _load_graph(args.graph)
    tcos = enumerate_tco(g, max_edges=args.max_orientation_edges)
    _emit({"graph": _graph_summary(g),
           "totally_cyclic_orientations": [phi.to_json() for phi in tcos]},
          f"orientations: {len(tcos)} totally cyclic")
    return EXIT_OK


def cmd_circuits(args):
    g = _load_graph(args.graph)
    circuits = enumerate_oriented_circuits(g, max_edges=args.max_orientation_edges)
    _emit({"graph": _graph_summary(g),
           "oriented_circuits": [c.to_json(g) for c in circuits]},
          f"circuits: {len(circuits)} oriented")
    return EXIT_OK


def cmd_fan(args):
    g = _load_graph(args.graph)
    fan = build_fan(g, max_edges=args.max_poset_edges)
    _emit({"graph": _graph_summary(g),
           "num_cones": len(fan), "num_chambers": len(fan.chambers()),
           "cones": fan.to_json()},
          f"fan: {len(fan)} cones, {len(fan.chambers())} chambers")
    return EXIT_OK


def cmd_ring(args):
    g = _load_graph(args.graph)
    report = ring_report(g, max_edges=args.max_poset_edges)
    presentation = present_ring(g, degree=args.degree,
                                max_edges=args.max_poset_edges)
    _emit({"graph": _graph_summary(g),
           "ring": report.to_json(g),
           "presentation": presentation.to_json()},
          f"ring: dim={report.dimension} embdim={report.embedded_dimension} "
          f"minimal primes={len(report.minimal_prime_labels)} "
          f"multiplicity={report.multiplicity}")
    return EXIT_OK


def cmd_compare(args):
    g = _load_graph(args.graph)
    h = _load_graph(args.other)
    rep_g = three_edge_connectivization(g, max_edges=args.max_poset_edges)
    rep_h = three_edge_connectivization(h, max_edges=args.max_poset_edges)
    same = same_cographic_ring(g, h, max_edges=args.max_poset_edges)
    _emit({"same_ring": same,
           "g_class_size": len(rep_g.edges),
           "h_class_size": len(rep_h.edges)},
          f"compare: same ring = {same}")
    return EXIT_OK if same else EXIT_USAGE


def cmd_verify_invariant_ring(args):
    g = _load_graph(args.graph)
    ok = check_iso_truncated(g, args.degree)
    _emit({"isomorphic_up_to_degree": args.degree, "passed": ok},
          f"verify-invariant-ring: degree {args.degree} "
          f"{'passed' if ok else 'FAILED'}")
    return EXIT_OK if ok else EXIT_USAGE


def cmd_examples(args):
    _emit(dict(catalog.CATALOG),
          "examples: " + " ".join(catalog.catalog_names()))
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="cographic",
        description="Combinatorics of the cographic fan and its toric face ring.")
    parser.add_argument("--degree", type=int, default=3,
                        help="degree bound for binomial ideals (default 3)")
    parser.add_argument("--hs-horizon", type=int, default=None,
                        help="Hilbert-Samuel horizon (default: dimension + 6)")
    parser.add_argument("--max-poset-edges", type=int, default=14,
                        help="edge cap for poset/fan enumeration (default 14)")
    parser.add_argument("--max-orientation-edges", type=int, default=20,
                        help="edge cap for orientation enumeration (default 20)")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, fn, help_text in [
        ("analyze", cmd_analyze, "full report: poset, fan, ring, chambers"),
        ("orientations", cmd_orientations, "totally cyclic orientations"),
        ("circuits", cmd_circuits, "oriented circuits"),
        ("fan", cmd_fan, "all cones with rays and facets"),
        ("ring", cmd_ring, "ring invariants and presentation"),
    ]:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("graph", help="graph file or bundled example name")
        p.set_defaults(fn=fn)

    p = sub.add_parser("compare", help="decide whether two graphs share a ring")
    p.add_argument("graph")
    p.add_argument("other")
    p.set_defaults(fn=cmd_compare)

    p = sub.add_parser("verify-invariant-ring",
                       help="truncated invariant-subring verification")
    p.add_argument("graph")
    p.set_defaults(fn=cmd_verify_invariant_ring)

    p = sub.add_parser("examples", help="print the bundled example catalog")
    p.set_defaults(fn=cmd_examples)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.fn(args)
    except GraphParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
