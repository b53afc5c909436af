"""Bundled example graphs, stored in the text format.

The multigraphs here exercise every corner the package cares about:
trees, loops, banana graphs (two vertices with parallel edges), cycles,
and the doubled triangle under two different reference orientations.
Parsing them through the public text format keeps the parser honest.
"""

from .graph import parse_graph_text

CATALOG = {
    "TREE3": (
        "# path on three vertices: both edges separate\n"
        "edge e1 v1 v2\n"
        "edge e2 v2 v3\n"
    ),
    "LOOP1": (
        "# a single vertex with a loop\n"
        "edge e1 v1 v1\n"
    ),
    "B2": (
        "# two vertices joined by a double edge\n"
        "edge e1 v1 v2\n"
        "edge e2 v1 v2\n"
    ),
    "B3": (
        "# two vertices joined by a triple edge\n"
        "edge e1 v1 v2\n"
        "edge e2 v1 v2\n"
        "edge e3 v1 v2\n"
    ),
    "C3": (
        "edge e1 v1 v2\n"
        "edge e2 v2 v3\n"
        "edge e3 v3 v1\n"
    ),
    "C4": (
        "edge e1 v1 v2\n"
        "edge e2 v2 v3\n"
        "edge e3 v3 v4\n"
        "edge e4 v4 v1\n"
    ),
    "C5": (
        "edge e1 v1 v2\n"
        "edge e2 v2 v3\n"
        "edge e3 v3 v4\n"
        "edge e4 v4 v5\n"
        "edge e5 v5 v1\n"
    ),
    "C6": (
        "edge e1 v1 v2\n"
        "edge e2 v2 v3\n"
        "edge e3 v3 v4\n"
        "edge e4 v4 v5\n"
        "edge e5 v5 v6\n"
        "edge e6 v6 v1\n"
    ),
    "C7": (
        "edge e1 v1 v2\n"
        "edge e2 v2 v3\n"
        "edge e3 v3 v4\n"
        "edge e4 v4 v5\n"
        "edge e5 v5 v6\n"
        "edge e6 v6 v7\n"
        "edge e7 v7 v1\n"
    ),
    # Doubled triangle whose reference orientation runs the two copies of
    # each side the same way (left -> top -> right -> left); the reference
    # orientation itself is totally cyclic.  Edge id e<j><i> is copy i of
    # side j.
    "THETA2": (
        "vertex top\n"
        "vertex left\n"
        "vertex right\n"
        "edge e10 left top\n"
        "edge e11 left top\n"
        "edge e20 top right\n"
        "edge e21 top right\n"
        "edge e30 right left\n"
        "edge e31 right left\n"
    ),
    # Two vertices, five parallel edges, reference orientation two up and
    # three down (again totally cyclic as given).
    "FIG-NG": (
        "edge e1 v1 v2\n"
        "edge e2 v1 v2\n"
        "edge e3 v2 v1\n"
        "edge e4 v2 v1\n"
        "edge e5 v2 v1\n"
    ),
    # The same doubled triangle as THETA2 but with the reference
    # orientation running each side's two copies in opposite directions;
    # still totally cyclic as given.
    "FIG-NH": (
        "vertex top\n"
        "vertex left\n"
        "vertex right\n"
        "edge e1 left top\n"
        "edge e2 top right\n"
        "edge e3 right left\n"
        "edge e4 top left\n"
        "edge e5 left right\n"
        "edge e6 right top\n"
    ),
}


def catalog_names():
    return list(CATALOG)


def catalog_graph(name):
    if name not in CATALOG:
        raise KeyError(f"unknown catalog graph {name!r}")
    return parse_graph_text(CATALOG[name])
