"""
Which graphs share a ring?
==========================

Contract bridges, then one edge of every separating pair; two graphs
have isomorphic rings exactly when the results have the same circuit
hypergraph.  Every cycle collapses to a single loop, so all cycles are
equivalent; a triple edge is not a square.
"""

from cographic import (catalog_graph, cyclically_equivalent, graph_to_text,
                       same_cographic_ring, three_edge_connectivization,
                       two_edge_cuts)

# Every cycle graph connectivizes to the one-loop graph.
for name in ("B2", "C3", "C5", "C7"):
    rep = three_edge_connectivization(catalog_graph(name))
    print(f"{name} connectivizes to {len(rep.vertices)} vertex / "
          f"{len(rep.edges)} edge")

# Separating pairs of a square: every pair of its edges.
print("\n2-edge cuts of C4:", two_edge_cuts(catalog_graph("C4")))

# Verdicts.
pairs = [("C5", "C7"), ("B2", "C6"), ("B3", "C4"), ("THETA2", "FIG-NH")]
print()
for a, b in pairs:
    same = same_cographic_ring(catalog_graph(a), catalog_graph(b))
    print(f"same ring {a} ~ {b}: {same}")

# The two doubled triangles are literally the same multigraph up to
# relabeling, so they are cyclically equivalent before any contraction.
print("\nTHETA2 and FIG-NH cyclically equivalent:",
      cyclically_equivalent(catalog_graph("THETA2"),
                            catalog_graph("FIG-NH")))

# The representative itself, in the text format.
print("\nconnectivization of TREE3:")
print(graph_to_text(three_edge_connectivization(catalog_graph("TREE3"))))
