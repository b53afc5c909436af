"""
Multigraphs, cycle lattices, and the edge inner product
=======================================================

Build a few small multigraphs, compute their cycle spaces, and look at
the exact integer pairing that everything downstream relies on.
"""

from cographic import (Chain1, betti1, boundary, catalog_graph,
                       fundamental_cycle_basis, inner_product, is_cycle,
                       separating_edges)

# The bundled catalog covers trees, loops, banana graphs and doubled
# triangles; every graph is stored in the plain text format.
for name in ("TREE3", "LOOP1", "B3", "THETA2"):
    g = catalog_graph(name)
    print(f"{name}: |V|={len(g.vertices)} |E|={len(g.edges)} "
          f"b1={betti1(g)} bridges={list(separating_edges(g))}")

# A chain assigns an integer to every edge; its boundary counts flow
# imbalance at each vertex and cycles are the chains with zero boundary.
b3 = catalog_graph("B3")
c = Chain1({"e1": 2, "e2": 1, "e3": -3})
print("\nboundary of e1 alone:", boundary(b3, Chain1({"e1": 1})))
print("2*e1 + e2 - 3*e3 is a cycle:", is_cycle(b3, c))

# The fundamental cycles of the lowest-edge spanning forest form an
# integral basis; coordinates are read off the non-forest edges.
basis = fundamental_cycle_basis(b3)
print("forest:", basis.forest, " non-forest:", basis.coforest)
for b in basis.basis:
    print("  basis cycle:", b.to_json())
print("coordinates of the big cycle:", basis.coordinates(c))

# The edge pairing is the standard inner product in reference-orientation
# coordinates: positive definite, exact, integer-valued.
print("\n(c, c) =", inner_product(c, c))
