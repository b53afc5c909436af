"""Integer 1-chains, the boundary map, and the edge inner product.

A 1-chain stores one integer per edge, the coefficient of the reference
orientation; the reversed orientation counts with the opposite sign.
Cycles are the chains with zero boundary, and the set of cycles is the
first integral homology of the graph.

The inner product makes distinct edges orthonormal: it is the standard
integer scalar product in reference-orientation coordinates, hence
positive definite.
"""

from .graph import FORWARD, BACKWARD


class Chain1:
    """Immutable integer 1-chain, stored sparsely (zero entries dropped)."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs=()):
        items = coeffs.items() if isinstance(coeffs, dict) else coeffs
        self._c = {e: int(n) for e, n in items if n != 0}
        self._hash = hash(frozenset(self._c.items()))

    @classmethod
    def from_oriented_edges(cls, oriented_edges):
        """Sum of oriented edges, e.g. [("a", FORWARD), ("b", BACKWARD)]."""
        acc = {}
        for e, d in oriented_edges:
            acc[e] = acc.get(e, 0) + d
        return cls(acc)

    def coeff(self, e):
        return self._c.get(e, 0)

    def support(self):
        return frozenset(self._c)

    def items(self):
        return self._c.items()

    def l1(self):
        return sum(abs(n) for n in self._c.values())

    def is_zero(self):
        return not self._c

    def __add__(self, other):
        acc = dict(self._c)
        for e, n in other._c.items():
            acc[e] = acc.get(e, 0) + n
        return Chain1(acc)

    def __sub__(self, other):
        acc = dict(self._c)
        for e, n in other._c.items():
            acc[e] = acc.get(e, 0) - n
        return Chain1(acc)

    def __neg__(self):
        return Chain1({e: -n for e, n in self._c.items()})

    def __mul__(self, k):
        return Chain1({e: k * n for e, n in self._c.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Chain1):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return self._hash

    def __repr__(self):
        if not self._c:
            return "Chain1(0)"
        body = " ".join(f"{'+' if n > 0 else '-'}{abs(n) if abs(n) != 1 else ''}{e}"
                        for e, n in sorted(self._c.items()))
        return f"Chain1({body})"

    def to_json(self):
        return {e: n for e, n in sorted(self._c.items())}

    @classmethod
    def from_json(cls, obj):
        return cls(obj)


ZERO = Chain1()


def boundary(g, c):
    """Boundary 0-chain of c: each oriented edge maps to target - source.

    Returned as a dict vertex -> integer with zero entries dropped.
    """
    out = {}
    for e, n in c.items():
        s, t = g.ends(e)
        out[t] = out.get(t, 0) + n
        out[s] = out.get(s, 0) - n
    return {v: n for v, n in out.items() if n != 0}


def is_cycle(g, c):
    return not boundary(g, c)


def inner_product(c, d):
    """Edge-orthonormal pairing of two chains (exact integer)."""
    a, b = (c, d) if len(c._c) <= len(d._c) else (d, c)
    return sum(n * b.coeff(e) for e, n in a.items())


class CycleBasis:
    """Fundamental cycles of a spanning forest.

    One basis cycle per non-forest edge; that edge carries coefficient +1
    and appears in no other basis element, so the basis matrix in
    non-forest coordinates is the identity and the basis spans the cycle
    lattice over the integers.
    """

    __slots__ = ("graph", "forest", "coforest", "basis")

    def __init__(self, graph, forest, coforest, basis):
        self.graph = graph
        self.forest = forest        # edge ids, canonical order
        self.coforest = coforest    # edge ids, canonical order
        self.basis = basis          # list of Chain1, parallel to coforest

    def __len__(self):
        return len(self.basis)

    def coordinates(self, c):
        """Coordinates of a cycle in this basis (read off the coforest)."""
        return tuple(c.coeff(f) for f in self.coforest)

    def chain(self, coords):
        """Inverse of :meth:`coordinates`."""
        acc = ZERO
        for a, b in zip(coords, self.basis):
            if a:
                acc = acc + a * b
        return acc


def fundamental_cycle_basis(g):
    """Cycle basis from the greedy lowest-edge-id spanning forest.

    A loop never enters the forest; its fundamental cycle is the loop
    itself with coefficient +1.
    """
    parent = {v: v for v in g.vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    forest = []
    coforest = []
    adj = {v: [] for v in g.vertices}  # forest adjacency: vertex -> (vertex, edge, dir)
    for e in g.edges:
        s, t = g.ends(e)
        rs, rt = find(s), find(t)
        if rs != rt:
            parent[rs] = rt
            forest.append(e)
            adj[s].append((t, e, FORWARD))
            adj[t].append((s, e, BACKWARD))
        else:
            coforest.append(e)

    def forest_path(a, b):
        """Oriented forest edges from a to b (BFS, unique path)."""
        if a == b:
            return []
        prev = {a: None}
        queue = [a]
        while queue:
            v = queue.pop(0)
            for w, e, d in adj[v]:
                if w not in prev:
                    prev[w] = (v, e, d)
                    if w == b:
                        queue = []
                        break
                    queue.append(w)
        path = []
        v = b
        while prev[v] is not None:
            u, e, d = prev[v]
            path.append((e, d))
            v = u
        path.reverse()
        return path

    basis = []
    for f in coforest:
        s, t = g.ends(f)
        oriented = [(f, FORWARD)] + forest_path(t, s)
        basis.append(Chain1.from_oriented_edges(oriented))
    return CycleBasis(g, tuple(forest), tuple(coforest), basis)


def canonical_form(g, c):
    """Support, sign orientation, and positive multiplicities of a chain.

    Splits ``c`` into the edge set where it is nonzero, the orientation
    given by its signs, and the absolute values, so that summing
    multiplicity times oriented edge reconstructs ``c`` exactly.
    """
    support = g.sort_edges(c.support())
    phi = {}
    mult = {}
    for e in support:
        n = c.coeff(e)
        phi[e] = FORWARD if n > 0 else BACKWARD
        mult[e] = abs(n)
    return support, phi, mult
