"""Serre-style finite multigraphs.

A graph is a set of vertices and a set of edges, each edge carrying two
oriented versions swapped by an involution.  Loops and parallel edges are
allowed.  Edge ids are user-supplied strings; the direction given at
construction time is the *reference orientation* of the edge, and every
chain coordinate elsewhere in the package is relative to it.

Vertex and edge enumeration order is the order of first appearance in the
construction data.  That order is total, stable, and reproduced exactly by
re-parsing serialized output, which is what makes every downstream
enumeration deterministic.

Graphs are immutable after construction; all operations return new graphs.
"""

from .errors import GraphParseError

FORWARD = 1
BACKWARD = -1


class Graph:
    """Finite multigraph with a reference orientation per edge.

    An oriented edge is a pair ``(edge_id, FORWARD)`` or
    ``(edge_id, BACKWARD)``; the involution flips the sign.
    """

    __slots__ = ("vertices", "edges", "_ends", "_vindex", "_eindex", "_hash")

    def __init__(self, vertices, edges, ends):
        self.vertices = tuple(vertices)
        self.edges = tuple(edges)
        self._ends = dict(ends)  # edge id -> (source, target) of e-forward
        self._vindex = {v: i for i, v in enumerate(self.vertices)}
        self._eindex = {e: i for i, e in enumerate(self.edges)}
        if len(self._vindex) != len(self.vertices):
            raise ValueError("duplicate vertex id")
        if len(self._eindex) != len(self.edges):
            raise ValueError("duplicate edge id")
        for e in self.edges:
            s, t = self._ends[e]
            if s not in self._vindex or t not in self._vindex:
                raise ValueError(f"edge {e!r} references an unknown vertex")
        self._hash = hash((self.vertices, self.edges,
                           tuple(self._ends[e] for e in self.edges)))

    # -- basic accessors -------------------------------------------------

    def ends(self, e):
        """(source, target) of the reference orientation of edge e."""
        return self._ends[e]

    def source(self, oriented_edge):
        e, d = oriented_edge
        s, t = self._ends[e]
        return s if d == FORWARD else t

    def target(self, oriented_edge):
        e, d = oriented_edge
        s, t = self._ends[e]
        return t if d == FORWARD else s

    @staticmethod
    def flip(oriented_edge):
        e, d = oriented_edge
        return (e, -d)

    def is_loop(self, e):
        s, t = self._ends[e]
        return s == t

    def edge_index(self, e):
        if e not in self._eindex:
            raise ValueError(f"unknown edge id {e!r}")
        return self._eindex[e]

    def vertex_index(self, v):
        return self._vindex[v]

    def has_edge(self, e):
        return e in self._eindex

    def sort_edges(self, subset):
        """The given edge ids in canonical (enumeration) order."""
        return tuple(sorted(subset, key=self.edge_index))

    def incident(self, v):
        """Edges incident to v, loops listed once."""
        return [e for e in self.edges if v in self._ends[e]]

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.vertices == other.vertices and self.edges == other.edges
                and all(self._ends[e] == other._ends[e] for e in self.edges))

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Graph({len(self.vertices)} vertices, {len(self.edges)} edges)"


def from_edge_list(spec, vertices=()):
    """Build a graph from ``(edge_id, source, target)`` triples.

    Vertices may be pre-declared through ``vertices`` (for isolated ones
    or to pin the enumeration order); any endpoint not yet seen is
    appended in order of first appearance.  Duplicate edge ids are
    rejected.  An empty spec yields the empty graph.
    """
    vorder = []
    seen = set()
    for v in vertices:
        if v not in seen:
            seen.add(v)
            vorder.append(v)
    eorder = []
    ends = {}
    for e, s, t in spec:
        if not isinstance(e, str):
            raise ValueError(f"edge id must be a string, got {e!r}")
        if e in ends:
            raise ValueError(f"duplicate edge id {e!r}")
        for v in (s, t):
            if v not in seen:
                seen.add(v)
                vorder.append(v)
        eorder.append(e)
        ends[e] = (s, t)
    return Graph(vorder, eorder, ends)


def delete_edges(g, subset):
    """The spanning subgraph with the given edges removed."""
    drop = set(subset)
    for e in drop:
        g.edge_index(e)  # raises on unknown ids
    kept = [e for e in g.edges if e not in drop]
    return Graph(g.vertices, kept, {e: g.ends(e) for e in kept})


def contract_edge(g, e):
    """Identify the endpoints of a non-loop edge e and remove it.

    The merged vertex keeps the lower-ordered of the two ids.  All other
    edges survive, so parallel edges may become loops.  The first Betti
    number is preserved.
    """
    if g.is_loop(e):
        raise ValueError(f"cannot contract loop {e!r}")
    s, t = g.ends(e)
    keep, drop = (s, t) if g.vertex_index(s) < g.vertex_index(t) else (t, s)
    vmap = {v: (keep if v == drop else v) for v in g.vertices}
    kept = [f for f in g.edges if f != e]
    ends = {f: (vmap[g.ends(f)[0]], vmap[g.ends(f)[1]]) for f in kept}
    return Graph([v for v in g.vertices if v != drop], kept, ends)


def connected_components(g):
    """Partition of the vertex set into components (list of frozensets)."""
    parent = {v: v for v in g.vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for e in g.edges:
        s, t = g.ends(e)
        rs, rt = find(s), find(t)
        if rs != rt:
            parent[rs] = rt
    groups = {}
    for v in g.vertices:
        groups.setdefault(find(v), []).append(v)
    return [frozenset(vs) for vs in groups.values()]


def separating_edges(g):
    """All bridges of g, in canonical order.

    Loops and members of parallel pairs are never bridges; the test is the
    multigraph one (does removal disconnect the endpoints).
    """
    bridges = []
    for e in g.edges:
        if g.is_loop(e):
            continue
        s, t = g.ends(e)
        if any(g.ends(f) in ((s, t), (t, s)) for f in g.edges if f != e):
            continue  # parallel copy keeps the endpoints joined
        if not _connected_without(g, e):
            bridges.append(e)
    return tuple(bridges)


def _connected_without(g, e):
    """Are the endpoints of e still joined after deleting e?"""
    s, t = g.ends(e)
    adj = {}
    for f in g.edges:
        if f == e:
            continue
        a, b = g.ends(f)
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    stack = [s]
    seen = {s}
    while stack:
        v = stack.pop()
        if v == t:
            return True
        for w in adj.get(v, ()):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return False


def betti1(g):
    """First Betti number: |E| - |V| + number of components."""
    return len(g.edges) - len(g.vertices) + len(connected_components(g))


# -- text format --------------------------------------------------------
#
# One graph per file.  Lines are either
#     vertex <id>
#     edge <id> <source> <target>
# with '#' comments and blank lines ignored.


def parse_graph_text(text):
    vertices = []
    spec = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "vertex":
            if len(parts) != 2:
                raise GraphParseError("expected 'vertex <id>'", lineno)
            vertices.append(parts[1])
        elif parts[0] == "edge":
            if len(parts) != 4:
                raise GraphParseError("expected 'edge <id> <src> <tgt>'", lineno)
            spec.append((parts[1], parts[2], parts[3]))
        else:
            raise GraphParseError(f"unknown directive {parts[0]!r}", lineno)
    try:
        return from_edge_list(spec, vertices=vertices)
    except ValueError as exc:
        raise GraphParseError(str(exc)) from exc


def graph_to_text(g):
    lines = [f"vertex {v}" for v in g.vertices]
    lines += [f"edge {e} {g.ends(e)[0]} {g.ends(e)[1]}" for e in g.edges]
    return "\n".join(lines) + "\n"
