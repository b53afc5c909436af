"""Oriented circuits, concordance, and cycle decomposition.

A circuit is a connected bridge-free subgraph with first Betti number one
(a single closed walk without repeated vertices: a loop, a pair of
parallel edges, or a longer simple cycle).  Each circuit carries exactly
two coherent orientations; a circuit together with one of them is an
oriented circuit, and its class is the corresponding 0/+-1 cycle.

Every integer cycle decomposes as a nonnegative combination of oriented
circuits supported on it and concordant with its signs; the decomposition
implemented here is the greedy one (peel a lowest-edge-id directed cycle,
subtract as much of it as possible, repeat) and is deterministic though
not canonical: only the re-summed total is unique.
"""

from dataclasses import dataclass

from .chains import Chain1, canonical_form, is_cycle
from .errors import CapacityError
from .graph import FORWARD, BACKWARD, delete_edges
from .orientations import MAX_ORIENTATION_EDGES, Orientation, TotCycPair


@dataclass(frozen=True)
class OrientedCircuit:
    support: frozenset       # edge ids
    orientation: Orientation

    def reversal(self):
        return OrientedCircuit(self.support, self.orientation.reversed())

    def sort_key(self, g):
        edges = tuple(sorted(g.edge_index(e) for e in self.support))
        lowest = min(self.support, key=g.edge_index)
        return (edges, 0 if self.orientation.direction(lowest) == FORWARD else 1)

    def to_json(self, g):
        return [f"{e}{'+' if self.orientation.direction(e) == FORWARD else '-'}"
                for e in g.sort_edges(self.support)]

    def __repr__(self):
        body = ",".join(f"{e}{'+' if d == FORWARD else '-'}"
                        for e, d in sorted(self.orientation.items()))
        return f"OrientedCircuit({body})"


def circuit_class(gamma):
    """The 0/+-1 cycle of an oriented circuit."""
    return Chain1.from_oriented_edges(
        gamma.orientation.oriented_edge(e) for e in gamma.support)


def concordant(gamma, delta):
    """Do the two circuits agree in direction on every shared edge?"""
    for e in gamma.support & delta.support:
        if not gamma.orientation.agrees_with(delta.orientation, e):
            return False
    return True


def _circuit_supports(g):
    """All circuit edge sets: loops plus vertex-simple closed walks.

    Each non-loop circuit is anchored at its lowest edge, traversed in the
    reference direction, so every support is produced exactly once.  The
    walk direction also hands us one of the two coherent orientations.
    """
    incidence = {v: [] for v in g.vertices}
    for e in g.edges:
        s, t = g.ends(e)
        if s != t:
            incidence[s].append((e, t, FORWARD))
            incidence[t].append((e, s, BACKWARD))
    found = []
    for anchor in g.edges:
        if g.is_loop(anchor):
            found.append(((anchor,), {anchor: FORWARD}))
            continue
        a_idx = g.edge_index(anchor)
        start, cur = g.ends(anchor)

        def walk(vertex, visited, path):
            for e, other, direction in incidence[vertex]:
                if g.edge_index(e) <= a_idx:
                    continue
                if any(e == f for f, _ in path):
                    continue
                if other == start and path is not None:
                    edges = (anchor,) + tuple(f for f, _ in path) + (e,)
                    dirs = {anchor: FORWARD}
                    dirs.update({f: d for f, d in path})
                    dirs[e] = direction
                    found.append((edges, dirs))
                elif other not in visited:
                    walk(other, visited | {other}, path + ((e, direction),))

        walk(cur, {start, cur}, ())
    return found


def enumerate_oriented_circuits(g, max_edges=MAX_ORIENTATION_EDGES):
    """All oriented circuits of g in canonical order.

    Every support contributes its two coherent orientations, so the count
    is even; a loop contributes two single-edge circuits.
    """
    m = len(g.edges)
    if m > max_edges:
        raise CapacityError("circuit enumeration edge cap", m, max_edges)
    circuits = []
    for edges, dirs in _circuit_supports(g):
        gamma = OrientedCircuit(frozenset(edges), Orientation(dirs))
        circuits.append(gamma)
        circuits.append(gamma.reversal())
    circuits.sort(key=lambda c: c.sort_key(g))
    return circuits


def compatible_circuits(g, pair, max_edges=MAX_ORIENTATION_EDGES):
    """Circuits supported off ``pair.support`` and oriented by ``pair.phi``.

    Exactly one orientation per qualifying support survives, namely the
    restriction of phi; the result is nonempty as soon as the complement
    of the support has an edge.
    """
    rest = delete_edges(g, pair.support)
    out = []
    for edges, dirs in _circuit_supports(rest):
        restricted = pair.phi.restrict(edges)
        walk = Orientation(dirs)
        if restricted == walk or restricted == walk.reversed():
            out.append(OrientedCircuit(frozenset(edges), restricted))
    out.sort(key=lambda c: c.sort_key(g))
    return out


def covered_by_compatible_circuits(g, phi):
    """Debug oracle for total cyclicity: every edge on a compatible circuit.

    Slower than the strong-connectivity test but a genuinely different
    route; kept for cross-checks.
    """
    pair = TotCycPair(frozenset(), phi)
    covered = set()
    for gamma in compatible_circuits(g, pair):
        covered |= gamma.support
    return covered == set(g.edges)


def decompose_cycle(g, c):
    """Write the cycle c as a nonnegative sum of concordant circuit classes.

    Returns a list of (circuit, multiplicity) pairs in canonical circuit
    order whose weighted sum is exactly c.  Each circuit is compatible
    with the sign pattern of c and supported on it.  The particular
    decomposition is the deterministic greedy one; callers should rely
    only on the re-sum identity.
    """
    if not is_cycle(g, c):
        raise ValueError("decompose_cycle needs a cycle (zero boundary)")
    remaining = c
    counts = {}
    while not remaining.is_zero():
        gamma = _lowest_directed_cycle(g, remaining)
        m = min(abs(remaining.coeff(e)) for e in gamma.support)
        counts[gamma] = counts.get(gamma, 0) + m
        remaining = remaining - m * circuit_class(gamma)
    out = [(gamma, n) for gamma, n in counts.items()]
    out.sort(key=lambda item: item[0].sort_key(g))
    return out


def _lowest_directed_cycle(g, c):
    """Deterministic directed cycle in the sign-orientation of supp(c).

    Walk from the lowest-id support edge, always leaving along the
    lowest-id available edge; the first repeated vertex closes a simple
    directed cycle.  One exists because c has zero boundary.
    """
    support, phi, _ = canonical_form(g, c)
    outgoing = {}
    for e in support:
        oe = (e, phi[e])
        outgoing.setdefault(g.source(oe), []).append((g.edge_index(e), e, g.target(oe)))
    for v in outgoing:
        outgoing[v].sort()
    first = support[0]
    v = g.source((first, phi[first]))
    path = []          # (edge, vertex it leads to)
    seen = {v: 0}
    while True:
        _, e, w = outgoing[v][0]
        path.append((e, w))
        if w in seen:
            start = seen[w]
            cycle_edges = [e for e, _ in path[start:]]
            dirs = {e: phi[e] for e in cycle_edges}
            return OrientedCircuit(frozenset(cycle_edges), Orientation(dirs))
        seen[w] = len(path)
        v = w


def support_orientation_of(g, circuits):
    """The pair (T, phi) generated by pairwise-concordant circuits.

    T is the set of edges on no circuit; phi orients each covered edge the
    shared way.  Discordant input is rejected.  The result is a valid
    poset element and every input circuit is compatible with it.
    """
    circuits = list(circuits)
    for i, gamma in enumerate(circuits):
        for delta in circuits[i + 1:]:
            if not concordant(gamma, delta):
                raise ValueError("circuits are not pairwise concordant")
    dirs = {}
    for gamma in circuits:
        for e in gamma.support:
            dirs[e] = gamma.orientation.direction(e)
    t = frozenset(g.edges) - frozenset(dirs)
    return TotCycPair.create(g, t, Orientation(dirs))
