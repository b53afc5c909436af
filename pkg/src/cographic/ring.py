"""The toric face ring of a graph, assembled from its fan.

The ring is never materialized element by element: monomials are indexed
by integer cycles, multiplication (sum when the two cycles share a cone,
zero otherwise) is decided by the sign test, and every invariant in reach
comes from the presentation data.  The presentation has one variable per
oriented circuit, a quadric for every discordant pair, and one
degree-bounded binomial ideal per maximal cone.
"""

from dataclasses import dataclass

from .chains import is_cycle
from .circuits import (circuit_class, compatible_circuits, concordant,
                       enumerate_oriented_circuits, support_orientation_of)
from .fan import Cone, build_fan, common_cone, cone_contains, FinitePoset
from .graph import betti1
from .orientations import Orientation, TotCycPair
from .semigroup import (hilbert_basis, subdiagram_volume,
                        toric_ideal_up_to_degree, BinomialIdeal)

DEFAULT_DEGREE_BOUND = 3


@dataclass
class RingPresentation:
    """Generators and relations of the ring, with degree-bounded binomials."""

    graph: object
    generators: list            # oriented circuits, canonical order
    discordance_quadrics: list  # (gamma, delta) pairs, gamma before delta
    per_chamber_binomials: list # (maximal TotCycPair, AffineSemigroup, BinomialIdeal)
    degree_bound: int

    def to_json(self):
        g = self.graph
        return {
            "generators": [gamma.to_json(g) for gamma in self.generators],
            "quadrics": [[a.to_json(g), b.to_json(g)]
                         for a, b in self.discordance_quadrics],
            "chambers": [{
                "label": pair.to_json(g),
                "variables": [gamma.to_json(g)
                              for gamma in compatible_circuits(g, pair)],
                "generators": [{"u": list(u), "v": list(v)}
                               for u, v in ideal.generators],
                "degree_bound": ideal.degree_bound,
            } for pair, _, ideal in self.per_chamber_binomials],
            "degree_bound": self.degree_bound,
        }


@dataclass
class RingReport:
    """The numeric invariants of the ring."""

    dimension: int
    embedded_dimension: int
    minimal_prime_labels: list   # maximal poset elements
    multiplicity: int
    normalization_components: list

    def to_json(self, g):
        # Gorenstein/seminormal/slc hold for every graph ring by general
        # theory; this tool does not certify them, so the report says so
        # instead of printing a computed verdict.
        asserted = "holds for every graph ring (general theory); not computed"
        return {
            "dimension": self.dimension,
            "embedded_dimension": self.embedded_dimension,
            "num_minimal_primes": len(self.minimal_prime_labels),
            "minimal_primes": [p.to_json(g) for p in self.minimal_prime_labels],
            "multiplicity": self.multiplicity,
            "normalization_components": [p.to_json(g) for p in
                                         self.normalization_components],
            "asserted_properties": {
                "gorenstein": asserted,
                "seminormal": asserted,
                "semi_log_canonical": asserted,
            },
        }


def present_ring(g, degree=DEFAULT_DEGREE_BOUND, max_edges=None):
    """Presentation of the ring: circuit variables, discordance quadrics,
    and per-maximal-chamber binomials up to the given degree.

    Only maximal elements carry binomial ideals; every other cone's ideal
    is a coordinate projection of a maximal one.
    """
    kwargs = {} if max_edges is None else {"max_edges": max_edges}
    circuits = enumerate_oriented_circuits(g, **kwargs)
    quadrics = [(a, b)
                for i, a in enumerate(circuits)
                for b in circuits[i + 1:]
                if not concordant(a, b)]
    fan = build_fan(g, **kwargs)
    chambers = []
    for cone in fan.chambers():
        s = hilbert_basis(g, cone.label)
        ideal = (toric_ideal_up_to_degree(s, degree) if s.hilbert_basis
                 else BinomialIdeal([], degree))
        chambers.append((cone.label, s, ideal))
    return RingPresentation(g, circuits, quadrics, chambers, degree)


def multiply_monomials(g, c, d):
    """Product of two monomials: their sum if some cone holds both cycles,
    otherwise None (the zero of the ring)."""
    if not is_cycle(g, c) or not is_cycle(g, d):
        raise ValueError("monomials are indexed by cycles")
    if common_cone(c, d):
        return c + d
    return None


class GradedPrime:
    """The graded prime of a cone: monomials of cycles outside it."""

    def __init__(self, g, pair):
        self.graph = g
        self.label = pair
        self._cone = Cone(g, pair)

    def contains(self, c):
        """Is the monomial of the cycle c a member?"""
        return not cone_contains(self._cone, c)

    def describe(self):
        t = ",".join(self.graph.sort_edges(self.label.support))
        return f"(monomials of cycles outside the cone of (T={{{t}}}, phi))"

    def __repr__(self):
        return f"GradedPrime({self.label!r})"


def graded_prime_of(g, pair):
    """Symbolic descriptor of the graded prime attached to a poset element.

    The minimum element yields the graded maximal ideal (every nonzero
    cycle's monomial is a member); membership is antitone in the poset.
    """
    return GradedPrime(g, pair)


def ring_report(g, max_edges=None):
    """Dimension, embedded dimension, minimal primes, and multiplicity."""
    kwargs = {} if max_edges is None else {"max_edges": max_edges}
    circuits = enumerate_oriented_circuits(g, **kwargs)
    fan = build_fan(g, **kwargs)
    maximal = fan.poset.maximal_elements()
    multiplicity = 0
    for pair in maximal:
        multiplicity += subdiagram_volume(hilbert_basis(g, pair))
    return RingReport(
        dimension=betti1(g),
        embedded_dimension=len(circuits),
        minimal_prime_labels=maximal,
        multiplicity=multiplicity,
        normalization_components=maximal,
    )


# -- strata ---------------------------------------------------------------


class StrataPoset:
    """Scheme strata: sums of minimal primes, ordered by reverse inclusion.

    Every sum of graded primes is again a graded prime, the one attached
    to the intersection of the cones; the assignment label -> prime is an
    isomorphism onto the strata, so the elements here are the poset labels
    and the order is computed through cone containment of extremal rays,
    not read off the label order.
    """

    def __init__(self, graph, poset):
        self.graph = graph
        self.poset = poset
        self._rays = {}

    def elements(self):
        return list(self.poset)

    def prime(self, pair):
        return GradedPrime(self.graph, pair)

    def rays(self, pair):
        cached = self._rays.get(pair)
        if cached is None:
            cached = [circuit_class(gamma)
                      for gamma in compatible_circuits(self.graph, pair)]
            self._rays[pair] = cached
        return cached

    def leq(self, p, q):
        """Stratum order: prime(p) >= prime(q) as ideals.

        Containment of graded primes is decided on the cones: the prime of
        a cone contains the prime of a larger one, and the cone of p sits
        inside the cone of q exactly when every extremal ray class of p
        lies in the cone of q.
        """
        cone_q = Cone(self.graph, q)
        return all(cone_contains(cone_q, ray) for ray in self.rays(p))

    def finite_poset(self):
        return FinitePoset(self.elements(), self.leq)


def strata_poset(g, max_edges=None):
    kwargs = {} if max_edges is None else {"max_edges": max_edges}
    fan = build_fan(g, **kwargs)
    return StrataPoset(g, fan.poset)


def sum_of_primes(g, pairs):
    """The label whose prime is the sum of the given labels' primes.

    The sum of the primes of several cones is the prime of their
    intersection; the intersection is computed by merging sign conditions
    and canonicalizing through the circuits that survive them.
    """
    pairs = list(pairs)
    if not pairs:
        raise ValueError("need at least one prime")
    support = set()
    for p in pairs:
        support |= p.support
    directions = {}
    for e in g.edges:
        if e in support:
            continue
        dirs = {p.phi.direction(e) for p in pairs}
        if len(dirs) == 1:
            directions[e] = dirs.pop()
        else:
            support.add(e)
    pair = TotCycPair(frozenset(support), Orientation(directions))
    return support_orientation_of(g, compatible_circuits(g, pair))
