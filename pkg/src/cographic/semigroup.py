"""Affine semigroups of cone lattice points, and their ring invariants.

For a cone labeled (T, phi), the lattice points form a positive normal
affine semigroup whose Hilbert basis is exactly the set of compatible
circuit classes.  This module computes, per cone: the basis in both edge
and cycle-basis coordinates, lattice spanning (Smith form), unimodularity
(equality of all maximal minors up to sign), a degree-bounded slice of the
toric ideal of relations, the (Q-)Gorenstein test from facet normals, and
the multiplicity two independent ways: subdiagram volume of the convex
hull, and the leading finite difference of the Hilbert-Samuel function.

Everything is exact; hull computations run over the rationals with
integer outputs.  The instances are tiny (cones of dimension at most a
handful with about a dozen generators), so facet enumeration simply tests
all d-subsets of generators for supporting-hyperplane status; correctness
beats asymptotics here.
"""

import heapq
import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .chains import Chain1, fundamental_cycle_basis, is_cycle
from .circuits import circuit_class, compatible_circuits
from .errors import CapacityError
from .fan import Cone, cone_contains, facets
from .graph import FORWARD, delete_edges
from .linalg import det_int, hyperplane_through, smith_invariant_factors, solve_rational


@dataclass
class AffineSemigroup:
    """Lattice points of one cone, presented by its Hilbert basis."""

    cone: Cone
    hilbert_basis: list        # Chain1 circuit classes, canonical order
    lattice_rank: int          # dimension of the cone's span
    cycle_basis: object        # CycleBasis of the complement of the support

    @property
    def graph(self):
        return self.cone.graph

    def coordinates(self, c):
        return self.cycle_basis.coordinates(c)

    def chain(self, coords):
        return self.cycle_basis.chain(coords)

    def basis_matrix(self):
        """Rows indexed by lattice coordinates, columns by basis elements."""
        cols = [self.coordinates(c) for c in self.hilbert_basis]
        return [tuple(col[i] for col in cols) for i in range(self.lattice_rank)]

    def contains(self, coords):
        """Membership of a lattice coordinate vector in the cone."""
        return cone_contains(self.cone, self.chain(coords))


def hilbert_basis(g, pair):
    """The semigroup of the cone labeled by ``pair``.

    The Hilbert basis is the set of compatible circuit classes; the
    lattice is spanned by the fundamental cycles off the support.
    """
    basis = [circuit_class(gamma) for gamma in compatible_circuits(g, pair)]
    rest = delete_edges(g, pair.support)
    cycle_basis = fundamental_cycle_basis(rest)
    return AffineSemigroup(Cone(g, pair), basis, len(cycle_basis), cycle_basis)


def spans_lattice(s):
    """Do the basis elements span the full cycle lattice over the integers?

    Checked by Smith normal form: full rank with all invariant factors 1.
    Expected to hold for every cone; exposed as a checkable assertion.
    """
    if s.lattice_rank == 0:
        return True
    rows = [s.coordinates(c) for c in s.hilbert_basis]
    factors = smith_invariant_factors(rows)
    return len(factors) == s.lattice_rank and all(f == 1 for f in factors)


def is_unimodular(s):
    """Do all nonzero maximal minors of the basis matrix share one
    absolute value?

    On failure returns two witnesses ((columns, minor), (columns, minor))
    with different absolute values; column indices refer to the canonical
    Hilbert basis order.
    """
    d = s.lattice_rank
    n = len(s.hilbert_basis)
    if d == 0 or n < d:
        return True, None
    matrix = s.basis_matrix()
    first = None
    for cols in itertools.combinations(range(n), d):
        minor = det_int([[matrix[i][j] for j in cols] for i in range(d)])
        if minor == 0:
            continue
        if first is None:
            first = (cols, minor)
        elif abs(minor) != abs(first[1]):
            return False, (first, (cols, minor))
    return True, None


@dataclass
class BinomialIdeal:
    """Degree-bounded binomial relations between Hilbert basis elements.

    Each generator is a pair (u, v) of disjoint-support exponent vectors
    over the canonical Hilbert basis with equal weighted sums; jointly the
    entries are coprime.  No minimality is claimed.
    """

    generators: list   # [(u, v)] with u >= v lexicographically
    degree_bound: int

    def __len__(self):
        return len(self.generators)


def toric_ideal_up_to_degree(s, degree):
    """All primitive disjoint-support binomials of total degree <= degree.

    Exponent vectors are grouped by their weighted sum over the Hilbert
    basis; within a group, every unordered pair with disjoint supports and
    coprime joint entries yields one generator.
    """
    if degree < 1:
        raise ValueError("degree bound must be at least 1")
    n = len(s.hilbert_basis)
    if n == 0:
        return BinomialIdeal([], degree)
    coords = [s.coordinates(c) for c in s.hilbert_basis]
    d = s.lattice_rank

    by_image = {}
    for u in _exponents_up_to(n, degree):
        image = tuple(sum(ui * coords[i][k] for i, ui in enumerate(u))
                      for k in range(d))
        by_image.setdefault(image, []).append(u)

    generators = []
    for group in by_image.values():
        for u, v in itertools.combinations(group, 2):
            if any(ui and vi for ui, vi in zip(u, v)):
                continue  # supports overlap
            joint = 0
            for x in itertools.chain(u, v):
                joint = gcd(joint, x)
            if joint != 1:
                continue
            generators.append((u, v) if u >= v else (v, u))
    generators.sort()
    return BinomialIdeal(generators, degree)


def _exponents_up_to(n, degree):
    """All vectors in N^n with coordinate sum between 1 and degree."""
    def rec(prefix, remaining, slots):
        if slots == 0:
            if sum(prefix) >= 1:
                yield tuple(prefix)
            return
        for k in range(remaining + 1):
            yield from rec(prefix + [k], remaining - k, slots - 1)

    yield from rec([], degree, n)


def is_homogeneous(ideal):
    """Every generator balances its total degrees."""
    return all(sum(u) == sum(v) for u, v in ideal.generators)


def q_gorenstein(s):
    """Facet-normal test for the (Q-)Gorenstein property of the cone ring.

    Solves normal(m) = 1 over the rationals for all primitive facet
    normals.  The normals of a full-dimensional pointed cone span the dual
    space, so a solution is unique when it exists; the ring is Gorenstein
    in the integral sense when that solution is a lattice point.

    Returns (q_gorenstein, gorenstein_integral, m) where m is the rational
    cycle realizing the pairings, as a dict edge -> Fraction, or None.
    """
    d = s.lattice_rank
    if d == 0:
        return True, True, {}
    normals = [normal for _, normal in facets(s.cone)]
    solution = solve_rational(normals, [1] * len(normals))
    if solution is None:
        return False, False, None
    integral = all(x.denominator == 1 for x in solution)
    m = {}
    for coeff, basis_chain in zip(solution, s.cycle_basis.basis):
        for e, n in basis_chain.items():
            m[e] = m.get(e, Fraction(0)) + coeff * n
    m = {e: x for e, x in m.items() if x != 0}
    return True, integral, m


# -- multiplicity, route one: subdiagram volume of the hull --------------


def subdiagram_volume(s):
    """Normalized volume between the origin and the hull of the nonzero
    semigroup elements.

    The region is the union of the pyramids from the origin over the
    bounded facets of hull(Hilbert basis) + cone; its normalized volume
    (unimodular simplex = 1) is the sum over those facets of the absolute
    determinants of a fan triangulation.  Exact integer output.
    """
    d = s.lattice_rank
    if d == 0:
        return 1
    points = [s.coordinates(c) for c in s.hilbert_basis]
    total = 0
    for facet_indices in _bounded_facets(points, d):
        facet_pts = [points[i] for i in facet_indices]
        for simplex in _triangulate(facet_pts):
            mat = [facet_pts[i] for i in simplex]
            total += abs(det_int(mat))
    return total


def _bounded_facets(points, d):
    """Index sets of the bounded facets of conv(points) + cone(points).

    A supporting hyperplane normal . x = c with normal . p >= c for all
    generators gives a bounded facet exactly when c > 0: the recession
    cone is spanned by the generators themselves, so positive offset
    forces the normal to be strictly positive along every ray.
    """
    seen = {}
    for subset in itertools.combinations(range(len(points)), d):
        plane = hyperplane_through([points[i] for i in subset])
        if plane is None:
            continue
        normal, c = plane
        values = [sum(a * b for a, b in zip(normal, p)) for p in points]
        if all(v >= c for v in values):
            pass
        elif all(v <= c for v in values):
            normal = tuple(-a for a in normal)
            c = -c
            values = [-v for v in values]
        else:
            continue
        if c <= 0:
            continue
        key = (normal, c)
        if key not in seen:
            seen[key] = tuple(i for i, v in enumerate(values) if v == c)
    return sorted(seen.values())


def _triangulate(points):
    """Fan triangulation of the polytope spanned by the given points.

    The points must all be vertices, which holds for the facets met here
    because every Hilbert basis element spans its own extremal ray.
    Returns simplices as index tuples into ``points``; the fan is anchored
    at index 0, the lowest point in canonical order.
    """
    coords = _affine_coordinates(points)
    k = len(coords[0]) if coords else 0
    n = len(points)
    if n == 1:
        return [(0,)]
    if k == 0:
        raise ValueError("repeated points passed to triangulation")
    if n == k + 1:
        return [tuple(range(n))]
    simplices = []
    seen = set()
    for subset in itertools.combinations(range(n), k):
        plane = hyperplane_through([coords[i] for i in subset])
        if plane is None:
            continue
        normal, c = plane
        values = [sum(a * b for a, b in zip(normal, p)) for p in coords]
        if not (all(v >= c for v in values) or all(v <= c for v in values)):
            continue
        facet = tuple(i for i, v in enumerate(values) if v == c)
        if facet in seen or 0 in facet:
            continue  # fan from the lowest vertex: skip facets through it
        seen.add(facet)
        sub = _triangulate([points[i] for i in facet])
        simplices += [(0,) + tuple(facet[i] for i in simplex)
                      for simplex in sub]
    return simplices


def _affine_coordinates(points):
    """Coordinates of the points in a basis of their affine hull."""
    base = points[0]
    vectors = [tuple(a - b for a, b in zip(p, base)) for p in points]
    echelon = []
    for v in vectors:
        reduced = [Fraction(x) for x in v]
        for e in echelon:
            pivot = next(i for i, x in enumerate(e) if x != 0)
            f = reduced[pivot] / e[pivot]
            reduced = [a - f * b for a, b in zip(reduced, e)]
        if any(x != 0 for x in reduced):
            echelon.append(reduced)
    out = []
    for v in vectors:
        reduced = [Fraction(x) for x in v]
        coeffs = []
        for e in echelon:
            pivot = next(i for i, x in enumerate(e) if x != 0)
            f = reduced[pivot] / e[pivot]
            coeffs.append(f)
            reduced = [a - f * b for a, b in zip(reduced, e)]
        out.append(tuple(coeffs))
    return out


# -- multiplicity, route two: Hilbert-Samuel finite differences ----------


def hilbert_samuel_function(s, horizon):
    """dim of R(cone)/m^n for n = 1..horizon, by exact lattice counting.

    A monomial survives in the quotient exactly when its exponent cannot
    be split into n nonzero semigroup elements.  The maximal number of
    parts in any splitting is computed by dynamic programming over lattice
    points in increasing degree (degree is linear on the cone, so every
    parent precedes its children).
    """
    d = s.lattice_rank
    if d == 0:
        return [1] * horizon
    gens = [s.coordinates(c) for c in s.hilbert_basis]
    degrees = [c.l1() for c in s.hilbert_basis]
    cutoff = horizon - 1

    member_cache = {}

    def member(pt):
        cached = member_cache.get(pt)
        if cached is None:
            cached = s.contains(pt)
            member_cache[pt] = cached
        return cached

    zero = tuple([0] * d)
    max_parts = {zero: 0}
    heap = []
    queued = set()
    for gvec, gdeg in zip(gens, degrees):
        child = tuple(a + b for a, b in zip(zero, gvec))
        if child not in queued:
            queued.add(child)
            heapq.heappush(heap, (gdeg, child))
    while heap:
        deg, pt = heapq.heappop(heap)
        if pt in max_parts:
            continue
        best = 0
        for gvec in gens:
            parent = tuple(a - b for a, b in zip(pt, gvec))
            known = max_parts.get(parent)
            if known is None:
                if member(parent):
                    known = cutoff + 1  # unvisited member: beyond the cutoff
                else:
                    continue
            best = max(best, known + 1)
        best = min(best, cutoff + 1)
        max_parts[pt] = best
        if best <= cutoff:
            for gvec, gdeg in zip(gens, degrees):
                child = tuple(a + b for a, b in zip(pt, gvec))
                if child not in max_parts and child not in queued:
                    queued.add(child)
                    heapq.heappush(heap, (deg + gdeg, child))
    return [sum(1 for parts in max_parts.values() if parts <= n - 1)
            for n in range(1, horizon + 1)]


def multiplicity_hs_oracle(s, horizon=None):
    """Multiplicity read off the Hilbert-Samuel function.

    Takes the d-th finite difference of n -> dim R/m^n and requires it to
    have stabilized by the end of the horizon (default: dimension + 6);
    raises a capacity error suggesting a longer horizon otherwise.
    Independent of the convex-hull route by construction.
    """
    d = s.lattice_rank
    if horizon is None:
        horizon = d + 6
    values = hilbert_samuel_function(s, horizon)
    diffs = values
    for _ in range(d):
        diffs = [b - a for a, b in zip(diffs, diffs[1:])]
    if len(diffs) < 2 or diffs[-1] != diffs[-2]:
        raise CapacityError("Hilbert-Samuel horizon (differences not stable)",
                            horizon, horizon)
    return diffs[-1]


# -- reporting ------------------------------------------------------------


def semigroup_report(s, degree=3, horizon=None):
    """Everything the reports carry for one cone, JSON-ready."""
    g = s.graph
    uni, witness = is_unimodular(s)
    qg, gor, m = q_gorenstein(s)
    ideal = toric_ideal_up_to_degree(s, degree) if s.hilbert_basis else \
        BinomialIdeal([], degree)
    var_labels = [gamma.to_json(g)
                  for gamma in compatible_circuits(g, s.cone.label)]
    return {
        "label": s.cone.label.to_json(g),
        "lattice_rank": s.lattice_rank,
        "hilbert_basis_edges": [c.to_json() for c in s.hilbert_basis],
        "hilbert_basis_coords": [list(s.coordinates(c)) for c in s.hilbert_basis],
        "spans_lattice": spans_lattice(s),
        "unimodular": uni,
        "unimodular_witness": (None if witness is None else
                               [{"columns": list(cols), "minor": val}
                                for cols, val in witness]),
        "variables": var_labels,
        "binomials": {
            "degree_bound": ideal.degree_bound,
            "generators": [{"u": list(u), "v": list(v)}
                           for u, v in ideal.generators],
            "homogeneous": is_homogeneous(ideal),
        },
        "q_gorenstein": qg,
        "gorenstein_integral": gor,
        "gorenstein_point": (None if m is None else
                             {e: [x.numerator, x.denominator]
                              for e, x in sorted(m.items())}),
        "multiplicity": {
            "subdiagram_volume": subdiagram_volume(s),
            "hilbert_samuel": multiplicity_hs_oracle(s, horizon),
        },
    }


# -- brute-force oracles used by the test suite --------------------------


def semigroup_points_up_to_degree(s, bound):
    """All cone lattice points of degree (chain L1 norm) at most ``bound``.

    Enumerated directly from sign-compatible edge coefficients, with no
    reference to the Hilbert basis: an independent oracle.
    """
    g = s.graph
    label = s.cone.label
    free = [e for e in g.edges if e not in label.support]
    phi = label.phi
    points = []

    def rec(idx, budget, coeffs):
        if idx == len(free):
            c = Chain1(coeffs)
            if is_cycle(g, c):
                points.append(c)
            return
        e = free[idx]
        sign = 1 if phi.direction(e) == FORWARD else -1
        for k in range(budget + 1):
            coeffs[e] = sign * k
            rec(idx + 1, budget - k, coeffs)
        coeffs.pop(e, None)

    rec(0, bound, {})
    return points


def irreducible_points_up_to_degree(s, bound):
    """Brute-force irreducible elements among the bounded cone points.

    A nonzero point is irreducible when it is not the sum of two nonzero
    cone points; any decomposition of a point within the bound stays
    within the bound because degree is additive on the cone.
    """
    pts = semigroup_points_up_to_degree(s, bound)
    pt_set = set(pts)
    out = []
    for c in pts:
        if c.is_zero():
            continue
        reducible = any(not y.is_zero() and y != c and (c - y) in pt_set
                        and not (c - y).is_zero() for y in pts)
        if not reducible:
            out.append(c)
    return out
