import itertools

import pytest

from cographic import (Chain1, Cone, Orientation, TotCycPair, betti1,
                       build_fan, build_orientation_poset, catalog_graph,
                       circuit_class, common_cone, compatible_circuits,
                       cone_contains, cone_dimension, cone_of,
                       enumerate_oriented_circuits, extremal_rays, facets,
                       find_poset_isomorphism,
                       fundamental_cycle_basis, poset_isomorphic,
                       voronoi_face_dim, FinitePoset)
from cographic.orientations import OrientationPoset
from cographic.graph import FORWARD, BACKWARD


def b3_chamber_cone():
    g = catalog_graph("B3")
    phi = Orientation({"e1": FORWARD, "e2": FORWARD, "e3": BACKWARD})
    return g, Cone(g, TotCycPair.create(g, frozenset(), phi))


def fig_ng_chamber_cone():
    g = catalog_graph("FIG-NG")
    phi = Orientation({e: FORWARD for e in g.edges})
    return g, Cone(g, TotCycPair.create(g, frozenset(), phi))


def all_cycles_in_box(g, bound):
    basis = fundamental_cycle_basis(g)
    return [basis.chain(coords) for coords in
            itertools.product(range(-bound, bound + 1), repeat=len(basis))]


def test_zero_in_every_cone(graphs):
    for name in ("LOOP1", "B3", "C4"):
        fan = build_fan(graphs[name])
        for cone in fan.cones:
            assert cone_contains(cone, Chain1())


def test_cone_contains_b3_signs():
    g, cone = b3_chamber_cone()
    assert cone_contains(cone, Chain1({"e1": 1, "e3": -1}))
    assert not cone_contains(cone, Chain1({"e2": 1, "e1": -1}))


def test_cone_contains_rejects_non_cycles():
    g, cone = b3_chamber_cone()
    with pytest.raises(ValueError):
        cone_contains(cone, Chain1({"e1": 1}))


def test_class_lies_in_its_own_support_cone(graphs):
    from cographic import support_orientation_of
    for name in ("B3", "FIG-NG", "LOOP1"):
        g = graphs[name]
        for gamma in enumerate_oriented_circuits(g):
            pair = support_orientation_of(g, [gamma])
            assert cone_contains(Cone(g, pair), circuit_class(gamma))


def test_common_cone_examples():
    c = Chain1({"e1": 1, "e3": -1})
    d = Chain1({"e2": 1, "e3": -1})
    assert common_cone(c, Chain1())
    assert not common_cone(c, -1 * c)
    assert common_cone(c, d)
    assert not common_cone(c, Chain1({"e3": 1, "e2": -1}))


def test_common_cone_matches_explicit_poset_search(rng, graphs):
    # the sign test against a literal search for a cone holding both
    for name in ("LOOP1", "B2", "B3", "C3", "TREE3"):
        g = graphs[name]
        fan = build_fan(g)
        cycles = all_cycles_in_box(g, 2)
        checked = 0
        while checked < 200 and cycles:
            c, d = rng.choice(cycles), rng.choice(cycles)
            found = any(cone_contains(k, c) and cone_contains(k, d)
                        for k in fan.cones)
            assert common_cone(c, d) == found
            checked += 1


def test_cone_of_zero_is_minimum():
    g = catalog_graph("B3")
    pair = cone_of(g, Chain1())
    assert pair.support == frozenset(g.edges)


def test_cone_of_reads_signs():
    g = catalog_graph("B3")
    pair = cone_of(g, Chain1({"e1": 2, "e2": 1, "e3": -3}))
    assert pair.support == frozenset()
    assert pair.phi.to_json() == {"e1": "+", "e2": "+", "e3": "-"}


def test_cone_of_is_minimal_cone(graphs):
    # no strictly smaller cone of the fan contains the cycle
    for name in ("LOOP1", "B3", "C4"):
        g = graphs[name]
        poset = build_orientation_poset(g)
        for c in all_cycles_in_box(g, 2):
            label = cone_of(g, c)
            assert cone_contains(Cone(g, label), c)
            for other in poset:
                if cone_contains(Cone(g, other), c):
                    assert poset.leq(label, other)


def test_fan_completeness_box(graphs):
    for name in ("LOOP1", "B2", "B3", "C3", "C4", "FIG-NG"):
        g = graphs[name]
        poset = build_orientation_poset(g)
        for c in all_cycles_in_box(g, 2):
            label = cone_of(g, c)
            assert label in poset


def test_cone_dimensions():
    g, cone = b3_chamber_cone()
    assert cone_dimension(cone) == 2
    minimum = Cone(g, TotCycPair(frozenset(g.edges), Orientation()))
    assert cone_dimension(minimum) == 0
    theta = catalog_graph("THETA2")
    chamber = Cone(theta, TotCycPair.create(
        theta, frozenset(), Orientation({e: FORWARD for e in theta.edges})))
    assert cone_dimension(chamber) == 4


def test_dimension_voronoi_complement(fan_of):
    for name in ("B3", "FIG-NG", "THETA2", "TREE3", "C5"):
        fan = fan_of(name)
        b = betti1(fan.graph)
        for cone in fan.cones:
            assert cone_dimension(cone) + voronoi_face_dim(cone) == b


def test_extremal_rays_counts():
    g, cone = b3_chamber_cone()
    rays = extremal_rays(cone)
    assert len(rays) == 2
    minimum = Cone(g, TotCycPair(frozenset(g.edges), Orientation()))
    assert extremal_rays(minimum) == []


def test_rays_span_dimension(fan_of):
    from cographic.linalg import rank
    for name in ("B3", "FIG-NG", "C4"):
        fan = fan_of(name)
        basis = fundamental_cycle_basis(fan.graph)
        for cone in fan.cones:
            rows = [basis.coordinates(r) for r in extremal_rays(cone)]
            assert rank(rows) == cone_dimension(cone)


def test_facets_of_ray_is_origin():
    g = catalog_graph("LOOP1")
    ray = Cone(g, TotCycPair.create(g, frozenset(),
                                    Orientation({"e1": FORWARD})))
    fl = facets(ray)
    assert len(fl) == 1
    sub, normal = fl[0]
    assert cone_dimension(sub) == 0
    assert normal in ((1,), (-1,))


def test_facets_fig_ng_chamber_has_five():
    g, cone = fig_ng_chamber_cone()
    fl = facets(cone)
    assert len(fl) == 5
    for sub, normal in fl:
        assert cone_dimension(sub) == 3
        # primitive normals pair to one on their defining edge functional
        from math import gcd
        assert abs(__import__('functools').reduce(gcd, normal)) == 1


def test_facets_b3_chamber_has_two():
    g, cone = b3_chamber_cone()
    fl = facets(cone)
    assert len(fl) == 2
    # the rays: forcing e1 (or e2) to zero leaves one circuit; forcing e3
    # to zero kills both circuits at once, which is a dimension-2 drop
    supports = {tuple(sorted(sub.label.support)) for sub, _ in fl}
    assert supports == {("e1",), ("e2",)}
    for sub, _ in fl:
        assert cone_dimension(sub) == 1


def test_facet_normals_nonnegative_on_cone(fan_of):
    # every facet normal supports its cone from below
    for name in ("B3", "FIG-NG"):
        fan = fan_of(name)
        for cone in fan.cones:
            if cone_dimension(cone) == 0:
                continue
            from cographic.chains import fundamental_cycle_basis as fcb
            from cographic.graph import delete_edges
            basis = fcb(delete_edges(fan.graph, cone.label.support))
            rays = [basis.coordinates(r) for r in extremal_rays(cone)]
            for _, normal in facets(cone):
                values = [sum(a * b for a, b in zip(normal, ray))
                          for ray in rays]
                assert all(v >= 0 for v in values)
                assert any(v > 0 for v in values)


def test_facet_normal_independent_of_cutting_edge(fan_of):
    # every edge added to reach one facet induces the same primitive normal
    from cographic.fan import face_label, _edge_functional
    from cographic.chains import fundamental_cycle_basis as fcb
    from cographic.graph import delete_edges
    for name in ("B3", "FIG-NG", "C4"):
        fan = fan_of(name)
        g = fan.graph
        for cone in fan.cones:
            t = cone.label.support
            phi = cone.label.phi
            d = cone_dimension(cone)
            if d == 0:
                continue
            basis = fcb(delete_edges(g, t))
            normals = {}
            for e in g.edges:
                if e in t:
                    continue
                label = face_label(g, t | {e},
                                   phi.restrict(set(phi.edges()) - {e}))
                if cone_dimension(Cone(g, label)) != d - 1:
                    continue
                normal = _edge_functional(basis, e, phi.direction(e))
                normals.setdefault(label, set()).add(normal)
            for label, seen in normals.items():
                assert len(seen) == 1, (name, label, seen)


def test_build_fan_counts():
    tree = build_fan(catalog_graph("TREE3"))
    assert len(tree) == 1 and len(tree.chambers()) == 1
    loop = build_fan(catalog_graph("LOOP1"))
    assert len(loop) == 3 and len(loop.chambers()) == 2
    b3 = build_fan(catalog_graph("B3"))
    assert len(b3) == 13 and len(b3.chambers()) == 6
    dims = sorted(cone_dimension(k) for k in b3.cones)
    assert dims == [0] + [1] * 6 + [2] * 6


def test_distinct_labels_have_distinct_point_sets(fan_of):
    # generic points separate the cones pairwise
    for name in ("LOOP1", "B3", "C4", "FIG-NG"):
        fan = fan_of(name)
        generic = []
        for cone in fan.cones:
            total = Chain1()
            for ray in extremal_rays(cone):
                total = total + ray
            generic.append(total)
        for i, ki in enumerate(fan.cones):
            for j, kj in enumerate(fan.cones):
                if i < j:
                    assert not (cone_contains(ki, generic[j])
                                and cone_contains(kj, generic[i]))


def test_label_map_is_order_isomorphism(fan_of):
    # restriction order upstairs equals cone containment downstairs
    for name in ("LOOP1", "B3", "C4", "FIG-NG"):
        fan = fan_of(name)
        rays = {p: [circuit_class(c)
                    for c in compatible_circuits(fan.graph, p)]
                for p in fan.poset}
        for p in fan.poset:
            for q in fan.poset:
                contained = all(cone_contains(Cone(fan.graph, q), r)
                                for r in rays[p])
                assert contained == OrientationPoset.leq(p, q)


def test_chamber_count_equals_tco_count(fan_of, graphs):
    from cographic import enumerate_tco, delete_edges, separating_edges
    for name, g in graphs.items():
        fan = fan_of(name)
        free = delete_edges(g, separating_edges(g))
        assert len(fan.chambers()) == len(enumerate_tco(free))


def test_poset_isomorphic_basics():
    chain2 = FinitePoset(["a", "b"], lambda x, y: x <= y)
    antichain2 = FinitePoset(["a", "b"], lambda x, y: x == y)
    assert poset_isomorphic(chain2, chain2)
    assert not poset_isomorphic(chain2, antichain2)
    assert not poset_isomorphic(chain2, FinitePoset([1], lambda x, y: True))


def test_fan_poset_isomorphic_to_orientation_poset():
    g = catalog_graph("B3")
    fan = build_fan(g)
    # cone-inclusion order computed from ray membership, label-free
    rays = {p: [circuit_class(c) for c in compatible_circuits(g, p)]
            for p in fan.poset}

    def cone_leq(p, q):
        return all(cone_contains(Cone(g, q), r) for r in rays[p])

    cone_poset = FinitePoset(list(fan.poset), cone_leq)
    orient_poset = FinitePoset(list(fan.poset), OrientationPoset.leq)
    iso = find_poset_isomorphism(cone_poset, orient_poset)
    assert iso is not None
