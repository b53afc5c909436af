"""
The fan of sign cones
=====================

Each orientation pair labels a cone of cycles; membership is a sign
check, rays are circuit classes, and facets drop the dimension by one.
The whole fan is a complete decomposition of the cycle space.
"""

from cographic import (Chain1, build_fan, catalog_graph, common_cone,
                       cone_contains, cone_dimension, cone_of, extremal_rays,
                       facets, voronoi_face_dim)

g = catalog_graph("B3")
fan = build_fan(g)
print(f"B3 fan: {len(fan)} cones, {len(fan.chambers())} chambers, "
      f"ambient dimension {cone_dimension(fan.chambers()[0])}")

# Dimensions complement the dual-polytope face dimensions.
for cone in fan.cones:
    d = cone_dimension(cone)
    print(f"  T={sorted(cone.label.support)!s:18} dim={d} "
          f"dual face dim={voronoi_face_dim(cone)} "
          f"rays={len(extremal_rays(cone))}")

# Locating the minimal cone of a cycle is reading its signs.
c = Chain1({"e1": 1, "e2": 2, "e3": -3})
label = cone_of(g, c)
print("\nminimal cone of e1 + 2*e2 - 3*e3:", label.phi.to_json())

# Two cycles share a cone exactly when no edge carries opposite signs.
d = Chain1({"e1": 1, "e3": -1})
print("shares a cone with e1 - e3:", common_cone(c, d))
print("shares a cone with its negative:", common_cone(c, -1 * c))

# Facets of a chamber: one functional forced to zero at a time.
chamber = fan.chambers()[0]
print("\nfacets of the first chamber:")
for sub, normal in facets(chamber):
    print(f"   T={sorted(sub.label.support)} normal={normal}")

# Membership is exact and closed under the cone operations.
assert cone_contains(fan.cone(label), c)
