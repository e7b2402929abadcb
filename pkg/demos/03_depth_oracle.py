"""The exact depth oracle: degree complexes, witnesses, field effects.

Run with:  python demos/03_depth_oracle.py
"""

import json

from srpowers import (
    cycle,
    degree_complex,
    depth_dim,
    disjoint_union,
    embed,
    from_facets,
    is_cm,
    named_complex,
    reduced_cohomology_dims,
    reisner_is_cm,
    sr_ideal,
    symbolic_power,
)

# Degree complexes: at the zero degree they recover the radical complex,
# at a negative indicator vector they recover a link.
delta = named_complex("example-4-10")
I = sr_ideal(delta)
print("degree complex at 0 equals the complex:",
      degree_complex(I, (0, 0, 0, 0, 0)) == delta)
print("degree complex at -e5 equals the link of {5}:",
      degree_complex(I, (0, 0, 0, 0, -1)).facets == delta.link({5}).facets)

# A depth report carries a witness degree for every nonvanishing local
# cohomology index below the dimension.
two_triangles = disjoint_union(
    embed(from_facets(3, [(1, 2, 3)]), 6), embed(from_facets(3, [(1, 2, 3)]), 6, 3)
)
report = depth_dim(sr_ideal(two_triangles))
print("\ntwo disjoint triangles:")
print(json.dumps(report.to_json(), indent=2))

# The fixture that separates the powers: the symbolic square is
# Cohen-Macaulay, the ordinary square is not.
print("\nglued-triangle fixture:")
print("  symbolic square CM:", is_cm(symbolic_power(delta, 2)))
sq_report = depth_dim(sr_ideal(delta).power(2))
print("  ordinary square depth/dim:", sq_report.depth, "/", sq_report.dim)

# Reduced cohomology is exact, so torsion shows up over prime fields:
# the 6-vertex projective plane is Cohen-Macaulay over the rationals
# but not in characteristic 2.
rp2 = from_facets(6, [(1, 2, 4), (1, 2, 5), (1, 3, 4), (1, 3, 6), (1, 5, 6),
                      (2, 3, 5), (2, 3, 6), (2, 4, 6), (3, 4, 5), (4, 5, 6)])
print("\nprojective plane on six vertices:")
print("  reduced cohomology over Q: ", reduced_cohomology_dims(rp2))
print("  reduced cohomology over F2:", reduced_cohomology_dims(rp2, 2))
print("  CM over Q:", is_cm(sr_ideal(rp2)), "  CM over F2:", is_cm(sr_ideal(rp2), 2))
print("  link-homology criterion agrees:",
      reisner_is_cm(rp2) and not reisner_is_cm(rp2, 2))

# Depth of the 5-cycle family of powers.
c5 = cycle(5)
for label, ideal in [
    ("I", sr_ideal(c5)),
    ("symbolic square", symbolic_power(c5, 2)),
    ("symbolic cube", symbolic_power(c5, 3)),
    ("ordinary cube", sr_ideal(c5).power(3)),
]:
    r = depth_dim(ideal)
    print(f"\n5-cycle {label}: depth {r.depth}, dim {r.dim}, CM {r.is_cm}")
