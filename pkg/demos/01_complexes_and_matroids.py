"""Tour of the combinatorial layer: complexes, links, nonfaces, matroids.

Run with:  python demos/01_complexes_and_matroids.py
"""

from srpowers import (
    complete_graph,
    cycle,
    embed,
    from_facets,
    is_complete_intersection,
    is_matroid_exchange,
    is_matroid_pair,
    join_decomposition,
    matroid_exchange_witness,
    named_complex,
    uniform_matroid,
)

# A complex is stored by its facets; subsumed generators are dropped.
pentagon = cycle(5)
print("the 5-cycle:", pentagon)
print("  dimension:", pentagon.dimension(), " pure:", pentagon.is_pure())
print("  minimal nonfaces:", pentagon.minimal_nonfaces())

# The 5-cycle narrowly misses being a matroid: exchange fails on a
# vertex facing a far edge.
print("  matroid?", is_matroid_exchange(pentagon))
print("  failing exchange pair:", matroid_exchange_witness(pentagon))
print("  complete intersection?", is_complete_intersection(pentagon))

# Uniform matroids pass both the exchange axiom and the cheaper
# one-against-two pair criterion; the two tests always agree.
u52 = uniform_matroid(5, 2)
print("\nuniform matroid on 5 vertices, dimension 2:")
print("  exchange:", is_matroid_exchange(u52), " pair criterion:", is_matroid_pair(u52))

# Links and stars: the glued-triangle fixture.
glued = named_complex("example-4-10")
print("\nglued-triangle fixture:", glued)
print("  link of vertex 5:", glued.link({5}).facet_sets())
print("  star of vertex 5:", glued.star({5}).facet_sets())

# Joins multiply: the join of two triangles is a matroid whose minimal
# nonfaces are the two triangles themselves, and the constructive
# decomposition recovers both factors.
k3k3 = embed(complete_graph(3), 6).join(embed(complete_graph(3), 6, 3))
print("\njoin of two triangle graphs:")
print("  minimal nonfaces:", k3k3.minimal_nonfaces())
print("  factors:", [f.facet_sets() for f in join_decomposition(k3k3)])

# Matroid property is invariant under facet complementation.
print("\ncomplement of the 5-cycle:", pentagon.complement().facet_sets())
print("  matroid after complementing twice:",
      is_matroid_exchange(pentagon.complement().complement()) == is_matroid_exchange(pentagon))

# A complex built from explicit facets, with an isolated ambient vertex.
c = from_facets(4, [(1, 2), (2, 3)])
print("\npath on {1,2,3} inside ambient {1..4}:", c)
print("  vertex set:", sorted(c.vertex_set()), " (vertex 4 is ambient only)")
