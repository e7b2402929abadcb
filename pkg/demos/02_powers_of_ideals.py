"""Ordinary versus symbolic powers of squarefree monomial ideals.

Run with:  python demos/02_powers_of_ideals.py
"""

from srpowers import (
    cover_ideal,
    cycle,
    facet_ideal,
    maximal_ideal,
    minimal_primes,
    named_complex,
    principal,
    sr_ideal,
    symbolic_power,
    symbolic_power_by_intersection,
)


def show(name, ideal):
    print(f"{name}: n={ideal.n}")
    for g in ideal.sorted_gens():
        print("   ", g)


# The glued-triangle fixture separates the second symbolic power from
# the ordinary square by exactly one generator: the product of all
# variables.
delta = named_complex("example-4-10")
I = sr_ideal(delta)
show("Stanley-Reisner ideal", I)

square = I.power(2)
sym2 = symbolic_power(delta, 2)
show("\nordinary square", square)
show("\nsymbolic square", sym2)

extra = sym2.gens - square.gens
print("\ngenerators of the symbolic square missing from the square:", sorted(extra))
v = (1, 1, 1, 1, 1)
print("x1x2x3x4x5 in the symbolic square:", sym2.membership(v))
print("x1x2x3x4x5 in the ordinary square:", square.membership(v))

# The two symbolic power algorithms agree: box enumeration (fast path)
# and iterated intersection of prime powers (oracle path).
alt = symbolic_power_by_intersection(I, 2)
print("box enumeration = iterated intersection:", alt.gens == sym2.gens)

# Note the fine structure: the product monomial multiplies the symbolic
# square into the square, but single variables do not.
prod = principal(5, v).multiply(sym2)
print("(x1..x5 product) * symbolic square inside the square:",
      all(square.membership(g) for g in prod.gens))
mI = maximal_ideal(5).multiply(sym2)
print("(x1,..,x5) * symbolic square inside the square:",
      all(square.membership(g) for g in mI.gens))

# For the 5-cycle the square does not split at all; the first difference
# appears at the cube.
c5 = cycle(5)
print("\n5-cycle: symbolic square equals the square:",
      symbolic_power(c5, 2).gens == sr_ideal(c5).power(2).gens)
print("5-cycle: symbolic cube equals the cube:",
      symbolic_power(c5, 3).gens == sr_ideal(c5).power(3).gens)

# Facet and cover ideals of the 5-cycle, and the prime decompositions.
show("\nfacet ideal of the 5-cycle", facet_ideal(c5))
show("\ncover ideal of the 5-cycle (minimal vertex covers)", cover_ideal(c5))
print("\nminimal primes of the Stanley-Reisner ideal:", minimal_primes(sr_ideal(c5)))
