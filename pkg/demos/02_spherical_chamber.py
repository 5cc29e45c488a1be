"""Spherical subsets and the chamber.

A set of generators spans a finite subgroup exactly when it is a clique of
the defining graph.  The cliques, ordered by inclusion with the empty set
as bottom, form a poset; its order complex is the chamber, the fundamental
domain from which the Davis complex is assembled.
"""

from rcoxeter import (
    chamber_complex,
    is_spherical,
    maximum_spherical,
    preset,
    spherical_poset,
)

for name in ("square", "dinfty", "pentagon", "grid"):
    graph = preset(name)
    poset = spherical_poset(graph)
    chamber = chamber_complex(poset)
    top = maximum_spherical(graph)
    print(f"{name}: {len(poset)} spherical subsets, "
          f"maximum clique {[graph.labels[g] for g in top]}, "
          f"chamber dimension {chamber.dimension}, "
          f"simplices by dimension {chamber.counts_by_dimension()}")

# The pentagon in detail: 1 empty set + 5 vertices + 5 edges.
pentagon = preset("pentagon")
poset = spherical_poset(pentagon)
print("\npentagon spherical subsets:")
for clique in poset:
    print("  ", [pentagon.labels[g] for g in clique])

print("triangle {v0,v1,v2} spherical?",
      is_spherical((0, 1, 2), pentagon))  # no: v0 and v2 are not adjacent

# The chamber of the square group is the square itself, barycentrically
# subdivided: 4 vertices, 5 edges, 2 triangles.
square = preset("square")
chamber = chamber_complex(spherical_poset(square))
print("\nsquare chamber maximal chains:")
for chain in chamber.maximal_chains:
    print("  ", " < ".join(str(list(c)) for c in chain))
