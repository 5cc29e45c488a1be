"""Finite balls of the Davis complex.

The complex has one vertex per group element and one k-cube per coset of
each k-clique subgroup.  A radius-L ball stores the vertices of length at
most L and every cube whose corners all fit; inside the reliable radius
(L minus the maximum clique size) no incident cell is missing, and there
the links are checked against Gromov's flag condition.
"""

from rcoxeter import (
    IDENTITY,
    build_ball,
    cubes_at_vertex,
    export_complex,
    links_flag_check,
    preset,
    sphere,
    word_to_text,
)

# The infinite dihedral complex is a line: 2L+1 vertices, 2L edges.
dinfty = preset("dinfty")
ball = build_ball(dinfty, 3)
print("dinfty ball at L=3:", [word_to_text(w, dinfty) or "1" for w in ball.vertices])
print("cells by dimension:", ball.cell_counts())

# The grid preset is a product of two infinite dihedral groups; its
# complex is the square tiling of the plane.
grid = preset("grid")
for radius in range(2, 6):
    ball = build_ball(grid, radius)
    print(f"grid L={radius}: {len(ball.vertices)} vertices, "
          f"cells {ball.cell_counts()}, reliable radius {ball.reliable_radius}")

# Cubes at the identity correspond to the cliques of the defining graph.
pentagon = preset("pentagon")
ball = build_ball(pentagon, 4)
grouped = cubes_at_vertex(ball, IDENTITY)
print("\npentagon cubes at the identity:",
      {dim: len(cubes) for dim, cubes in grouped.items()})
print("sphere sizes:", [len(sphere(ball, r)) for r in range(5)])

report = links_flag_check(ball)
print(f"flag condition: {'ok' if report.ok else report.violations} "
      f"({report.vertices_checked} vertices checked)")

# Balls export as JSON (full cell structure) or DOT (the 1-skeleton).
print("\nDOT preview of the dinfty line:")
print(export_complex(build_ball(dinfty, 2), "dot"))
