"""One involution, one fixed point.

Multiplying the generators of a maximum clique gives an order-two element.
Scanning a ball cube by cube locates every cell the involution maps to
itself and, within each, the locus it fixes.  The expected outcome, for
every defining graph: a single zero-dimensional locus at the center of the
clique's own cube, the midpoint the whole construction pivots on.
"""

from rcoxeter import (
    antipodal_check,
    build_ball,
    build_involution,
    fixed_loci,
    invariant_cubes,
    multiply,
    preset,
    word_to_text,
)

for name in ("square", "dinfty", "pentagon", "grid"):
    graph = preset(name)
    inv = build_involution(graph)
    gamma = word_to_text(inv.element, graph)
    print(f"{name}: gamma = {gamma!r}, "
          f"gamma^2 = {word_to_text(multiply(inv.element, inv.element, graph), graph) or '1'}")

    ball = build_ball(graph, 5)
    cubes = invariant_cubes(inv, ball)
    report = fixed_loci(inv, ball)
    print(f"  invariant cubes within reliable radius {ball.reliable_radius}: "
          f"{[(word_to_text(c.base, graph) or '1', [graph.labels[g] for g in c.axis]) for c in cubes]}")
    for locus in report.loci:
        print(f"  locus: dimension {locus.dimension}, center {locus.center}")
    print(f"  unique fixed point: {report.unique_point}, "
          f"antipodal on the home cube: {antipodal_check(inv, graph)}")
    print()

# Why the fixed point is isolated: on the home cube the involution
# complements every coordinate, e.g. on the grid's square {1, a, c, ac}:
grid = preset("grid")
inv = build_involution(grid)
print("antipodal action on the home square of the grid group:")
for vertex in ((), (0,), (2,), (0, 2)):
    image = multiply(inv.element, vertex, grid)
    print(f"  {word_to_text(vertex, grid) or '1':>3} -> {word_to_text(image, grid) or '1'}")
