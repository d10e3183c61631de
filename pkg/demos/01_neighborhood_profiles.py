"""First and second neighborhoods, anti-satisfaction, walkable sets.

A vertex u is "satisfactory" when its second out-neighborhood is at least
as large as its first: |N1(u)| <= |N2(u)|.  Seymour's Second Neighborhood
Conjecture says every loop-free, digon-free digraph has one.  This script
walks through the basic measurements on three small graphs.
"""
from seymour import Digraph

# the directed 3-cycle: every vertex sees one vertex at distance 1 and one
# at distance 2, so everything is satisfactory
cycle = Digraph(3, [(0, 1), (1, 2), (2, 0)])

# the transitive triangle: 0 -> 1 -> 2 plus the shortcut 0 -> 2.  The
# shortcut puts 2 at distance 1 from 0, emptying 0's second neighborhood.
triangle = Digraph(3, [(0, 1), (0, 2), (1, 2)])

# a small dag with a long tail
tail = Digraph(6, [(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (4, 5)])

for name, g in [("3-cycle", cycle), ("transitive triangle", triangle), ("dag", tail)]:
    print(f"== {name}:  n={g.n}, m={g.m}")
    for p in g.profiles():
        flag = "satisfactory" if p.satisfactory else "NOT satisfactory"
        print(
            f"  vertex {p.vertex}: |N1|={p.n1} |N2|={p.n2} "
            f"anti-satisfaction={p.anti_satisfaction:+d}  {flag}"
        )
    print(f"  satisfactory vertices: {sorted(g.satisfactory_vertices())}")
    print()

# Layers are exact-distance sets: vertex 0 of the dag reaches {1,2} in one
# step, {3} in two, {4} in three.  The walkable neighborhood collects every
# reachable vertex, the origin included.
print("dag, from vertex 0:")
for k in (1, 2, 3, 4):
    print(f"  distance {k}: {sorted(tail.kth_neighborhood(0, k)) or '{}'}")
print(f"  walkable: {sorted(tail.walkable_neighborhood(0))}")

# Sinks have |N1| = 0 and are satisfactory for free.
print(f"\nvertex 5 is a sink: {tail.profile(5).satisfactory}")
