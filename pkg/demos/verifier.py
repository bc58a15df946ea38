"""Check matchings for the uniquely restricted property.

A matching is uniquely restricted when no alternating cycle exists.  The
verifier returns such a cycle as a witness whenever it finds one.
"""

from urmatch import Graph, Matching, is_uniquely_restricted
from urmatch.matching import is_acyclic_matching, is_uniquely_restricted_by_definition

square = Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
for edges in ([(0, 1)], [(0, 1), (2, 3)]):
    m = Matching(square, edges)
    verdict = is_uniquely_restricted(square, m)
    print(f"C4 with {edges}: UR={bool(verdict)} acyclic={is_acyclic_matching(square, m)}")
    if verdict.witness is not None:
        print("  alternating cycle:", verdict.witness.cycle)

# Two triangles joined by an edge.  Walking the state graph can pass one
# matched edge in both directions, so the verifier confirms with an exact check.
twin = Graph(6, [(0, 1), (1, 2), (2, 3), (3, 1), (0, 4), (4, 5), (5, 0)])
m = Matching(twin, [(0, 1), (2, 3), (4, 5)])
print("twin triangles, perfect matching: UR =", bool(is_uniquely_restricted(twin, m)),
      "| by definition =", is_uniquely_restricted_by_definition(twin, m))
