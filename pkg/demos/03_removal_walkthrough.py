"""Removing interior points one mapping cone at a time.

Five interior points with pairwise distinct rows and columns leave a
26-point scheme that is no longer a staircase.  Each removal contributes a
separator: a product of lines through the other points of its row and
column.  Provided two degree conditions hold at every step, the mapping
cones stay minimal and the Betti table of the leftover scheme follows by
pure bookkeeping.
"""

from biproj import betti_oracle, delta, removal_plan, remove_points, staircase
from biproj.formats import render_betti, render_matrix

g = staircase((7, 7, 7, 5, 3, 2))
print(__doc__)

plan = removal_plan(g, [(0, 4), (1, 3), (2, 1), (3, 2), (4, 0)])
print("removal order (sorted by separating degree):")
for point, degree in zip(plan.points, plan.degrees):
    print("  P%s  separator degree %s" % (point, degree))

res = remove_points(g, plan)
print("\nseparators actually used:")
for sep in res.separators:
    print("  P%s: %s" % (sep.point, " ".join("%s_%d" % l for l in sep.lines)))

print("\nper-step degree conditions all satisfied:",
      all(rep.ok for rep in res.conditions))

print("\nfirst difference of the leftover scheme (note the negative entries):\n")
print(render_matrix(delta(res.hilbert).entries[:7, :8]))

print("\nBetti table of the 26 points:\n" + render_betti(res.betti))
print("\noracle agrees:",
      betti_oracle(res.grid_z).counters() == res.betti.counters())
