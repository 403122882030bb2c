"""What goes wrong when removed points share a line.

Removing two collinear points is rejected up front.  Forcing the issue by
deleting them from the configuration anyway still yields a valid difference
matrix, and the bookkeeping formulas still produce a table; but that table
is provably not the resolution, and the oracle catches the lie.
"""

from biproj import (
    CollinearRemoval,
    betti_diff,
    betti_from_delta,
    betti_oracle,
    delta,
    hilbert_oracle,
    removal_plan,
    staircase,
)
from biproj.formats import render_betti, render_matrix

g = staircase((4, 2))
print(__doc__)

try:
    removal_plan(g, [(0, 0), (0, 1)])
except CollinearRemoval as e:
    print("removal_plan refuses:", e)

z = g.without((0, 0)).without((0, 1))
D = delta(hilbert_oracle(z))
print("\ndifference matrix of the four leftover points:\n")
print(render_matrix(D.entries[:2, :4]))

pretended = betti_from_delta(D)
honest = betti_oracle(z)
print("\nthe formulas pretend:\n" + render_betti(pretended))
print("\nthe oracle knows better:\n" + render_betti(honest))

print("\nghost terms (level, degree, formula, truth):")
for level, degree, a, b in betti_diff(pretended, honest):
    print("  beta%d %s: %d vs %d" % (level, degree, a, b))
print("\nthe ghosts cancel in pairs, so rank alternation alone cannot see them:",
      pretended.rank_alternation() == honest.rank_alternation() == 1)
