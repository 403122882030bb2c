"""Corners and vertices read off the minimal free resolution.

For a staircase configuration the resolution of the ideal sheaf has length
one: generators sit at the corners of the staircase, first syzygies at its
vertices, and nothing else.  The Koszul-homology oracle recomputes the same
table from scratch by exact linear algebra.
"""

from biproj import acm_resolution, betti_oracle, corners_and_vertices, staircase
from biproj.formats import render_betti

g = staircase((7, 7, 7, 5, 3, 2))
print(__doc__)

corners, vertices = corners_and_vertices(g)
print("corners: ", corners)
print("vertices:", vertices)
print("(always one vertex fewer than corners)")

table = acm_resolution(g)
print("\nresolution:\n" + render_betti(table))

oracle = betti_oracle(g)
print("\noracle agrees:", oracle.counters() == table.counters())
