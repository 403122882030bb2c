"""A first walk: from a staircase of points to its Hilbert matrix.

Six rows of lengths (7,7,7,5,3,2) give 31 points on a 6x7 grid of lines.
The bigraded Hilbert function, written as a matrix, determines and is
determined by its first difference: for this configuration the difference
is exactly the 0/1 indicator of the staircase.
"""

from biproj import delta, hilbert_acm, staircase
from biproj.formats import render_matrix

g = staircase((7, 7, 7, 5, 3, 2))
print(__doc__)
print("points per row:", g.row_counts())
print("points per column:", g.col_counts())

M = hilbert_acm(g)
print("\nHilbert matrix (stabilizes at deg = %d):\n" % M.degree)
print(render_matrix(M.entries))

D = delta(M)
print("\nFirst difference (the staircase, seen from degree space):\n")
print(render_matrix(D.entries[:7, :8]))

print("\nRow sums of the difference recover the row lengths:",
      [int(r.sum()) for r in D.entries[:6]])
