"""Separating degrees, measured two ways.

The separating degree of a point records the bidegrees where a form can
vanish on everything else yet survive at the point.  Counting points on its
row and column predicts it; deleting the point's coordinate from every
value space measures it.  The two always agree, and the set of degrees
where the Hilbert function drops is exactly an up-set.
"""

from biproj import classify_points, drop_sets, hilbert_oracle, staircase

g = staircase((4, 2))
print(__doc__)
M = hilbert_oracle(g)
predicted = {pc.position: pc.separating_degree for pc in classify_points(g)}
measured = drop_sets(g)

for pos in g.points():
    cells = measured[pos]
    root = min(cells)
    print("P%s: predicted %s, drop set has %2d cells, minimum %s, interior: %s"
          % (pos, predicted[pos], len(cells), root,
             all(c >= root for c in cells)))
