"""Reduced point configurations on a grid of lines in P1 x P1.

A configuration lives on rows R_0..R_a and columns C_0..C_b; the point
P_ij = R_i cap C_j is in the scheme iff incidence[i][j].  Everything here
is combinatorial; exact line parameters ride along for the oracle.

Bidegrees are plain (i, j) tuples ordered componentwise; "strictly below"
always means strict in BOTH components.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import InvalidGrid, NotACM, PointNotInScheme


def dominates(d1, d2):
    """(i1,j1) >= (i2,j2) componentwise."""
    return d1[0] >= d2[0] and d1[1] >= d2[1]


def strictly_below(d1, d2):
    """(i1,j1) < (i2,j2) strictly in both components."""
    return d1[0] < d2[0] and d1[1] < d2[1]


@dataclass(frozen=True)
class PointGrid:
    incidence: tuple        # (a+1) rows of (b+1) bools
    row_params: tuple       # affine parameter t_i of line R_i, pairwise distinct
    col_params: tuple       # affine parameter u_j of line C_j

    @staticmethod
    def from_points(nrows, ncols, points, row_params=None, col_params=None):
        if nrows < 1 or ncols < 1:
            raise InvalidGrid("grid must have at least one row and one column")
        inc = [[False] * ncols for _ in range(nrows)]
        for (i, j) in points:
            if not (0 <= i < nrows and 0 <= j < ncols):
                raise InvalidGrid("point (%d,%d) outside the %dx%d grid" % (i, j, nrows, ncols))
            if inc[i][j]:
                raise InvalidGrid("duplicate point (%d,%d)" % (i, j))
            inc[i][j] = True
        if row_params is None:
            row_params = range(nrows)
        if col_params is None:
            col_params = range(ncols)
        row_params = tuple(_exact(x) for x in row_params)
        col_params = tuple(_exact(x) for x in col_params)
        for name, params, n in (("row", row_params, nrows), ("col", col_params, ncols)):
            if len(params) != n:
                raise InvalidGrid("%s_params has %d entries for %d lines"
                                  % (name, len(params), n))
            if len(set(params)) != n:
                raise InvalidGrid("duplicate %s line parameters" % name)
        return PointGrid(
            incidence=tuple(tuple(row) for row in inc),
            row_params=row_params,
            col_params=col_params,
        )

    @property
    def shape(self):
        return (len(self.incidence), len(self.incidence[0]) if self.incidence else 0)

    @property
    def npoints(self):
        return sum(sum(row) for row in self.incidence)

    def has_point(self, i, j):
        nr, nc = self.shape
        return 0 <= i < nr and 0 <= j < nc and self.incidence[i][j]

    def points(self):
        """All grid positions carrying a point, in row-major order."""
        return tuple(
            (i, j)
            for i, row in enumerate(self.incidence)
            for j, on in enumerate(row)
            if on
        )

    def row_counts(self):
        return tuple(sum(row) for row in self.incidence)

    def col_counts(self):
        nr, nc = self.shape
        return tuple(sum(self.incidence[i][j] for i in range(nr)) for j in range(nc))

    def without(self, point):
        """The same grid minus one point (shape and line parameters kept)."""
        i, j = point
        if not self.has_point(i, j):
            raise PointNotInScheme("no point at (%d,%d)" % (i, j))
        inc = [list(row) for row in self.incidence]
        inc[i][j] = False
        return PointGrid(tuple(tuple(row) for row in inc), self.row_params, self.col_params)


def _exact(x):
    """Line parameters are kept exact: ints stay ints, everything else Fraction."""
    if isinstance(x, bool):
        raise InvalidGrid("line parameter must be a number, got bool")
    if isinstance(x, int):
        return x
    return Fraction(x)


def staircase(lengths, ncols=None, **kw):
    """The staircase with row i occupying columns 0..lengths[i]-1."""
    lengths = tuple(lengths)
    if not lengths:
        raise InvalidGrid("a staircase needs at least one row")
    if any(l < 1 for l in lengths) or any(
        lengths[i] < lengths[i + 1] for i in range(len(lengths) - 1)
    ):
        raise InvalidGrid("row lengths must be positive and weakly decreasing")
    if ncols is None:
        ncols = max(lengths)
    pts = [(i, j) for i, l in enumerate(lengths) for j in range(l)]
    return PointGrid.from_points(len(lengths), ncols, pts, **kw)


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple

    @property
    def ok(self):
        return not self.violations


def _violations(grid, allow_empty_lines=False):
    inc = grid.incidence
    if not inc or not inc[0]:
        yield "grid has no rows or no columns"
        return
    nr, nc = grid.shape
    if any(len(row) != nc for row in inc):
        yield "ragged incidence matrix"
        return
    if not allow_empty_lines:
        for i, c in enumerate(grid.row_counts()):
            if c == 0:
                yield "empty line R_%d" % i
        for j, c in enumerate(grid.col_counts()):
            if c == 0:
                yield "empty line C_%d" % j
    if grid.npoints == 0:
        yield "scheme is empty"
    if len(grid.row_params) != nr:
        yield "row_params has %d entries for %d rows" % (len(grid.row_params), nr)
    elif len(set(grid.row_params)) != nr:
        yield "duplicate line parameters among rows"
    if len(grid.col_params) != nc:
        yield "col_params has %d entries for %d columns" % (len(grid.col_params), nc)
    elif len(set(grid.col_params)) != nc:
        yield "duplicate line parameters among columns"


def validate(grid, allow_empty_lines=False):
    """Diagnostic check of all PointGrid invariants.

    Multiplicities are structurally 1 (the incidence matrix is boolean),
    so reducedness needs no check.
    """
    return ValidationReport(tuple(_violations(grid, allow_empty_lines)))


def require_valid(grid, allow_empty_lines=False):
    bad = tuple(_violations(grid, allow_empty_lines))
    if bad:
        raise InvalidGrid("; ".join(bad))


def is_staircase(grid):
    """True iff rows are left-justified prefixes of non-increasing length >= 1."""
    require_valid(grid, allow_empty_lines=True)
    lengths = grid.row_counts()
    if any(l == 0 for l in lengths):
        return False
    if any(lengths[i] < lengths[i + 1] for i in range(len(lengths) - 1)):
        return False
    for row, l in zip(grid.incidence, lengths):
        if not all(row[:l]):
            return False
    return True


@dataclass(frozen=True)
class NormalizedGrid:
    grid: PointGrid
    row_perm: tuple     # row_perm[k] = original index of the row now at k
    col_perm: tuple


def normalize(grid):
    """Sorts rows and columns by decreasing point count (stable)."""
    require_valid(grid)
    nr, nc = grid.shape
    rcount = grid.row_counts()
    ccount = grid.col_counts()
    row_perm = tuple(sorted(range(nr), key=lambda i: (-rcount[i], i)))
    col_perm = tuple(sorted(range(nc), key=lambda j: (-ccount[j], j)))
    inc = tuple(
        tuple(grid.incidence[i][j] for j in col_perm)
        for i in row_perm
    )
    g = PointGrid(
        incidence=inc,
        row_params=tuple(grid.row_params[i] for i in row_perm),
        col_params=tuple(grid.col_params[j] for j in col_perm),
    )
    return NormalizedGrid(g, row_perm, col_perm)


def is_acm(grid):
    """ACM iff some row/column permutation makes the configuration a staircase."""
    return is_staircase(normalize(grid).grid)


def _present(inc, nr, nc, i, j):
    # sentinel: indices -1 count as "point present"
    if i < 0 or j < 0:
        return True
    if i >= nr or j >= nc:
        return False
    return inc[i][j]


def _staircase_corners_vertices(g):
    inc = g.incidence
    nr, nc = len(inc), len(inc[0])
    corners, vertices = [], []
    for i in range(nr + 1):
        for j in range(nc + 1):
            up = _present(inc, nr, nc, i - 1, j)
            left = _present(inc, nr, nc, i, j - 1)
            here = _present(inc, nr, nc, i, j)
            diag = _present(inc, nr, nc, i - 1, j - 1)
            if up and left and not here:
                corners.append((i, j))
            if not up and not left and diag:
                vertices.append((i, j))
    return sorted(corners), sorted(vertices)


def corners_and_vertices(grid):
    """Corner and vertex bidegrees of an ACM configuration (sorted lex).

    Corners: P_{i-1,j} and P_{i,j-1} present, P_ij absent.  Vertices:
    P_{i-1,j} and P_{i,j-1} absent, P_{i-1,j-1} present.  Both are
    computed on the normalized staircase; the bidegrees are intrinsic.
    """
    norm = normalize(grid).grid
    if not is_staircase(norm):
        raise NotACM("configuration is not ACM")
    return _staircase_corners_vertices(norm)


class PointKind(Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"


@dataclass(frozen=True)
class PointClass:
    position: tuple     # (i, j) in the grid's own coordinates
    kind: PointKind
    row_count: int      # p+1 = #(X cap R_i)
    col_count: int      # q+1 = #(X cap C_j)

    @property
    def separating_degree(self):
        """(q, p); the unique minimal separating degree when the grid is ACM."""
        return (self.col_count - 1, self.row_count - 1)


def classify_points(grid):
    """Interior/boundary classification of every point of an ACM scheme.

    A point is interior iff some corner dominates it strictly in both
    coordinates (in normalized position); removal of a boundary point
    keeps the scheme ACM, removal of an interior point breaks it.
    """
    norm = normalize(grid)
    if not is_staircase(norm.grid):
        raise NotACM("configuration is not ACM")
    corners, _ = _staircase_corners_vertices(norm.grid)
    rcount = grid.row_counts()
    ccount = grid.col_counts()
    out = {}
    for ni, row in enumerate(norm.grid.incidence):
        for nj, on in enumerate(row):
            if not on:
                continue
            interior = any(strictly_below((ni, nj), c) for c in corners)
            oi, oj = norm.row_perm[ni], norm.col_perm[nj]
            out[(oi, oj)] = PointClass(
                position=(oi, oj),
                kind=PointKind.INTERIOR if interior else PointKind.BOUNDARY,
                row_count=rcount[oi],
                col_count=ccount[oj],
            )
    return [out[pos] for pos in sorted(out)]
