"""Brute-force verification over an exact field.

Everything here is evaluation-based: a form of bidegree (u,v) is identified
with its vector of values at the scheme's points (row R_i is [1 : t_i],
column C_j is [1 : u_j], so x0 and y0 evaluate to 1, x1 to t and y1 to u).
The value space V_(u,v) inside k^N is the column space of the evaluation
matrix; its dimension is the Hilbert function.  Betti numbers come from
Koszul homology: since x0 is a nonzerodivisor on the coordinate ring, Tor
can be computed either from the full four-variable complex on the V's
("direct" engine) or from the three-variable complex on the quotients
V_(u,v)/V_(u-1,v) ("reduced" engine, the default — much smaller blocks).
"""

from collections import Counter
from itertools import combinations

import numpy as np

from .errors import InvalidGrid, WindowTooSmall
from .fields import Echelon, default_field
from .grid import require_valid
from .hilbert import HilbertMatrix
from .resolution import BettiTable


def _powers(field, vals, kmax):
    """Array (kmax+1, N) whose row k holds vals**k."""
    n = vals.shape[0]
    if field.kind == "prime":
        out = np.ones((kmax + 1, n), dtype=np.int64)
        for k in range(1, kmax + 1):
            out[k] = out[k - 1] * vals % field.p
    else:
        out = np.empty((kmax + 1, n), dtype=object)
        out[0, :] = field.scalar(1)
        for k in range(1, kmax + 1):
            out[k] = out[k - 1] * vals
    return out


class _Spaces:
    """Echelon bases of every value space V_(u,v) on a window."""

    def __init__(self, grid, field, window):
        require_valid(grid, allow_empty_lines=True)
        self.field = field
        self.window = window
        self.points = grid.points()
        ts = field.convert_params(grid.row_params)
        us = field.convert_params(grid.col_params)
        self.tvals = field.vector([ts[i] for (i, _) in self.points])
        self.uvals = field.vector([us[j] for (_, j) in self.points])
        wi, wj = window
        tpow = _powers(field, self.tvals, wi)
        upow = _powers(field, self.uvals, wj)
        self.ech = {}
        for u in range(wi + 1):
            for v in range(wj + 1):
                rows = tpow[: u + 1, None, :] * upow[None, : v + 1, :]
                if field.kind == "prime":
                    rows = rows % field.p
                rows = rows.reshape((u + 1) * (v + 1), len(self.points))
                self.ech[(u, v)] = field.rref(rows)

    def dim(self, u, v):
        if u < 0 or v < 0:
            return 0
        return len(self.ech[(u, v)].pivots)

    def hilbert(self):
        wi, wj = self.window
        m = np.array(
            [[self.dim(i, j) for j in range(wj + 1)] for i in range(wi + 1)],
            dtype=np.int64,
        )
        return HilbertMatrix(m, degree=len(self.points))


def _base_window(grid, margin=2):
    nr, nc = grid.shape
    return (nr - 1 + margin, nc - 1 + margin)


def hilbert_oracle(grid, field=None, window=None):
    """M(i,j) = rank of the evaluation matrix, on at least the base window."""
    field = field or default_field(grid.npoints)
    wi, wj = _base_window(grid)
    if window is not None:
        wi, wj = max(wi, window[0]), max(wj, window[1])
    return _Spaces(grid, field, (wi, wj)).hilbert()


def _upset_root(cells, window):
    """The unique minimal element if cells is exactly its up-set, else None."""
    if not cells:
        return None
    mins = [
        c
        for c in cells
        if not any(d != c and d[0] <= c[0] and d[1] <= c[1] for d in cells)
    ]
    if len(mins) != 1:
        return None
    r, s = mins[0]
    wi, wj = window
    expected = {(i, j) for i in range(r, wi + 1) for j in range(s, wj + 1)}
    return (r, s) if cells == expected else None


def separating_degree_oracle(grid_Y, point, field=None, window=None):
    """Unique minimal separating degree of a point of Y, or None.

    Computes H_Y and H_{Y minus P} on the window literally; the drop set
    must be exactly the up-set of a single bidegree.
    """
    field = field or default_field(grid_Y.npoints)
    m_y = hilbert_oracle(grid_Y, field, window)
    m_z = hilbert_oracle(grid_Y.without(point), field, window)
    diff = m_y.entries - m_z.entries
    assert ((diff == 0) | (diff == 1)).all()
    cells = {(int(i), int(j)) for i, j in zip(*np.nonzero(diff))}
    return _upset_root(cells, m_y.window)


def drop_sets(grid, field=None, window=None):
    """All separating drop sets at once: point -> {(i,j) : rank drops}.

    Deleting point P's coordinate loses a dimension exactly when the unit
    vector e_P lies in V_(i,j); in a fully reduced echelon basis that means
    P is a pivot column whose basis row is e_P itself.
    """
    field = field or default_field(grid.npoints)
    wi, wj = _base_window(grid)
    if window is not None:
        wi, wj = max(wi, window[0]), max(wj, window[1])
    spaces = _Spaces(grid, field, (wi, wj))
    drops = {pos: set() for pos in spaces.points}
    for (u, v), ech in spaces.ech.items():
        if not ech.pivots:
            continue
        unit = np.nonzero((ech.rows != 0).sum(axis=1) == 1)[0]
        for l in unit:
            drops[spaces.points[ech.pivots[int(l)]]].add((u, v))
    return drops


def _empty_ech(field, n):
    return Echelon(field.zeros(0, n), ())


class _KoszulModule:
    """Graded components and variable action for one engine.

    reduced: components N'_(u,v) = V_(u,v)/V_(u-1,v), variables x1, y0, y1.
    direct:  components V_(u,v), variables x0, x1, y0, y1.
    """

    def __init__(self, spaces, reduced=True):
        self.spaces = spaces
        self.field = spaces.field
        self.reduced = reduced
        n = len(spaces.points)
        ones = self.field.ones(n)
        if reduced:
            self.vars = (((1, 0), spaces.tvals), ((0, 1), ones), ((0, 1), spaces.uvals))
        else:
            self.vars = (
                ((1, 0), ones),
                ((1, 0), spaces.tvals),
                ((0, 1), ones),
                ((0, 1), spaces.uvals),
            )
        self._comp = {}
        self._mult = {}

    def _component(self, u, v):
        """(submodule echelon to quotient by, basis echelon of the component)."""
        key = (u, v)
        if key in self._comp:
            return self._comp[key]
        field = self.field
        n = len(self.spaces.points)
        if u < 0 or v < 0:
            out = (_empty_ech(field, n), _empty_ech(field, n))
        elif not self.reduced:
            out = (_empty_ech(field, n), self.spaces.ech[(u, v)])
        else:
            sub = self.spaces.ech[(u - 1, v)] if u >= 1 else _empty_ech(field, n)
            w = field.reduce_rows(self.spaces.ech[(u, v)].rows, sub)
            bas = field.rref(w)
            assert len(bas.pivots) == self.spaces.dim(u, v) - self.spaces.dim(u - 1, v)
            out = (sub, bas)
        self._comp[key] = out
        return out

    def dim(self, u, v):
        return len(self._component(u, v)[1].pivots)

    def mult(self, z, u, v):
        """Matrix of multiplication by variable z from component (u,v)."""
        key = (z, u, v)
        if key in self._mult:
            return self._mult[key]
        field = self.field
        (du, dv), scale = self.vars[z]
        _, src = self._component(u, v)
        tsub, tbas = self._component(u + du, v + dv)
        w = field.scale_columns(src.rows, scale)
        if tsub.pivots:
            w = field.reduce_rows(w, tsub)
        coords = w[:, list(tbas.pivots)]
        resid = field.reduce_rows(w, tbas)
        assert not (resid != 0).any(), "image escapes the target component"
        self._mult[key] = coords
        return coords


def _homology_at(module, i, j):
    """Dimensions (H_0, ..., H_n) of the Koszul complex in bidegree (i,j)."""
    field = module.field
    nvars = len(module.vars)
    degs = [d for d, _ in module.vars]

    def cdeg(T):
        return (i - sum(degs[t][0] for t in T), j - sum(degs[t][1] for t in T))

    subsets = [list(combinations(range(nvars), k)) for k in range(nvars + 1)]
    dims = [{T: module.dim(*cdeg(T)) for T in subsets[k]} for k in range(nvars + 1)]
    kdim = [sum(dims[k].values()) for k in range(nvars + 1)]
    ranks = [0] * (nvars + 2)
    for k in range(1, nvars + 1):
        if kdim[k] == 0 or kdim[k - 1] == 0:
            continue
        rofs, ofs = {}, 0
        for T in subsets[k]:
            rofs[T] = ofs
            ofs += dims[k][T]
        cofs, ofs = {}, 0
        for T in subsets[k - 1]:
            cofs[T] = ofs
            ofs += dims[k - 1][T]
        mat = field.zeros(kdim[k], kdim[k - 1])
        for T in subsets[k]:
            if dims[k][T] == 0:
                continue
            for l in range(k):
                T2 = T[:l] + T[l + 1 :]
                if dims[k - 1][T2] == 0:
                    continue
                block = module.mult(T[l], *cdeg(T))
                if l % 2:
                    block = field.neg_matrix(block)
                r0, c0 = rofs[T], cofs[T2]
                mat[r0 : r0 + dims[k][T], c0 : c0 + dims[k - 1][T2]] = block
        ranks[k] = field.rank(mat)
    h = [kdim[k] - ranks[k] - ranks[k + 1] for k in range(nvars + 1)]
    # Tor_0(S/I, k) is k in degree (0,0): a strong internal consistency check
    assert h[0] == (1 if (i, j) == (0, 0) else 0)
    return h


def _betti_counters(spaces, engine):
    module = _KoszulModule(spaces, reduced=(engine == "reduced"))
    nvars = len(module.vars)
    counters = {k: Counter() for k in range(1, nvars + 1)}
    wi, wj = spaces.window
    for i in range(wi + 1):
        for j in range(wj + 1):
            h = _homology_at(module, i, j)
            for k in range(1, nvars + 1):
                if h[k]:
                    counters[k][(i, j)] = h[k]
    return counters


def betti_oracle(grid, field=None, engine="reduced", start_margin=2, max_margin=8):
    """True bigraded Betti numbers by Koszul homology.

    beta0 = Tor_1(S/I_X), beta1 = Tor_2, beta2 = Tor_3.  The window starts
    at margin `start_margin` beyond the grid size and doubles whenever a
    nonzero Betti number sits on the frontier, up to `max_margin`.
    """
    if engine not in ("reduced", "direct"):
        raise ValueError("unknown engine %r" % engine)
    field = field or default_field(grid.npoints)
    margin = start_margin
    while True:
        window = _base_window(grid, margin)
        spaces = _Spaces(grid, field, window)
        counters = _betti_counters(spaces, engine)
        frontier = [
            (i, j)
            for k in (1, 2, 3)
            for (i, j) in counters[k]
            if i == window[0] or j == window[1]
        ]
        if not frontier:
            table = BettiTable.make(counters[1], counters[2], counters.get(3, {}))
            assert not table.hilbert_defects(spaces.hilbert())
            if engine == "direct":
                assert not counters[4], "nonzero Tor_4: %s" % counters[4]
            return table
        if margin >= max_margin:
            raise WindowTooSmall(
                "Betti numbers %s on the frontier at margin %d" % (frontier, margin)
            )
        margin = min(max_margin, margin * 2)


def tor_dimensions(grid, k, field=None, engine="direct", window=None):
    """Counter of dim Tor_k(S/I_X) by bidegree over the window."""
    field = field or default_field(grid.npoints)
    wi, wj = _base_window(grid)
    if window is not None:
        wi, wj = max(wi, window[0]), max(wj, window[1])
    spaces = _Spaces(grid, field, (wi, wj))
    module = _KoszulModule(spaces, reduced=(engine == "reduced"))
    if k > len(module.vars):
        raise ValueError("engine %r has no homological degree %d" % (engine, k))
    out = Counter()
    for i in range(wi + 1):
        for j in range(wj + 1):
            h = _homology_at(module, i, j)
            if h[k]:
                out[(i, j)] = h[k]
    return out


def _evaluation_matrix(spaces_field, tvals, uvals, u, v):
    """N x (u+1)(v+1) matrix: rows are points, columns monomials (a,b)."""
    field = spaces_field
    tpow = _powers(field, tvals, u)
    upow = _powers(field, uvals, v)
    cols = tpow[: u + 1, None, :] * upow[None, : v + 1, :]
    if field.kind == "prime":
        cols = cols % field.p
    return cols.reshape((u + 1) * (v + 1), tvals.shape[0]).T


def generator_count_oracle(grid, field=None, d=None):
    """Number of minimal generators of I_X in bidegree d:
    dim I_d - dim(S_(1,0) * I_{d-(1,0)} + S_(0,1) * I_{d-(0,1)})."""
    field = field or default_field(grid.npoints)
    i, j = d
    if i < 0 or j < 0:
        raise ValueError("bidegree must be componentwise nonnegative")
    require_valid(grid, allow_empty_lines=True)
    ts = field.convert_params(grid.row_params)
    us = field.convert_params(grid.col_params)
    pts = grid.points()
    tvals = field.vector([ts[r] for (r, _) in pts])
    uvals = field.vector([us[c] for (_, c) in pts])

    def ideal_basis(u, v):
        return field.nullspace(_evaluation_matrix(field, tvals, uvals, u, v))

    here = ideal_basis(i, j)
    if here.shape[0] == 0:
        return 0
    spans = []
    if i >= 1:
        ker = ideal_basis(i - 1, j)
        n = ker.shape[0]
        if n:
            x0 = field.zeros(n, (i + 1) * (j + 1))
            x0[:, : i * (j + 1)] = ker
            x1 = field.zeros(n, (i + 1) * (j + 1))
            x1[:, (j + 1) :] = ker
            spans += [x0, x1]
    if j >= 1:
        ker = ideal_basis(i, j - 1)
        n = ker.shape[0]
        if n:
            k3 = ker.reshape(n, i + 1, j)
            y0 = field.zeros(n, (i + 1) * (j + 1)).reshape(n, i + 1, j + 1)
            y0[:, :, :j] = k3
            y1 = field.zeros(n, (i + 1) * (j + 1)).reshape(n, i + 1, j + 1)
            y1[:, :, 1:] = k3
            spans += [y0.reshape(n, -1), y1.reshape(n, -1)]
    if not spans:
        return here.shape[0]
    return here.shape[0] - field.rank(np.vstack(spans))


def verify_separator(sep, grid_Z, removed, field=None):
    """Checks a separator against a scheme: its product of linear forms must
    vanish on every point of Z, be nonzero at the removed point, and have
    bidegree (#row lines, #col lines) matching the declared degree."""
    field = field or default_field(grid_Z.npoints + 1)
    require_valid(grid_Z, allow_empty_lines=True)
    nr, nc = grid_Z.shape
    h, k = removed
    if not (0 <= h < nr and 0 <= k < nc):
        raise InvalidGrid("removed point (%d,%d) outside the grid" % (h, k))
    ts = field.convert_params(grid_Z.row_params)
    us = field.convert_params(grid_Z.col_params)
    nrows = sum(1 for kind, _ in sep.lines if kind == "R")
    ncols = len(sep.lines) - nrows
    if (nrows, ncols) != tuple(sep.degree):
        return False
    for kind, idx in sep.lines:
        if (kind == "R" and not 0 <= idx < nr) or (kind == "C" and not 0 <= idx < nc):
            raise InvalidGrid("separator line %s_%d outside the grid" % (kind, idx))

    def value(t, u):
        acc = field.scalar(1)
        for kind, idx in sep.lines:
            term = field.sub(t, ts[idx]) if kind == "R" else field.sub(u, us[idx])
            acc = field.mul(acc, term)
        return acc

    for (i, j) in grid_Z.points():
        if value(ts[i], us[j]) != 0:
            return False
    return value(ts[h], us[k]) != 0
