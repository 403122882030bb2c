"""File formats and text renderings.

Three JSON shapes: configuration files describing a point set on a grid of
lines, matrix files for Hilbert/difference matrices, and Betti files for
resolution tables.  Text renderings keep the look of the usual figures:
matrices with row indices down the left and column indices across the top,
Betti tables as lines of twisted summands R(-p,-q)^m joined by "(+)".
"""

import json
import re
from fractions import Fraction

import numpy as np

from .errors import InvalidGrid
from .grid import PointGrid
from .resolution import BettiTable


def _parse_param(x):
    if isinstance(x, bool):
        raise InvalidGrid("line parameter %r is not a number" % (x,))
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        try:
            return Fraction(x)
        except (ValueError, ZeroDivisionError):
            raise InvalidGrid("bad line parameter %r" % (x,))
    raise InvalidGrid("line parameter %r is not an integer or 'p/q' string" % (x,))


def _emit_param(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return str(x) if isinstance(x, Fraction) else int(x)


def parse_configuration(obj):
    """ConfigurationFile dict -> PointGrid."""
    if not isinstance(obj, dict):
        raise InvalidGrid("configuration must be a JSON object")
    for key in ("rows", "cols", "points"):
        if key not in obj:
            raise InvalidGrid("configuration is missing %r" % key)
    nrows, ncols = obj["rows"], obj["cols"]
    if not isinstance(nrows, int) or not isinstance(ncols, int):
        raise InvalidGrid("rows/cols must be integers")
    points = []
    for entry in obj["points"]:
        pair = tuple(entry)
        if len(pair) != 2 or not all(isinstance(c, int) for c in pair):
            raise InvalidGrid("point %r is not an [i, j] pair" % (entry,))
        if pair in points:
            raise InvalidGrid("duplicate point [%d, %d]" % pair)
        points.append(pair)
    kw = {}
    for key in ("row_params", "col_params"):
        if obj.get(key) is not None:
            kw[key] = [_parse_param(x) for x in obj[key]]
    return PointGrid.from_points(nrows, ncols, points, **kw)


def emit_configuration(grid, name=None):
    nr, nc = grid.shape
    out = {
        "rows": nr,
        "cols": nc,
        "points": [[i, j] for (i, j) in grid.points()],
        "row_params": [_emit_param(x) for x in grid.row_params],
        "col_params": [_emit_param(x) for x in grid.col_params],
    }
    if name is not None:
        out["name"] = name
    return out


def load_configuration(path):
    with open(path) as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as e:
            raise InvalidGrid("%s: not valid JSON (%s)" % (path, e))
    return parse_configuration(obj)


def matrix_to_json(entries, kind):
    a = np.asarray(entries)
    return {"kind": kind, "window": [int(a.shape[0] - 1), int(a.shape[1] - 1)],
            "entries": [[int(x) for x in row] for row in a]}


def render_matrix(entries):
    """Aligned text: row index down the left, column index across the top."""
    a = np.asarray(entries)
    nr, nc = a.shape
    cells = [[str(int(x)) for x in row] for row in a]
    widths = [max(len(str(j)), max(len(cells[i][j]) for i in range(nr)))
              for j in range(nc)]
    left = max(len(str(nr - 1)), 1)
    lines = [" " * left + "  " + "  ".join(str(j).rjust(widths[j]) for j in range(nc))]
    for i in range(nr):
        lines.append(str(i).rjust(left) + "  "
                     + "  ".join(cells[i][j].rjust(widths[j]) for j in range(nc)))
    return "\n".join(lines)


_LEVELS = ("beta0", "beta1", "beta2")


def betti_to_json(table, source, certified_conditions=None):
    out = {
        level: [{"degree": [p, q], "multiplicity": m} for (p, q), m in entries]
        for level, entries in zip(_LEVELS, table.levels)
    }
    out["source"] = source
    if certified_conditions is not None:
        out["certified_conditions"] = certified_conditions
    return out


def betti_from_json(obj):
    levels = []
    for level in _LEVELS:
        entries = []
        for item in obj.get(level, []):
            p, q = item["degree"]
            m = item["multiplicity"]
            if m < 1:
                raise ValueError("multiplicity %r < 1 at %s" % (m, level))
            entries.append(((int(p), int(q)), int(m)))
        levels.append(dict(entries))
    return BettiTable.make(*levels), obj.get("source")


def _render_term(degree, mult):
    p, q = degree
    term = "R(%d,%d)" % (-p, -q)
    return term if mult == 1 else term + "^%d" % mult


def render_betti(table):
    lines = []
    for name, entries in zip(_LEVELS, table.levels):
        if not entries:
            lines.append("%s: 0" % name)
        else:
            lines.append("%s: %s" % (name, " (+) ".join(
                _render_term(d, m) for d, m in entries)))
    return "\n".join(lines)


_TERM_RE = re.compile(r"^R\((-?\d+),(-?\d+)\)(?:\^(\d+))?$")


def parse_betti_text(text):
    """Inverse of render_betti (on canonical output)."""
    found = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        name, _, rest = line.partition(":")
        name = name.strip()
        if name not in _LEVELS:
            continue  # renderings may carry extra report lines around the table
        entries = {}
        rest = rest.strip()
        if rest != "0":
            for chunk in rest.split("(+)"):
                m = _TERM_RE.match(chunk.strip())
                if not m:
                    raise ValueError("bad summand %r" % chunk.strip())
                degree = (-int(m.group(1)), -int(m.group(2)))
                entries[degree] = entries.get(degree, 0) + int(m.group(3) or 1)
        found[name] = entries
    return BettiTable.make(*(found.get(level, {}) for level in _LEVELS))
