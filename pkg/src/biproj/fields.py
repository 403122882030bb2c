"""Exact scalar fields and the row-echelon linear algebra the oracle runs on.

Matrices are numpy arrays throughout: dtype=object holding Fraction for the
rationals, dtype=int64 for a prime field.  With p = 2**31 - 1 every single
product of two reduced residues stays below 2**63, so the modular elimination
can use plain int64 arithmetic with one reduction per multiply.

Both field classes expose the same small API (scalar conversion, rref, rank,
reduce_rows, nullspace), so the oracle code is field-agnostic.
"""

from fractions import Fraction
from typing import NamedTuple

import numpy as np

from .errors import BadField

DEFAULT_PRIME = 2**31 - 1

# Grids with at most this many points are verified over the rationals by
# default; larger ones fall back to the prime field (with a rationals
# recheck on any disagreement, handled by the callers that compare results).
RATIONALS_POINT_LIMIT = 30


class Echelon(NamedTuple):
    """A reduced row-echelon basis: unit pivots, zeros above and below."""

    rows: np.ndarray
    pivots: tuple


class Rationals:
    """Exact arithmetic over Q, matrices as object arrays of Fraction."""

    name = "rationals"
    kind = "rationals"
    p = None

    def scalar(self, x):
        """Converts int / Fraction / '7/3' strings to Fraction."""
        return Fraction(x)

    def power(self, x, k):
        return Fraction(x) ** k

    def mul(self, x, y):
        return x * y

    def sub(self, x, y):
        return x - y

    def convert_params(self, params):
        """Returns line parameters as field scalars; they must stay distinct."""
        vals = [self.scalar(x) for x in params]
        if len(set(vals)) != len(vals):
            raise BadField("line parameters collide over the rationals")
        return vals

    def array(self, rows):
        rows = [[Fraction(x) for x in row] for row in rows]
        if not rows:
            return np.empty((0, 0), dtype=object)
        out = np.empty((len(rows), len(rows[0])), dtype=object)
        for i, row in enumerate(rows):
            out[i, :] = row
        return out

    def zeros(self, m, n):
        out = np.empty((m, n), dtype=object)
        out[:, :] = Fraction(0)
        return out

    def eye(self, n):
        out = self.zeros(n, n)
        for i in range(n):
            out[i, i] = Fraction(1)
        return out

    def ones(self, n):
        out = np.empty(n, dtype=object)
        out[:] = Fraction(1)
        return out

    def vector(self, vals):
        out = np.empty(len(vals), dtype=object)
        out[:] = [self.scalar(x) for x in vals]
        return out

    def neg_matrix(self, A):
        return -A

    def scale_columns(self, A, scale):
        return A * scale[None, :]

    def rref(self, A):
        """Reduced row echelon form; returns the nonzero rows and pivot columns."""
        A = A.copy()
        m, n = A.shape
        r = 0
        pivots = []
        for c in range(n):
            pivot = None
            for i in range(r, m):
                if A[i, c] != 0:
                    pivot = i
                    break
            if pivot is None:
                continue
            if pivot != r:
                A[[r, pivot], :] = A[[pivot, r], :]
            inv = 1 / A[r, c]
            A[r, :] = A[r, :] * inv
            for i in range(m):
                if i != r and A[i, c] != 0:
                    A[i, :] = A[i, :] - A[i, c] * A[r, :]
            pivots.append(c)
            r += 1
            if r == m:
                break
        return Echelon(A[:r], tuple(pivots))

    def rank(self, A):
        return len(self.rref(A).pivots)

    def reduce_rows(self, W, ech):
        """Eliminates ech's pivot coordinates from every row of W."""
        W = W.copy()
        for l, c in enumerate(ech.pivots):
            f = W[:, c].copy()
            if any(x != 0 for x in f):
                W = W - f[:, None] * ech.rows[l][None, :]
        return W

    def nullspace(self, A):
        """Rows form a basis of the right kernel {x : A x = 0}."""
        ech = self.rref(A)
        n = A.shape[1]
        pivot_set = set(ech.pivots)
        free = [c for c in range(n) if c not in pivot_set]
        basis = self.zeros(len(free), n)
        for k, fcol in enumerate(free):
            basis[k, fcol] = Fraction(1)
            for l, pcol in enumerate(ech.pivots):
                basis[k, pcol] = -ech.rows[l, fcol]
        return basis


class PrimeField:
    """GF(p) with vectorized int64 elimination; requires p < 2**31.5 or so."""

    kind = "prime"

    def __init__(self, p=DEFAULT_PRIME):
        assert p > 1
        # single products must fit in int64
        assert (p - 1) ** 2 < 2**63
        self.p = p
        self.name = "gf(%d)" % p

    def scalar(self, x):
        x = Fraction(x)
        num = x.numerator % self.p
        den = x.denominator % self.p
        if den == 0:
            raise BadField("denominator %d vanishes mod %d" % (x.denominator, self.p))
        return num * pow(den, -1, self.p) % self.p

    def power(self, x, k):
        return pow(int(x), k, self.p)

    def mul(self, x, y):
        return int(x) * int(y) % self.p

    def sub(self, x, y):
        return (int(x) - int(y)) % self.p

    def convert_params(self, params):
        vals = [self.scalar(x) for x in params]
        if len(set(vals)) != len(vals):
            raise BadField("line parameters collide mod %d" % self.p)
        return vals

    def array(self, rows):
        rows = [[self.scalar(x) if isinstance(x, (Fraction, str)) else int(x) for x in row] for row in rows]
        if not rows:
            return np.empty((0, 0), dtype=np.int64)
        return np.array(rows, dtype=np.int64) % self.p

    def zeros(self, m, n):
        return np.zeros((m, n), dtype=np.int64)

    def eye(self, n):
        return np.eye(n, dtype=np.int64)

    def ones(self, n):
        return np.ones(n, dtype=np.int64)

    def vector(self, vals):
        return np.array([self.scalar(x) for x in vals], dtype=np.int64)

    def neg_matrix(self, A):
        return (-A) % self.p

    def scale_columns(self, A, scale):
        return A * scale[None, :] % self.p

    def rref(self, A):
        p = self.p
        A = A.copy() % p
        m, n = A.shape
        r = 0
        pivots = []
        for c in range(n):
            hits = np.nonzero(A[r:, c])[0]
            if hits.size == 0:
                continue
            pivot = r + int(hits[0])
            if pivot != r:
                A[[r, pivot], :] = A[[pivot, r], :]
            A[r, :] = A[r, :] * pow(int(A[r, c]), -1, p) % p
            others = np.nonzero(A[:, c])[0]
            others = others[others != r]
            if others.size:
                A[others, :] = (A[others, :] - A[others, c, None] * A[r, None, :]) % p
            pivots.append(c)
            r += 1
            if r == m:
                break
        return Echelon(A[:r], tuple(pivots))

    def rank(self, A):
        return len(self.rref(A).pivots)

    def reduce_rows(self, W, ech):
        p = self.p
        W = W.copy() % p
        for l, c in enumerate(ech.pivots):
            f = W[:, c].copy()
            if np.any(f):
                W = (W - f[:, None] * ech.rows[l][None, :]) % p
        return W

    def nullspace(self, A):
        ech = self.rref(A)
        n = A.shape[1]
        pivot_set = set(ech.pivots)
        free = [c for c in range(n) if c not in pivot_set]
        basis = self.zeros(len(free), n)
        for k, fcol in enumerate(free):
            basis[k, fcol] = 1
            for l, pcol in enumerate(ech.pivots):
                basis[k, pcol] = (-int(ech.rows[l, fcol])) % self.p
        return basis


QQ = Rationals()
GFP = PrimeField()


def field_by_name(name):
    """Resolves 'rationals', 'prime', 'prime:65537', 'auto' (returns None)."""
    name = name.strip().lower()
    if name in ("auto", ""):
        return None
    if name in ("rationals", "qq", "q"):
        return QQ
    if name in ("prime", "gfp"):
        return GFP
    if name.startswith("prime:") or name.startswith("gfp:"):
        return PrimeField(int(name.split(":", 1)[1]))
    raise ValueError("unknown field %r" % name)


def default_field(npoints):
    """Rationals for small schemes, the default prime field beyond."""
    return QQ if npoints <= RATIONALS_POINT_LIMIT else GFP
