"""Exact linear algebra over the rationals.

Rank, determinants and nullspaces are computed with Bareiss fraction-free
elimination on integer-scaled rows, so every intermediate value is an exact
minor of the input. Nullspace bases come back in reduced row-echelon form,
giving one canonical answer per matrix. Integer eigenvalue multiplicities are
exact as well: a rank computation mod p prunes candidates (rank can only drop
mod p, so mod-p nullity 0 proves rational nullity 0) and survivors are
confirmed by integer elimination. No floating point is used anywhere.
"""

from fractions import Fraction
from math import lcm

import numpy as np

Rational = Fraction

# Largest prime below 2**30. Outer products in the mod-p elimination stay
# below p**2 < 2**60, safely inside int64.
_PRIME = 1073741789


class RatMatrix:
    """Dense matrix of Fractions (lowest terms, positive denominator)."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data):
        self.data = [[Fraction(x) for x in row] for row in data]
        self.rows = len(self.data)
        self.cols = len(self.data[0]) if self.data else 0
        assert all(len(row) == self.cols for row in self.data)

    @classmethod
    def identity(cls, n):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, r, c):
        return cls([[0] * c for _ in range(r)])

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, key):
        i, j = key
        return self.data[i][j]

    def __eq__(self, other):
        return isinstance(other, RatMatrix) and self.data == other.data

    def __repr__(self):
        return f"RatMatrix({self.rows}x{self.cols})"

    def transpose(self):
        return RatMatrix([[self.data[i][j] for i in range(self.rows)]
                          for j in range(self.cols)])

    def __add__(self, other):
        assert self.shape == other.shape
        return RatMatrix([[a + b for a, b in zip(ra, rb)]
                          for ra, rb in zip(self.data, other.data)])

    def __sub__(self, other):
        assert self.shape == other.shape
        return RatMatrix([[a - b for a, b in zip(ra, rb)]
                          for ra, rb in zip(self.data, other.data)])

    def scale(self, c):
        c = Fraction(c)
        return RatMatrix([[c * x for x in row] for row in self.data])

    def __mul__(self, other):
        if isinstance(other, RatMatrix):
            assert self.cols == other.rows
            cols = other.transpose().data
            return RatMatrix([[sum(a * b for a, b in zip(row, col))
                               for col in cols] for row in self.data])
        return self.scale(other)

    def mul_vec(self, vec):
        assert len(vec) == self.cols
        return [sum(a * b for a, b in zip(row, vec)) for row in self.data]

    def is_symmetric(self):
        return self.rows == self.cols and all(
            self.data[i][j] == self.data[j][i]
            for i in range(self.rows) for j in range(i))

    def int_rows(self):
        """Rows cleared to integers, with the per-row scale factors."""
        out, scales = [], []
        for row in self.data:
            s = lcm(*(x.denominator for x in row)) if row else 1
            scales.append(s)
            out.append([int(x * s) for x in row])
        return out, scales


def _bareiss_forward(m, ncols):
    """Fraction-free echelon form of integer rows, in place.

    Returns (pivot_cols, sign). Every division is exact (one-step Bareiss);
    an inexact division would mean corrupted input and raises.
    """
    sign = 1
    prev = 1
    pivots = []
    r = 0
    nrows = len(m)
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if m[i][c]), None)
        if p is None:
            continue
        if p != r:
            m[r], m[p] = m[p], m[r]
            sign = -sign
        piv = m[r][c]
        row_r = m[r]
        for i in range(r + 1, nrows):
            row_i = m[i]
            mic = row_i[c]
            for j in range(c + 1, ncols):
                num = piv * row_i[j] - mic * row_r[j]
                q, rem = divmod(num, prev)
                assert rem == 0, "Bareiss exact division failed"
                row_i[j] = q
            row_i[c] = 0
        prev = piv
        pivots.append(c)
        r += 1
    return pivots, sign


def rank(m):
    """Rank over the rationals."""
    rows, _ = m.int_rows()
    pivots, _ = _bareiss_forward(rows, m.cols)
    return len(pivots)


def det(m):
    """Determinant over the rationals (Bareiss; exact)."""
    assert m.rows == m.cols, "determinant needs a square matrix"
    if m.rows == 0:
        return Fraction(1)
    rows, scales = m.int_rows()
    pivots, sign = _bareiss_forward(rows, m.cols)
    if len(pivots) < m.rows:
        return Fraction(0)
    last = rows[m.rows - 1][pivots[-1]]
    denom = 1
    for s in scales:
        denom *= s
    return Fraction(sign * last, denom)


def _rref_rows(m):
    """Reduced row-echelon rows (Fractions) and pivot columns, ascending."""
    rows, _ = m.int_rows()
    pivots, _ = _bareiss_forward(rows, m.cols)
    r = len(pivots)
    red = [[Fraction(x, rows[i][pivots[i]]) for x in rows[i]] for i in range(r)]
    for i in range(r - 2, -1, -1):
        for j in range(i + 1, r):
            coef = red[i][pivots[j]]
            if coef:
                rj = red[j]
                red[i] = [a - coef * b for a, b in zip(red[i], rj)]
    return red, pivots


def rref(m):
    """Canonical reduced row-echelon form: (nonzero rows, pivot columns)."""
    return _rref_rows(m)


def nullspace_basis(m):
    """Basis of the right kernel, canonical.

    One vector per free column (ascending); vector for free column f has a 1
    there, 0 at the other free columns, so stacked together the basis is
    itself in reduced echelon shape.
    """
    red, pivots = _rref_rows(m)
    pivot_set = set(pivots)
    basis = []
    for f in range(m.cols):
        if f in pivot_set:
            continue
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -red[i][f]
        basis.append(v)
    return basis


def inverse(m):
    """Exact inverse via Gauss-Jordan on an augmented system."""
    assert m.rows == m.cols
    n = m.rows
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(m.data)]
    for c in range(n):
        p = next((i for i in range(c, n) if aug[i][c]), None)
        if p is None:
            raise ZeroDivisionError("matrix is singular")
        aug[c], aug[p] = aug[p], aug[c]
        piv = aug[c][c]
        aug[c] = [x / piv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c]:
                coef = aug[i][c]
                aug[i] = [a - coef * b for a, b in zip(aug[i], aug[c])]
    return RatMatrix([row[n:] for row in aug])


def _rank_mod_p(a, p=_PRIME):
    """Rank of an int64 numpy matrix mod p (prime); exact modular arithmetic."""
    a = np.mod(a, p)
    nr, nc = a.shape
    r = 0
    for c in range(nc):
        if r == nr:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r] = a[r] * inv % p
        nzb = np.nonzero(a[r + 1:, c])[0]
        if nzb.size:
            rows = r + 1 + nzb
            a[rows] = (a[rows] - np.outer(a[rows, c], a[r])) % p
        r += 1
    return r


def _int_rows_mod(rows, p=_PRIME):
    return np.array([[x % p for x in row] for row in rows], dtype=np.int64)


def integer_eigen_multiplicity(m, t):
    """Multiplicity of the integer t as an eigenvalue of m, exactly.

    Nullity of m - t*I over Q. A mod-p rank bound settles the common case
    (nullity 0); anything else is confirmed by fraction-free elimination.
    """
    assert m.rows == m.cols, "eigenvalues need a square matrix"
    n = m.rows
    shifted = RatMatrix([[m.data[i][j] - (t if i == j else 0) for j in range(n)]
                         for i in range(n)])
    rows, _ = shifted.int_rows()
    if n - _rank_mod_p(_int_rows_mod(rows)) == 0:
        return 0
    pivots, _ = _bareiss_forward(rows, n)
    return n - len(pivots)


def eigen_multiplicity_range(m, lo, hi):
    """Exact {t: multiplicity} for integer t in [lo, hi], nonzero mults only.

    Same contract as calling integer_eigen_multiplicity per candidate, with
    the integer conversion and mod-p prescreen hoisted out of the loop.
    """
    assert m.rows == m.cols
    n = m.rows
    rows, _ = m.int_rows()
    base = _int_rows_mod(rows)
    diag = np.arange(n)
    out = {}
    for t in range(lo, hi + 1):
        a = base.copy()
        a[diag, diag] = (a[diag, diag] - t) % _PRIME
        if n - _rank_mod_p(a) == 0:
            continue
        work = [row[:] for row in rows]
        for i in range(n):
            work[i][i] -= t
        pivots, _ = _bareiss_forward(work, n)
        mult = n - len(pivots)
        if mult:
            out[t] = mult
    return out
