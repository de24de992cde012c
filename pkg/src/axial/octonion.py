"""Exact rational octonions with a fixed multiplication table.

The eight-dimensional basis is (1, i0, .., i6); the seven imaginary units
are orthogonal square roots of -1 and the products of distinct units are
read from a stored 8x8 table. The same products also follow a rotational
rule: (i_t, i_{t+1}, i_{t+3}) with subscripts mod 7 multiply like the
quaternions (i, j, k). quaternion_triples_consistent recomputes the table
from that rule, so the two encodings audit each other.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import NonScalarNorm

__all__ = [
    "Octonion", "oct", "unit", "oct_mul", "oct_conj", "oct_norm",
    "quaternion_triples_consistent",
]

# products i_r * i_c of distinct imaginary units as (sign, unit index);
# row-major over i0..i6
_IMAG = (
    (None, (1, 3), (1, 6), (-1, 1), (1, 5), (-1, 4), (-1, 2)),
    ((-1, 3), None, (1, 4), (1, 0), (-1, 2), (1, 6), (-1, 5)),
    ((-1, 6), (-1, 4), None, (1, 5), (1, 1), (-1, 3), (1, 0)),
    ((1, 1), (-1, 0), (-1, 5), None, (1, 6), (1, 2), (-1, 4)),
    ((-1, 5), (1, 2), (-1, 1), (-1, 6), None, (1, 0), (1, 3)),
    ((1, 4), (-1, 6), (1, 3), (-1, 2), (-1, 0), None, (1, 1)),
    ((1, 2), (1, 5), (-1, 0), (1, 4), (-1, 3), (-1, 1), None),
)


@dataclass(frozen=True)
class Octonion:
    """Coordinates over (1, i0, .., i6), all Fractions."""

    coords: tuple

    def __add__(self, other):
        return Octonion(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        return Octonion(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return Octonion(tuple(-a for a in self.coords))

    def scale(self, t):
        return Octonion(tuple(a * t for a in self.coords))

    def __mul__(self, other):
        return oct_mul(self, other)

    def is_zero(self):
        return not any(self.coords)

    @property
    def real(self):
        return self.coords[0]

    def imag_part(self):
        return self.coords[1:]


ZERO = Octonion((Fraction(0),) * 8)
ONE = Octonion((Fraction(1),) + (Fraction(0),) * 7)


def oct(real=0, **units):
    """Convenience builder: oct(2, i0=1, i3=-4) = 2 + i0 - 4 i3."""
    coords = [Fraction(0)] * 8
    coords[0] = Fraction(real)
    for name, value in units.items():
        assert name.startswith("i")
        coords[1 + int(name[1:])] = Fraction(value)
    return Octonion(tuple(coords))


def unit(n):
    """The imaginary unit i_n."""
    coords = [Fraction(0)] * 8
    coords[1 + n] = Fraction(1)
    return Octonion(tuple(coords))


def oct_mul(x, y):
    """Bilinear extension of the unit table."""
    out = [Fraction(0)] * 8
    xc, yc = x.coords, y.coords
    for i in range(8):
        xi = xc[i]
        if not xi:
            continue
        for j in range(8):
            yj = yc[j]
            if not yj:
                continue
            v = xi * yj
            if i == 0:
                out[j] += v
            elif j == 0:
                out[i] += v
            elif i == j:
                out[0] -= v
            else:
                sign, k = _IMAG[i - 1][j - 1]
                out[1 + k] += sign * v
    return Octonion(tuple(out))


def oct_conj(x):
    """Fix the real coordinate, negate the seven imaginary ones."""
    return Octonion((x.coords[0],) + tuple(-a for a in x.coords[1:]))


def oct_norm(x):
    """N(x) = x * conj(x), which must come out scalar."""
    prod = oct_mul(x, oct_conj(x))
    if any(prod.coords[1:]):
        raise NonScalarNorm(f"x * conj(x) has imaginary part for x = {x}")
    return prod.coords[0]


def quaternion_triples_consistent():
    """Recompute the unit table from the (t, t+1, t+3) quaternion rule.

    Each triple must satisfy i*j = k, j*k = i, k*i = j with the reversed
    products negated; collecting those relations over all t fills in every
    distinct-unit product exactly once, and the result must equal the
    stored table.
    """
    derived = {}
    for t in range(7):
        i, j, k = t, (t + 1) % 7, (t + 3) % 7
        for (r, c, out) in ((i, j, k), (j, k, i), (k, i, j)):
            for key, val in (((r, c), (1, out)), ((c, r), (-1, out))):
                if key in derived and derived[key] != val:
                    return False
                derived[key] = val
    if len(derived) != 42:
        return False
    for r in range(7):
        for c in range(7):
            if r == c:
                continue
            if derived[(r, c)] != _IMAG[r][c]:
                return False
    return True
