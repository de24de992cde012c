"""Exact 27-dimensional Albert algebra over the rational octonions.

Elements are 3x3 Hermitian octonion matrices

    [[d,       F, conj(E)],
     [conj(F), e, D      ],
     [E, conj(D), f      ]]

written (d, e, f | D, E, F), with the Jordan product X o Y given by the
symmetrized matrix product. Four specific primitive idempotents a, b, c, d
generate the whole algebra: the 27 iterated products listed in _BUILD form
a basis. Every computed product is diffed against _REFERENCE, a frozen
transcription of the expected coordinates, so a bug anywhere in the
octonion table or the Jordan multiplication shows up as a named mismatch
instead of silently shifting downstream results.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
import random

from .errors import NotHermitianResult, NotIdempotent, ReferenceMismatch
from .exact import RatMatrix, inverse, rank, det
from .matsuo import Algebra
from .jordan import jordan_check, is_primitive_axis, peirce
from .octonion import Octonion, ONE, ZERO, oct_conj, oct_norm, oct_mul, unit, \
    quaternion_triples_consistent

__all__ = [
    "AlbertElement", "albert_jordan_mul", "trace", "coords27", "from_coords27",
    "standard_axes", "products_from_axes", "generated_basis_27",
    "basis_matrix", "basis_certificate", "albert_algebra", "AlbertReport",
    "verify_albert_axial", "BASIS_NAMES",
]


@dataclass(frozen=True)
class AlbertElement:
    d: Fraction
    e: Fraction
    f: Fraction
    D: Octonion
    E: Octonion
    F: Octonion

    def __add__(self, other):
        return AlbertElement(self.d + other.d, self.e + other.e,
                             self.f + other.f, self.D + other.D,
                             self.E + other.E, self.F + other.F)

    def __sub__(self, other):
        return AlbertElement(self.d - other.d, self.e - other.e,
                             self.f - other.f, self.D - other.D,
                             self.E - other.E, self.F - other.F)

    def scale(self, t):
        t = Fraction(t)
        return AlbertElement(self.d * t, self.e * t, self.f * t,
                             self.D.scale(t), self.E.scale(t), self.F.scale(t))


def to_matrix(x):
    return (
        (ONE.scale(x.d), x.F, oct_conj(x.E)),
        (oct_conj(x.F), ONE.scale(x.e), x.D),
        (x.E, oct_conj(x.D), ONE.scale(x.f)),
    )


def _mat_mul(a, b):
    return tuple(
        tuple(
            oct_mul(a[i][0], b[0][j]) + oct_mul(a[i][1], b[1][j])
            + oct_mul(a[i][2], b[2][j])
            for j in range(3))
        for i in range(3))


def _from_matrix(m):
    """Read (d, e, f | D, E, F) back off a matrix, insisting it is Hermitian."""
    for i in range(3):
        if any(m[i][i].coords[1:]):
            raise NotHermitianResult(f"diagonal entry {i} is not scalar")
        for j in range(i + 1, 3):
            if m[j][i] != oct_conj(m[i][j]):
                raise NotHermitianResult(
                    f"entries ({i},{j}) and ({j},{i}) are not conjugate")
    return AlbertElement(m[0][0].real, m[1][1].real, m[2][2].real,
                         m[1][2], m[2][0], m[0][1])


def albert_jordan_mul(x, y):
    """X o Y = (XY + YX) / 2; the symmetrization must land back in the algebra."""
    a, b = to_matrix(x), to_matrix(y)
    ab, ba = _mat_mul(a, b), _mat_mul(b, a)
    half = Fraction(1, 2)
    sym = tuple(tuple((ab[i][j] + ba[i][j]).scale(half) for j in range(3))
                for i in range(3))
    return _from_matrix(sym)


def trace(x):
    return x.d + x.e + x.f


def coords27(x):
    """Flatten to (d, e, f, D0..D7, E0..E7, F0..F7)."""
    return (x.d, x.e, x.f) + x.D.coords + x.E.coords + x.F.coords


def from_coords27(v):
    v = tuple(Fraction(t) for t in v)
    assert len(v) == 27
    return AlbertElement(v[0], v[1], v[2], Octonion(v[3:11]),
                         Octonion(v[11:19]), Octonion(v[19:27]))


# frozen coordinates of the 27 generated-basis elements, each stored as
# (name, denominator, d, e, f, D, E, F) with the octonions given as
# {coordinate index: integer numerator} over (1, i0, .., i6)
_REFERENCE = (
    ("a", 2, 1, 1, 0, {}, {}, {1: 1}),
    ("b", 2, 1, 0, 1, {}, {2: 1}, {}),
    ("c", 2, 0, 1, 1, {3: 1}, {}, {}),
    ("d", 9, 1, 4, 4, {5: 4}, {4: 2}, {7: 2}),
    ("ab", 8, 2, 0, 0, {4: 1}, {2: 1}, {1: 1}),
    ("ac", 8, 0, 2, 0, {3: 1}, {7: -1}, {1: 1}),
    ("ad", 36, 2, 8, 0, {2: -2, 5: 4}, {4: 2, 6: -4}, {1: 5, 7: 4}),
    ("bc", 8, 0, 0, 2, {3: 1}, {2: 1}, {5: 1}),
    ("bd", 36, 2, 0, 8, {5: 4, 6: 2}, {2: 5, 4: 4}, {3: -4, 7: 2}),
    ("cd", 18, 0, 4, 4, {3: 4, 5: 4}, {1: 1, 4: 1}, {6: -1, 7: 1}),
    ("a(bc)", 32, 0, 0, 0, {3: 1, 4: 1}, {2: 1, 7: -1}, {5: 2}),
    ("b(ac)", 32, 0, 0, 0, {3: 1, 4: 1}, {7: -2}, {1: 1, 5: 1}),
    ("c(ab)", 32, 0, 0, 0, {4: 2}, {2: 1, 7: -1}, {1: 1, 5: 1}),
    ("a(bd)", 144, 4, 0, 0, {2: -4, 4: 5, 5: 4, 6: 2},
     {2: 5, 4: 4, 5: 2, 6: -4}, {1: 2, 3: -8, 7: 4}),
    ("a(cd)", 72, 0, 8, 0, {0: -1, 2: -1, 3: 4, 5: 4},
     {1: 1, 4: 1, 6: -4, 7: -4}, {1: 4, 6: -2, 7: 2}),
    ("b(ad)", 144, 4, 0, 0, {2: -2, 4: 5, 5: 4, 6: 4},
     {2: 2, 4: 4, 6: -8}, {0: 2, 1: 5, 3: -4, 7: 4}),
    ("b(cd)", 72, 0, 0, 8, {3: 4, 5: 4, 6: 1, 7: 1},
     {1: 2, 2: 4, 4: 2}, {3: -4, 5: 4, 6: -1, 7: 1}),
    ("c(ad)", 144, 0, 16, 0, {2: -4, 3: 8, 5: 8},
     {1: 4, 4: 2, 6: -4, 7: -5}, {1: 5, 4: -4, 6: -2, 7: 4}),
    ("c(bd)", 144, 0, 0, 16, {3: 8, 5: 8, 6: 4},
     {0: 4, 1: 2, 2: 5, 4: 4}, {3: -4, 5: 5, 6: -4, 7: 2}),
    ("(ab)(cd)", 288, 0, 0, 0, {0: -1, 2: -1, 4: 8, 6: 1, 7: 1},
     {1: 2, 2: 4, 3: -1, 4: 2, 5: -1, 6: -4, 7: -4},
     {0: -1, 1: 4, 2: -1, 3: -4, 5: 4, 6: -2, 7: 2}),
    ("(ac)(bd)", 576, 0, 0, 0, {0: 2, 1: 4, 2: -4, 3: 8, 4: 5, 5: 8, 6: 4},
     {0: 4, 1: 2, 5: 2, 6: -4, 7: -10},
     {1: 2, 2: 2, 3: -8, 4: 4, 5: 5, 6: -4, 7: 4}),
    ("d(a(bc))", 576, 0, 0, 0, {0: 2, 3: 8, 4: 8, 6: 2, 7: -4},
     {0: -8, 1: 2, 2: 5, 5: -2, 7: -5},
     {0: -2, 3: -4, 4: 4, 5: 10, 6: -2}),
    ("d(b(ac))", 576, 0, 0, 0, {0: 4, 2: -2, 3: 8, 4: 8, 7: -2},
     {0: -4, 1: 2, 5: -2, 6: -4, 7: -10},
     {0: -2, 1: 5, 4: 8, 5: 5, 6: -2}),
    ("a(b(cd))", 288, 0, 0, 0, {0: -2, 2: -2, 3: 4, 4: 4, 5: 4, 6: 1, 7: 1},
     {1: 2, 2: 4, 3: 1, 4: 2, 5: 1, 6: -4, 7: -4},
     {3: -8, 5: 8, 6: -2, 7: 2}),
    ("(ab)(c(ad))", 2304, 10, 10, 0,
     {0: -4, 1: 4, 2: -2, 3: 5, 4: 21, 5: 4, 6: 4, 7: 2},
     {0: 4, 1: 8, 2: 5, 3: -2, 4: 8, 5: -4, 6: -16, 7: -18},
     {0: 2, 1: 26, 2: -4, 3: -4, 4: -8, 5: 3, 6: -4, 7: 8}),
    ("(ab)(c(bd))", 2304, 10, 0, 10,
     {0: -2, 1: -4, 2: -4, 3: 5, 4: 21, 5: 4, 6: 2, 7: 4},
     {0: 8, 1: 4, 2: 26, 3: -4, 4: 8, 5: 2, 6: -4, 7: -3},
     {0: -4, 1: 5, 2: -2, 3: -16, 4: -4, 5: 18, 6: -8, 7: 8}),
    ("(ac)(b(cd))", 1152, 0, 8, 8,
     {0: -1, 1: 4, 2: -1, 3: 16, 5: 8, 6: 2, 7: 2},
     {0: 4, 1: 1, 2: 4, 3: 1, 4: 1, 5: 1, 6: -4, 7: -12},
     {0: 1, 1: 4, 2: 1, 3: -8, 4: 4, 5: 12, 6: -4, 7: 4}),
)

BASIS_NAMES = tuple(r[0] for r in _REFERENCE)

# entries 4..26 as products of earlier entries (left index, right index)
_BUILD = (
    (0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3),
    (0, 7), (1, 5), (2, 4), (0, 8), (0, 9), (1, 6), (1, 9), (2, 6), (2, 8),
    (4, 9), (5, 8), (3, 10), (3, 11), (0, 16), (4, 17), (4, 18), (5, 16),
)


def _reference_element(row):
    name, den, rd, re_, rf, dD, dE, dF = row

    def build(dd):
        coords = [Fraction(0)] * 8
        for k, v in dd.items():
            coords[k] = Fraction(v, den)
        return Octonion(tuple(coords))

    return AlbertElement(Fraction(rd, den), Fraction(re_, den),
                         Fraction(rf, den), build(dD), build(dE), build(dF))


def standard_axes():
    """The four generating idempotents, each checked to be a trace-1 idempotent."""
    axes = tuple(_reference_element(_REFERENCE[i]) for i in range(4))
    for name, x in zip(BASIS_NAMES, axes):
        if albert_jordan_mul(x, x) != x:
            raise NotIdempotent(f"generator {name} squares to something else")
        assert trace(x) == 1, name
    return axes


def products_from_axes(axes):
    """The 27 iterated products of four elements, in the fixed listing order."""
    out = list(axes)
    for i, j in _BUILD:
        out.append(albert_jordan_mul(out[i], out[j]))
    return tuple(out)


@lru_cache(maxsize=None)
def generated_basis_27():
    """Recompute the 27 products from the axes and diff against _REFERENCE.

    Raises ReferenceMismatch naming the first product that disagrees with
    the frozen table.
    """
    computed = products_from_axes(standard_axes())
    for name, row, got in zip(BASIS_NAMES, _REFERENCE, computed):
        want = _reference_element(row)
        if got != want:
            raise ReferenceMismatch(
                f"product {name} differs from the stored coordinates: "
                f"computed {coords27(got)}, stored {coords27(want)}")
    return computed


def basis_matrix(elements=None):
    """27x27 coordinate matrix, one row per element in listing order."""
    if elements is None:
        elements = generated_basis_27()
    return RatMatrix([list(coords27(x)) for x in elements])


def basis_certificate():
    """(determinant, rank) of the generated-basis coordinate matrix."""
    m = basis_matrix()
    return det(m), rank(m)


@lru_cache(maxsize=None)
def albert_algebra():
    """The 27-dim algebra with structure constants over the generated basis."""
    basis = generated_basis_27()
    b = basis_matrix(basis)
    binv = inverse(b)
    products = {}
    for i in range(27):
        for j in range(i, 27):
            p = coords27(albert_jordan_mul(basis[i], basis[j]))
            coeffs = []
            for k in range(27):
                c = sum(p[t] * binv[t, k] for t in range(27))
                if c:
                    coeffs.append((k, c))
            products[(i, j)] = tuple(coeffs)
    return Algebra(27, BASIS_NAMES, products)


def _random_octonion(rng):
    return Octonion(tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 9))
                          for _ in range(8)))


def _composition_sweep(extra_pairs=100, seed=1729):
    """Check N(xy) = N(x) N(y) on all unit pairs plus random rational pairs."""
    units = [ONE] + [unit(k) for k in range(7)]
    pairs = [(x, y) for x in units for y in units]
    rng = random.Random(seed)
    pairs += [(_random_octonion(rng), _random_octonion(rng))
              for _ in range(extra_pairs)]
    for x, y in pairs:
        if oct_norm(oct_mul(x, y)) != oct_norm(x) * oct_norm(y):
            return False, len(pairs)
    return True, len(pairs)


@dataclass(frozen=True)
class AlbertReport:
    table_consistent: bool
    determinant: Fraction
    rank: int
    determinant_ok: bool
    jordan: object
    axes_primitive: tuple
    peirce_dims: tuple
    composition_ok: bool
    composition_pairs: int

    @property
    def passed(self):
        return (self.table_consistent and self.rank == 27
                and self.determinant_ok and self.jordan.is_jordan
                and all(self.axes_primitive)
                and all(d == (1, 10, 16) for d in self.peirce_dims)
                and self.composition_ok)


def verify_albert_axial():
    """Full certificate for the exceptional 27-dimensional axial algebra.

    Covers: the octonion table against the quaternion-triple rule; the
    basis determinant 1/(2^78 * 3^36) in absolute value and rank 27; the
    linearized Jordan identity over the generated basis; primitivity of
    the four axes at eta = 1/2; their eigenspace dimensions (1, 10, 16)
    for eigenvalues (1, 0, 1/2); and norm multiplicativity.
    """
    table_ok = quaternion_triples_consistent()
    dval, rk = basis_certificate()
    det_ok = abs(dval) == Fraction(1, 2**78 * 3**36)
    alg = albert_algebra()
    verdict = jordan_check(alg)
    half = Fraction(1, 2)
    prim = []
    dims = []
    for k in range(4):
        e = [Fraction(1 if t == k else 0) for t in range(27)]
        prim.append(is_primitive_axis(alg, e, half))
        rep = peirce(alg, e, (Fraction(1), Fraction(0), half), fusion=False)
        dims.append((rep.dims[Fraction(1)], rep.dims[Fraction(0)],
                     rep.dims[half]))
    comp_ok, npairs = _composition_sweep()
    return AlbertReport(table_ok, dval, rk, det_ok, verdict, tuple(prim),
                        tuple(dims), comp_ok, npairs)
