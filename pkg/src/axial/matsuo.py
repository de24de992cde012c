"""Commutative algebras attached to transposition classes, over Q exactly.

Each class element c becomes a basis idempotent; a pair at product order 2
multiplies to zero, and a pair at order 3 multiplies to (eta/2)(c + d - e)
with e the third point of their line. The associative symmetric form has
matrix I + (eta/2)A for A the diagram adjacency; its kernel is the radical,
and quotients by verified ideals carry the induced product.

Everything is Fraction-exact. Hot checks (form associativity, ideal
verification) run on integer-scaled numpy views of the same data, with
magnitude guards so int64 can never silently wrap.
"""

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import BadEta, MissingLabels, NotAnIdeal, WrongEta
from .exact import RatMatrix, integer_eigen_multiplicity, nullspace_basis, rref

__all__ = [
    "Algebra", "MatsuoAlgebra", "QuotientAlgebra", "build_matsuo",
    "check_gram_identity", "check_frobenius", "radical",
    "radical_dim_via_spectrum", "wr_radical_basis", "quotient",
    "gram_pair", "check_equivariance", "algebra_json",
]

_INT64_SAFE = 1 << 62


@dataclass
class Algebra:
    """Sparse structure constants over an ordered basis.

    products maps each pair (i, j) with i <= j to a tuple of (k, coefficient)
    terms; pairs that multiply to zero are omitted. The product is symmetric
    by construction, so only the sorted pair is stored.
    """

    dim: int
    labels: tuple
    products: dict

    def pair_product(self, i, j):
        return self.products.get((i, j) if i <= j else (j, i), ())

    def mul_vec(self, u, v):
        """Product of two coefficient vectors, dense in and out."""
        out = [Fraction(0)] * self.dim
        nz_u = [(i, x) for i, x in enumerate(u) if x]
        nz_v = [(j, y) for j, y in enumerate(v) if y]
        for i, x in nz_u:
            for j, y in nz_v:
                xy = x * y
                for k, c in self.pair_product(i, j):
                    out[k] += xy * c
        return out


@dataclass
class MatsuoAlgebra:
    algebra: Algebra
    cls: object
    eta: Fraction
    gram: RatMatrix
    radical_basis: list = field(default=None, repr=False)


@dataclass
class QuotientAlgebra:
    """Quotient carrier: induced product, coordinate projection, section.

    section lists the original basis indices whose images form the quotient
    basis; projection is the dim_q x n coordinate map annihilating the ideal
    and restricting to the identity on the section.
    """

    algebra: Algebra
    projection: RatMatrix
    section: tuple


def _basis_labels(cls):
    if cls.labels is not None:
        return tuple(cls.labels)
    return tuple(range(len(cls)))


def build_matsuo(cls, eta):
    """Algebra of a transposition class at a given exact eta."""
    eta = Fraction(eta)
    if eta in (0, 1):
        raise BadEta(f"eta = {eta} degenerates the product")
    half = eta / 2
    n = len(cls)
    products = {}
    for i in range(n):
        products[(i, i)] = ((i, Fraction(1)),)
        row = cls.pair_order[i]
        for j in range(i + 1, n):
            if row[j] == 3:
                k = cls.third[(i, j)]
                products[(i, j)] = ((i, half), (j, half), (k, -half))
    gram_rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        gram_rows[i][i] = Fraction(1)
        row = cls.pair_order[i]
        for j in range(n):
            if i != j and row[j] == 3:
                gram_rows[i][j] = half
    return MatsuoAlgebra(Algebra(n, _basis_labels(cls), products), cls, eta,
                         RatMatrix(gram_rows))


def _scale(M):
    """Denominator-clearing integer scale for products and form: 2q."""
    return 2 * M.eta.denominator


def scaled_products(M):
    """products with every coefficient times 2q, as plain ints."""
    s = _scale(M)
    return {pair: tuple((k, int(c * s)) for k, c in terms)
            for pair, terms in M.algebra.products.items()}, s


def scaled_gram(M):
    """int64 numpy Gram matrix times 2q."""
    s = _scale(M)
    n = M.algebra.dim
    g = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            x = M.gram[i, j]
            if x:
                g[i, j] = int(x * s)
    return g


def _structure_tensor(M):
    """int64 tensor T[i, j, k] = (2q) * coefficient of b_k in b_i b_j."""
    n = M.algebra.dim
    prods, s = scaled_products(M)
    t = np.zeros((n, n, n), dtype=np.int64)
    for (i, j), terms in prods.items():
        for k, c in terms:
            t[i, j, k] = c
            t[j, i, k] = c
    return t, s


def check_gram_identity(M):
    """Form matrix agrees entrywise with I + (eta/2) * adjacency."""
    n = M.algebra.dim
    half = M.eta / 2
    for i in range(n):
        row = M.cls.pair_order[i]
        for j in range(n):
            want = (Fraction(1) if i == j
                    else half if row[j] == 3 else Fraction(0))
            if M.gram[i, j] != want:
                return False
    return True


def check_frobenius(M):
    """(xy, z) = (x, yz) on all basis triples.

    Equivalent matrix form: G L_y is symmetric for every basis adjoint L_y,
    checked in exact integer arithmetic (entries stay below n * (2q)^2).
    """
    n = M.algebra.dim
    g = scaled_gram(M)
    prods, _ = scaled_products(M)
    for y in range(n):
        left = np.zeros((n, n), dtype=np.int64)
        for b in range(n):
            for k, c in prods.get((y, b) if y <= b else (b, y), ()):
                left[k, b] = c
        s = g @ left
        if not np.array_equal(s, s.T):
            return False
    return True


def radical(M):
    """Canonical basis of the form's kernel; cached on the algebra."""
    if M.radical_basis is None:
        M.radical_basis = nullspace_basis(M.gram)
    return M.radical_basis


def radical_dim_via_spectrum(M):
    """Radical dimension from the diagram: multiplicity of -4, eta = 1/2 only.

    At eta = 1/2 the form is I + A/4, so its kernel matches the -4
    eigenspace of the adjacency. Other eta values hit other eigenvalues;
    callers there should use radical() directly.
    """
    if M.eta != Fraction(1, 2):
        raise WrongEta(f"spectral shortcut needs eta = 1/2, got {M.eta}")
    n = M.algebra.dim
    adj = [[1 if M.cls.pair_order[i][j] == 3 and i != j else 0
            for j in range(n)] for i in range(n)]
    return integer_eigen_multiplicity(RatMatrix(adj), -4)


def wr_radical_basis(cls, p, n):
    """Explicit radical vectors for the rank-n wreath classes, p in {2, 3}.

    The class must carry point labels ('b', i, j) and ('c', i, j). Vectors
    come in two batches: r(i, j)(n-1, n) over pairs i < j below n-1, then
    r(1, n-1)(i, n) over the remaining i; together n(n-3)/2 of them.
    """
    if cls.labels is None:
        raise MissingLabels("class has no point labels to build vectors from")
    if p not in (2, 3):
        raise MissingLabels(f"no label scheme for p = {p}")
    pos = {lab: i for i, lab in enumerate(cls.labels)}

    def b_at(i, j):
        return pos[("b", min(i, j), max(i, j))]

    def c_at(i, j):
        if p == 2:
            return pos[("c", min(i, j), max(i, j))]
        return pos[("c", i, j)]

    def r_vector(i, j, k, l):
        v = [Fraction(0)] * len(cls)
        for sign, a, b in ((1, i, j), (-1, i, l), (-1, j, k), (1, k, l)):
            v[b_at(a, b)] += sign
            v[c_at(a, b)] += sign
            if p == 3:
                v[c_at(b, a)] += sign
        return v

    out = [r_vector(i, j, n - 2, n - 1)
           for i in range(n - 2) for j in range(i + 1, n - 2)]
    out += [r_vector(0, n - 2, i, n - 1)
            for i in range(1, n - 2)]
    assert len(out) == n * (n - 3) // 2
    return out


def _int_vector(v):
    """Clear denominators; scale is irrelevant for span and zero tests."""
    lcm = 1
    for x in v:
        lcm = lcm * x.denominator // np.gcd(lcm, x.denominator)
    return [int(x * lcm) for x in v]


def _verify_ideal(M, red, pivots, ideal_basis):
    """Check b_d * v stays in span(red) for every basis d and input vector v.

    Membership in a row space is orthogonality to its right kernel, so one
    exact integer contraction covers all (d, v) pairs at once.
    """
    n = M.algebra.dim
    if not red:
        if any(any(x for x in v) for v in ideal_basis):
            raise NotAnIdeal("nonzero vectors reduced to an empty span")
        return
    kernel = nullspace_basis(RatMatrix([list(r) for r in red]))
    kmat = np.array([_int_vector(v) for v in kernel], dtype=np.int64).T
    vmat = np.array([_int_vector(v) for v in ideal_basis], dtype=np.int64).T
    t, _ = _structure_tensor(M)
    b1 = int(np.abs(t).max() or 1) * int(np.abs(kmat).max() or 1) * n
    b2 = b1 * int(np.abs(vmat).max() or 1) * n
    assert b2 < _INT64_SAFE, "ideal check would overflow int64"
    z = np.tensordot(t, kmat, axes=([2], [0]))
    y = np.tensordot(z, vmat, axes=([1], [0]))
    bad = np.argwhere(y)
    if bad.size:
        d, _, v = (int(x) for x in bad[0])
        raise NotAnIdeal(
            f"basis element {d} times ideal vector {v} leaves the span",
            witness=(d, v))


def quotient(M, ideal_basis):
    """Quotient by a verified ideal, basis chosen in class order.

    The quotient basis is the image of the standard basis vectors at the
    non-pivot columns of the reduced ideal basis, scanned ascending; the
    pivot coordinates are eliminated through the reduced rows.
    """
    n = M.algebra.dim
    if ideal_basis:
        red, pivots = rref(RatMatrix([list(v) for v in ideal_basis]))
    else:
        red, pivots = [], ()
    _verify_ideal(M, red, pivots, ideal_basis)
    pivot_set = set(pivots)
    free = tuple(c for c in range(n) if c not in pivot_set)
    free_pos = {f: a for a, f in enumerate(free)}
    red_free = [[row[f] for f in free] for row in red]
    pivot_pos = {p: i for i, p in enumerate(pivots)}
    dim_q = len(free)

    def project(terms):
        out = [Fraction(0)] * dim_q
        for k, c in terms:
            if k in free_pos:
                out[free_pos[k]] += c
            else:
                rowf = red_free[pivot_pos[k]]
                for a in range(dim_q):
                    if rowf[a]:
                        out[a] -= c * rowf[a]
        return out

    products = {}
    for a in range(dim_q):
        for b in range(a, dim_q):
            img = project(M.algebra.pair_product(free[a], free[b]))
            terms = tuple((k, c) for k, c in enumerate(img) if c)
            if terms:
                products[(a, b)] = terms
    proj_rows = [[Fraction(0)] * n for _ in range(dim_q)]
    for a, f in enumerate(free):
        proj_rows[a][f] = Fraction(1)
        for i, p in enumerate(pivots):
            proj_rows[a][p] = -red[i][f]
    labels = tuple(M.algebra.labels[f] for f in free)
    return QuotientAlgebra(Algebra(dim_q, labels, products),
                           RatMatrix(proj_rows), free)


def gram_pair(M, u, v):
    """Value of the symmetric form on two coefficient vectors."""
    gv = M.gram.mul_vec(list(v))
    return sum((x * y for x, y in zip(u, gv)), Fraction(0))


def check_equivariance(M, conjugators=None):
    """Conjugation by class elements permutes the basis compatibly.

    conjugators: class indices to test; defaults to the closure's generator
    elements that lie in the class (plus the seed). Since any one class
    element's action is the full conjugation action, a spot check over a
    generating set certifies the whole group action.
    """
    cls = M.cls
    n = M.algebra.dim
    if conjugators is None:
        conjugators = sorted({cls.index[g] for g in
                              (*cls.spec.generators, cls.spec.seed)
                              if g in cls.index})
    prods = M.algebra.products
    for g in conjugators:
        pi = [cls.conj_index(i, g) for i in range(n)]
        for (i, j), terms in prods.items():
            moved = {}
            for k, c in terms:
                moved[pi[k]] = moved.get(pi[k], Fraction(0)) + c
            a, b = pi[i], pi[j]
            target = dict(prods.get((a, b) if a <= b else (b, a), ()))
            if {k: c for k, c in moved.items() if c} != target:
                return False
    return True


def _label_text(lab):
    if isinstance(lab, tuple):
        return f"{lab[0]}({','.join(str(x) for x in lab[1:])})"
    return str(lab)


def algebra_json(M):
    """Plain-dict dump: dim, eta, labels, and nonzero structure constants."""
    A = M.algebra
    return {
        "dim": A.dim,
        "eta": str(M.eta),
        "labels": [_label_text(lab) for lab in A.labels],
        "products": {f"{i},{j}": [[k, str(c)] for k, c in terms]
                     for (i, j), terms in sorted(A.products.items())},
    }
