"""Jordan identity checking, Peirce decomposition, and axis primitivity.

The linearized Jordan identity is tested through its defect

    w(x, y, z, w) = (xz, y, w) + (zw, y, x) + (wx, y, z)

with (u, y, v) = (uy)v - u(yv); the algebra is Jordan iff w vanishes
identically. Two sweeps are provided. jordan_check covers all basis
quadruples of an algebra in operator form: for a fixed multiset {x, z, w}
the map y -> w(x, y, z, w) is the operator

    [L_w, L_xz] + [L_x, L_zw] + [L_z, L_wx],

so one zero test of that matrix covers every y at once. jordan_modulo_radical
asks the weaker question whether w always lands in the form's kernel, which
decides the identity for the quotient by the radical without ever building
the quotient; it runs on integer-scaled sparse products and can fix y to the
seed, justified when conjugation acts transitively on the class and permutes
the basis (check_equivariance), since w is equivariant and the kernel is
invariant.

All verdicts are exact: numpy is only ever handed integers, with magnitude
guards, and anything near the int64 edge falls back to Python-int arrays.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement, islice
from math import comb, gcd
import multiprocessing

import numpy as np

from .errors import NotIdempotent, NotSemisimple, WrongEta
from .exact import RatMatrix, nullspace_basis, rref
from .matsuo import quotient, radical, scaled_products

__all__ = [
    "JordanVerdict", "PeirceReport", "EtaAnalysis", "adjoint_matrix",
    "w_element", "w_basis", "jordan_check", "jordan_modulo_radical",
    "peirce", "is_primitive_axis", "eta_not_half_analysis",
]

_INT64_SAFE = 1 << 62


@dataclass(frozen=True)
class JordanVerdict:
    """Outcome of a sweep; counterexample is a basis quadruple (x, y, z, w).

    quadruples_checked counts the quadruples the sweep actually covered
    (early exit after a violation can stop it short of the full count).
    """

    is_jordan: bool
    counterexample: tuple
    quadruples_checked: int
    symmetry_used: bool = False


@dataclass(frozen=True)
class PeirceReport:
    eigenvalues: tuple
    dims: dict
    fusion_violations: tuple


@dataclass(frozen=True)
class EtaAnalysis:
    """Which structural case, if any, yields a Jordan quotient off eta = 1/2.

    case 'i': a single point, everything is one-dimensional. case 'ii':
    eta = 2 with a complete diagram; pairwise differences span a verified
    codimension-1 ideal. case 'no_jordan_factor': nothing arises.
    """

    case: str
    quotient_dim: int
    detail: str


def adjoint_matrix(A, x):
    """Matrix of left multiplication by x; column j holds x * b_j."""
    n = A.dim
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i, xi in enumerate(x):
        if not xi:
            continue
        for j in range(n):
            for k, c in A.pair_product(i, j):
                rows[k][j] += xi * c
    return RatMatrix(rows)


def _vsub(u, v):
    return [a - b for a, b in zip(u, v)]


def _vadd(u, v):
    return [a + b for a, b in zip(u, v)]


def w_element(A, x, y, z, w):
    """Defect of the linearized identity on coefficient vectors."""

    def assoc(u, vv):
        return _vsub(A.mul_vec(A.mul_vec(u, y), vv),
                     A.mul_vec(u, A.mul_vec(y, vv)))

    total = assoc(A.mul_vec(x, z), w)
    total = _vadd(total, assoc(A.mul_vec(z, w), x))
    return _vadd(total, assoc(A.mul_vec(w, x), z))


def _unit(n, i):
    v = [Fraction(0)] * n
    v[i] = Fraction(1)
    return v


def w_basis(A, x, y, z, w):
    """Defect on a basis quadruple given by indices; replay helper."""
    n = A.dim
    return w_element(A, _unit(n, x), _unit(n, y), _unit(n, z), _unit(n, w))


def _int_tensor(A):
    """(tensor, scale): tensor[i, j, k] = scale * coefficient, plain int64.

    Falls back to an object (Python int) array when entries would not be
    safely representable; zero tests stay exact either way.
    """
    n = A.dim
    scale = 1
    for terms in A.products.values():
        for _, c in terms:
            scale = scale * c.denominator // gcd(scale, c.denominator)
    entries = {}
    biggest = 0
    for (i, j), terms in A.products.items():
        for k, c in terms:
            v = int(c * scale)
            entries[(i, j, k)] = v
            entries[(j, i, k)] = v
            biggest = max(biggest, abs(v))
    dtype = np.int64 if biggest < (1 << 40) else object
    t = np.zeros((n, n, n), dtype=dtype)
    for (i, j, k), v in entries.items():
        t[i, j, k] = v
    return t, scale


def _op_dtype_for(t, n):
    """int64 iff the worst commutator entry provably fits."""
    if t.dtype == object:
        return object
    big = int(np.abs(t).max() or 1)
    return np.int64 if 6 * n * n * big ** 3 < _INT64_SAFE else object


def jordan_check(A):
    """Full sweep of the identity over all basis quadruples of an algebra.

    Scans multisets {x, z, w} in ascending order; the operator form covers
    all y per multiset. On failure the reported counterexample is the
    lexicographically least violating quadruple (x, y, z, w).
    """
    n = A.dim
    t, _ = _int_tensor(A)
    if _op_dtype_for(t, n) == object and t.dtype != object:
        t = t.astype(object)
    adj = [np.ascontiguousarray(t[i].T) for i in range(n)]
    cache = {}

    def pair_op(i, j):
        key = (i, j) if i <= j else (j, i)
        op = cache.get(key)
        if op is None:
            op = np.tensordot(t[key[0], key[1]], t, axes=([0], [0])).T
            if n > 48 and len(cache) > 2048:
                cache.clear()
            cache[key] = op
        return op

    def w_op(x, z, w):
        pxz, pzw, pwx = pair_op(x, z), pair_op(z, w), pair_op(w, x)
        return (adj[w] @ pxz - pxz @ adj[w] + adj[x] @ pzw - pzw @ adj[x]
                + adj[z] @ pwx - pwx @ adj[z])

    checked = 0
    first = None
    block = []
    for x, z, w in combinations_with_replacement(range(n), 3):
        if first is not None and x != first[0]:
            break
        checked += 1
        op = w_op(x, z, w)
        if op.any():
            if first is None:
                first = (x, z, w)
            block.append(((z, w), op))
    if first is None:
        return JordanVerdict(True, None, checked * n)
    x_star = first[0]
    y_star = min(int(c) for _, op in block
                 for c in np.nonzero(op.any(axis=0))[0])
    candidates = []
    for (a, b), op in block:
        if op[:, y_star].any():
            candidates += [(a, b), (b, a)]
    z_star, w_star = min(candidates)
    return JordanVerdict(False, (x_star, y_star, z_star, w_star), checked * n)


def _pair_table(M):
    """Dense-indexed sparse products, scaled by 2q, both orders filled."""
    prods, s = scaled_products(M)
    n = M.algebra.dim
    table = [[()] * n for _ in range(n)]
    for (i, j), terms in prods.items():
        table[i][j] = terms
        table[j][i] = terms
    return table, s


def _w_sparse(P, x, y, z, w):
    """Defect of a basis quadruple as {index: int}, scaled by (2q)^3."""
    acc = {}

    def assoc(u_terms, vv):
        for k, cu in u_terms:
            for l, cl in P[k][y]:
                c2 = cu * cl
                for m, cm in P[l][vv]:
                    acc[m] = acc.get(m, 0) + c2 * cm
        for l, cl in P[y][vv]:
            for k, cu in u_terms:
                c2 = cl * cu
                for m, cm in P[k][l]:
                    acc[m] = acc.get(m, 0) - c2 * cm

    assoc(P[x][z], w)
    assoc(P[z][w], x)
    assoc(P[w][x], z)
    return acc


def _gram_pivot_rows(M):
    """Independent rows of the scaled form matrix: w in kernel iff R w = 0."""
    _, pivots = rref(M.gram)
    s = 2 * M.eta.denominator
    n = M.algebra.dim
    rows = np.zeros((len(pivots), n), dtype=np.int64)
    for a, i in enumerate(pivots):
        for j in range(n):
            x = M.gram[i, j]
            if x:
                rows[a, j] = int(x * s)
    return rows


_WORK = None


def _init_worker(table, rows, n, ys, batch):
    global _WORK
    _WORK = (table, rows, n, ys, batch)


def _scan_chunk(bounds):
    """Violating (x, z, w) multisets within an index slice of the sweep."""
    table, rows, n, ys, batch = _WORK
    start, stop = bounds
    out = []
    buf = []
    pending = []

    def flush():
        if not pending:
            return
        wmat = np.zeros((len(pending), n), dtype=np.int64)
        for r, acc in enumerate(buf):
            for k, v in acc.items():
                wmat[r, k] = v
        hits = np.nonzero((wmat @ rows.T).any(axis=1))[0]
        out.extend(pending[int(r)] for r in hits)
        buf.clear()
        pending.clear()

    it = islice(combinations_with_replacement(range(n), 3), start, stop)
    for x, z, w in it:
        for y in ys:
            acc = _w_sparse(table, x, y, z, w)
            buf.append(acc)
            pending.append((x, y, z, w))
        if len(pending) >= batch:
            flush()
    flush()
    return out


def jordan_modulo_radical(M, use_symmetry=True, threads=1, batch=1024):
    """Does every defect land in the form's kernel?

    True iff the quotient by the radical is Jordan. With use_symmetry the y
    slot is pinned to the seed's index, covering all quadruples up to the
    transitive conjugation action; without it every y is swept. threads
    splits the multiset range across worker processes; the verdict and
    counterexample do not depend on the split.
    """
    n = M.algebra.dim
    table, _ = _pair_table(M)
    rows = _gram_pivot_rows(M)
    seed_at = M.cls.index.get(M.cls.spec.seed, 0) if M.cls is not None else 0
    ys = (seed_at,) if use_symmetry else tuple(range(n))
    total = comb(n + 2, 3)

    if threads > 1:
        step = max(1, total // (threads * 8))
        chunks = [(i, min(i + step, total)) for i in range(0, total, step)]
        ctx = multiprocessing.get_context("fork")
        _init_worker(table, rows, n, ys, batch)
        with ctx.Pool(threads) as pool:
            parts = pool.map(_scan_chunk, chunks)
        violations = [v for part in parts for v in part]
        checked = total * len(ys)
    else:
        _init_worker(table, rows, n, ys, batch)
        violations = []
        checked = 0
        stop_at = total
        pos = 0
        step = 4096
        while pos < min(stop_at, total):
            part = _scan_chunk((pos, pos + step))
            checked += min(step, total - pos) * len(ys)
            pos += step
            violations.extend(part)
            if violations and stop_at == total:
                # scan to the end of the violating x-block, then stop:
                # multisets with first coordinate > x number C(n - x + 1, 3)
                stop_at = total - comb(n - violations[0][0] + 1, 3)
    if not violations:
        return JordanVerdict(True, None, checked, use_symmetry)
    x_star = min(v[0] for v in violations)
    in_block = [v for v in violations if v[0] == x_star]
    y_star = min(v[1] for v in in_block)
    zw = min(((z, w) if z <= w else (w, z))
             for x, y, z, w in in_block if y == y_star)
    return JordanVerdict(False, (x_star, y_star) + zw, checked, use_symmetry)


def _jordan_fusion_rules(eigs):
    """Allowed target sets for eigenspace products under the Jordan law."""
    one, zero = Fraction(1), Fraction(0)
    others = [e for e in eigs if e not in (one, zero)]
    rules = {(one, one): {one}}
    if zero in eigs:
        rules[(zero, one)] = set()
        rules[(zero, zero)] = {zero}
    for e in others:
        rules[(min(one, e), max(one, e))] = {e}
        if zero in eigs:
            rules[(min(zero, e), max(zero, e))] = {e}
        rules[(e, e)] = {one, zero} & set(eigs) | {one}
    return rules


def peirce(A, e, expected, fusion=True):
    """Eigenspace decomposition for an idempotent, with exact dimensions.

    expected lists the permitted eigenvalues (1 must be among them). Raises
    NotIdempotent or, when the eigenspaces do not fill the algebra,
    NotSemisimple. With fusion=True, eigenvector products are decomposed
    and any component outside the Jordan fusion law is reported.
    """
    n = A.dim
    if A.mul_vec(e, e) != list(e):
        raise NotIdempotent("e * e differs from e")
    L = adjoint_matrix(A, e)
    eigs = tuple(Fraction(x) for x in expected)
    spaces = {}
    for lam in eigs:
        shifted = RatMatrix([[L[i, j] - (lam if i == j else 0)
                              for j in range(n)] for i in range(n)])
        spaces[lam] = nullspace_basis(shifted)
    dims = {lam: len(v) for lam, v in spaces.items()}
    if sum(dims.values()) != n:
        raise NotSemisimple(
            f"eigenspaces for {expected} span {sum(dims.values())} of {n}")
    violations = []
    if fusion:
        projectors = {}
        for lam in eigs:
            p = RatMatrix.identity(n)
            for mu in eigs:
                if mu == lam:
                    continue
                p = p * RatMatrix(
                    [[(L[i, j] - (mu if i == j else 0)) / (lam - mu)
                      for j in range(n)] for i in range(n)])
            projectors[lam] = p
        rules = _jordan_fusion_rules(eigs)
        for lam, mu in combinations_with_replacement(sorted(eigs), 2):
            allowed = rules.get((lam, mu), set(eigs))
            forbidden = [k for k in eigs if k not in allowed]
            if not forbidden:
                continue
            for u in spaces[lam]:
                for v in spaces[mu]:
                    prod = A.mul_vec(u, v)
                    if not any(prod):
                        continue
                    for kappa in forbidden:
                        comp = projectors[kappa].mul_vec(prod)
                        if any(comp):
                            violations.append((lam, mu, kappa))
        violations = tuple(sorted(set(violations)))
    return PeirceReport(eigs, dims, violations)


def _matmul_guard(a, b, inner):
    if a.dtype == object or b.dtype == object:
        return a @ b
    bound = int(np.abs(a).max() or 1) * int(np.abs(b).max() or 1) * inner
    if bound >= _INT64_SAFE:
        return a.astype(object) @ b.astype(object)
    return a @ b


def is_primitive_axis(A, a, eta):
    """Idempotent with eigenvalues in {1, 0, eta}, 1-dim 1-space, Jordan fusion.

    Everything runs on integer-scaled matrices; zero tests are invariant
    under the positive scale factors, so no rational bookkeeping is needed.
    The 1-space rules come free: primitivity forces A1 = <a>, whose products
    with the other eigenspaces are fixed by the eigenvalue equations.
    """
    eta = Fraction(eta)
    n = A.dim
    a = [Fraction(x) for x in a]
    if A.mul_vec(a, a) != a:
        return False
    t, ts = _int_tensor(A)
    sa = 1
    for x in a:
        sa = sa * x.denominator // gcd(sa, x.denominator)
    tmax = 1 if t.dtype == object else int(np.abs(t).max() or 1)

    def adj_scaled(vec):
        # contraction with t can exceed int64 even when both factors fit
        if (vec.dtype != object and t.dtype != object
                and n * int(np.abs(vec).max() or 1) * tmax >= _INT64_SAFE):
            vec = vec.astype(object)
        tt = t.astype(object) if vec.dtype == object else t
        return np.tensordot(vec, tt, axes=([0], [0])).T

    av = np.array([int(x * sa) for x in a],
                  dtype=object if t.dtype == object else np.int64)
    lz = adj_scaled(av)
    scale = sa * ts  # lz = scale * (true adjoint of a)
    p, q = eta.numerator, eta.denominator
    if (t.dtype != object
            and (abs(q) + abs(p)) * scale * int(np.abs(lz).max() or 1)
            >= _INT64_SAFE):
        lz = lz.astype(object)
    ident = np.eye(n, dtype=lz.dtype)
    m2 = lz - scale * ident            # scale * (L - 1)
    m3 = q * lz - p * scale * ident    # q * scale * (L - eta)
    if _matmul_guard(_matmul_guard(lz, m2, n), m3, n).any():
        return False
    lm3 = _matmul_guard(lz, m3, n)
    dim1 = Fraction(int(np.trace(lm3)), q * scale * scale) / (1 - eta)
    if dim1 != 1:
        return False
    # positive multiples of the three spectral projectors
    p1 = lm3
    p0 = _matmul_guard(m2, m3, n)
    pe = _matmul_guard(lz, m2, n)
    # products u * A_right, u from the source space, must avoid each
    # forbidden component on the left; the 1-space needs no checks since
    # dim A_1 = 1 pins its products to the eigenvalue equations
    plans = ((p0, p0, (p1, pe)), (p0, pe, (p1, p0)), (pe, pe, (pe,)))
    for source, right, lefts in plans:
        for i in range(n):
            u = source[:, i]
            if not u.any():
                continue
            lu = adj_scaled(u)
            for left in lefts:
                if _matmul_guard(_matmul_guard(left, lu, n), right, n).any():
                    return False
    return True


def eta_not_half_analysis(M):
    """Structural test for a Jordan quotient at eta != 1/2.

    Either the class is a single point (case 'i'), or eta = 2 with a
    complete diagram, where the pairwise differences are checked to span a
    codimension-1 ideal inside the form's kernel (case 'ii'). Anything else
    admits no Jordan factor.
    """
    if M.eta == Fraction(1, 2):
        raise WrongEta("this analysis covers eta != 1/2 only")
    n = M.algebra.dim
    if n == 1:
        return EtaAnalysis("i", 1, "single point; the algebra is Q itself")
    complete = all(M.cls.pair_order[i][j] == 3
                   for i in range(n) for j in range(n) if i != j)
    if M.eta == 2 and complete:
        diffs = []
        for j in range(1, n):
            v = [Fraction(0)] * n
            v[0], v[j] = Fraction(1), Fraction(-1)
            if any(M.gram.mul_vec(v)):
                return EtaAnalysis(
                    "no_jordan_factor", None,
                    f"difference 0 - {j} falls outside the form's kernel")
            diffs.append(v)
        q = quotient(M, diffs)
        if q.algebra.dim != 1:
            return EtaAnalysis("no_jordan_factor", None, "difference span has codim > 1")
        return EtaAnalysis(
            "ii", 1, "eta = 2, complete diagram; differences span a "
                     "codimension-1 ideal inside the form's kernel")
    if M.eta == 2:
        return EtaAnalysis("no_jordan_factor", None, "eta = 2 but the diagram is not complete")
    return EtaAnalysis("no_jordan_factor", None,
                       f"eta = {M.eta} admits no Jordan factor on {n} points")
