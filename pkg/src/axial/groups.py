"""Group element backends and 3-transposition class machinery.

Elements come in three flavors: permutations (images tuple, 0-indexed),
matrices over GF(2)/GF(3)/GF(4), and indices into an explicit multiplication
table. All are immutable and hashable, so conjugacy closures are plain orbit
walks over dict lookups.

A TranspositionClass is the closed class D with its pair-order table. For
c != d in D the product order must be 2 or 3; when it is 3 the third point
of the Fischer line, c^d = d^c, is cached so downstream consumers never
multiply group elements again.
"""

from dataclasses import dataclass, field

from .errors import (CapExceeded, EmptyPerp, NotInvolution,
                     NotThreeTransposition)

# GF(4) = {0, 1, w, w+1} encoded 0..3 with w*w = w+1; addition is XOR.
GF4_MUL = ((0, 0, 0, 0), (0, 1, 2, 3), (0, 2, 3, 1), (0, 3, 1, 2))
GF4_INV = (0, 1, 3, 2)
GF4_CONJ = (0, 1, 3, 2)  # Frobenius x -> x**2


class Perm:
    """Permutation of {0..n-1}; a*b applies a first, then b."""

    __slots__ = ("img",)

    def __init__(self, img):
        self.img = tuple(img)

    @classmethod
    def identity(cls, n):
        return cls(range(n))

    @classmethod
    def from_cycles(cls, cycles, n):
        img = list(range(n))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                img[a] = b
        return cls(img)

    def __mul__(self, other):
        o = other.img
        return Perm(o[x] for x in self.img)

    def inv(self):
        img = [0] * len(self.img)
        for i, x in enumerate(self.img):
            img[x] = i
        return Perm(img)

    def __eq__(self, other):
        return isinstance(other, Perm) and self.img == other.img

    def __hash__(self):
        return hash(self.img)

    def __repr__(self):
        return f"Perm{self.img}"

    def degree(self):
        return len(self.img)


class Mat:
    """Square matrix over GF(q), q in {2, 3, 4}; rows of ints 0..q-1."""

    __slots__ = ("q", "rows")

    def __init__(self, q, rows):
        assert q in (2, 3, 4)
        self.q = q
        self.rows = tuple(tuple(r) for r in rows)

    @classmethod
    def identity(cls, q, n):
        return cls(q, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def __mul__(self, other):
        assert self.q == other.q
        q = self.q
        bt = tuple(zip(*other.rows))
        if q == 2:
            rows = [tuple(sum(a & b for a, b in zip(row, col)) & 1 for col in bt)
                    for row in self.rows]
        elif q == 3:
            rows = [tuple(sum(a * b for a, b in zip(row, col)) % 3 for col in bt)
                    for row in self.rows]
        else:
            mul = GF4_MUL
            rows = []
            for row in self.rows:
                out = []
                for col in bt:
                    acc = 0
                    for a, b in zip(row, col):
                        acc ^= mul[a][b]
                    out.append(acc)
                rows.append(tuple(out))
        return Mat(q, rows)

    def inv(self):
        q, n = self.q, len(self.rows)
        aug = [list(row) + [1 if i == j else 0 for j in range(n)]
               for i, row in enumerate(self.rows)]
        scalar_inv = GF4_INV if q == 4 else tuple(
            next(y for y in range(q) if (x * y) % q == 1) if x else 0
            for x in range(q))

        def smul(a, b):
            return GF4_MUL[a][b] if q == 4 else (a * b) % q

        def ssub(a, b):
            return a ^ b if q in (2, 4) else (a - b) % q

        for c in range(n):
            p = next(i for i in range(c, n) if aug[i][c])
            aug[c], aug[p] = aug[p], aug[c]
            pi = scalar_inv[aug[c][c]]
            aug[c] = [smul(pi, x) for x in aug[c]]
            for i in range(n):
                if i != c and aug[i][c]:
                    f = aug[i][c]
                    aug[i] = [ssub(a, smul(f, b)) for a, b in zip(aug[i], aug[c])]
        return Mat(q, [row[n:] for row in aug])

    def __eq__(self, other):
        return isinstance(other, Mat) and self.q == other.q and self.rows == other.rows

    def __hash__(self):
        return hash((self.q, self.rows))

    def __repr__(self):
        return f"Mat(GF{self.q}, {len(self.rows)}x{len(self.rows)})"


class TableGroup:
    """Finite group given by a k x k multiplication table of indices."""

    def __init__(self, table):
        self.table = tuple(tuple(r) for r in table)
        k = len(self.table)
        assert all(len(r) == k for r in self.table)
        self.identity_idx = next(
            i for i in range(k)
            if all(self.table[i][j] == j and self.table[j][i] == j for j in range(k)))
        self.inverse = tuple(self.table[i].index(self.identity_idx) for i in range(k))

    def __len__(self):
        return len(self.table)

    def element(self, i):
        return TableElement(self, i)


class TableElement:
    __slots__ = ("group", "idx")

    def __init__(self, group, idx):
        self.group = group
        self.idx = idx

    def __mul__(self, other):
        assert self.group is other.group
        return TableElement(self.group, self.group.table[self.idx][other.idx])

    def inv(self):
        return TableElement(self.group, self.group.inverse[self.idx])

    def __eq__(self, other):
        return (isinstance(other, TableElement) and self.group is other.group
                and self.idx == other.idx)

    def __hash__(self):
        return hash((id(self.group), self.idx))

    def __repr__(self):
        return f"TableElement({self.idx})"


@dataclass(frozen=True)
class GroupSpec:
    """Ordered generators plus a seed involution; backend is the element type."""

    generators: tuple
    seed: object
    name: str = ""

    def identity(self):
        return self.seed * self.seed


def element_order(x, cap=10 ** 6):
    """Order of a group element (multiplications until the identity)."""
    e = x * x.inv()
    y = x
    for k in range(1, cap + 1):
        if y == e:
            return k
        y = y * x
    raise CapExceeded(f"element order exceeds {cap}")


@dataclass
class TranspositionClass:
    """A closed class of involutions with pair-order and third-point tables."""

    spec: GroupSpec
    elements: list
    index: dict
    pair_order: list          # list of bytearrays; order capped at 4 (4 = ">3")
    third: dict               # {(i, j) i<j: k} for pairs of product order 3
    labels: list = None

    def __len__(self):
        return len(self.elements)

    def order(self, i, j):
        return self.pair_order[i][j]

    def adjacent(self, i, j):
        return self.pair_order[i][j] == 3

    def third_point(self, i, j):
        assert i != j
        return self.third[(i, j) if i < j else (j, i)]

    def conj_index(self, i, j):
        """Index of elements[i] ** elements[j] (conjugation)."""
        o = self.pair_order[i][j]
        if o <= 2:
            return i
        return self.third_point(i, j)


def _scan_pairs(elements, index, identity, strict):
    """Pair-order and third-point tables via at most 3 product powers per pair."""
    n = len(elements)
    order_t = [bytearray(n) for _ in range(n)]
    third = {}
    for i in range(n):
        order_t[i][i] = 1
    for i in range(n):
        ei = elements[i]
        row = order_t[i]
        for j in range(i + 1, n):
            p = ei * elements[j]
            assert p != identity, "distinct involutions with trivial product"
            p2 = p * p
            if p2 == identity:
                o = 2
            else:
                if p2 * p == identity:
                    o = 3
                    t = index.get(elements[j] * p)  # d * (c*d) = c^d = d^c
                    assert t is not None, "class not closed under conjugation"
                    third[(i, j)] = t
                else:
                    if strict:
                        raise NotThreeTransposition(
                            f"product of elements {i} and {j} has order > 3")
                    o = 4
            row[j] = o
            order_t[j][i] = o
    return order_t, third


def conjugacy_closure(spec, cap=5000, strict=True):
    """Close the seed's conjugacy class breadth-first in generator order.

    The conjugating set is the generator list plus the seed itself, so the
    class of the seed inside <generators, seed> comes out closed under its
    own conjugation. Raises CapExceeded past cap elements and, when strict,
    NotThreeTransposition on any pair product of order > 3.
    """
    seed = spec.seed
    identity = seed * seed
    if seed == identity or identity * identity != identity:
        raise NotInvolution("seed is not an involution")
    conjugators = list(spec.generators)
    if seed not in conjugators:
        conjugators.append(seed)
    pairs = [(g, g.inv()) for g in conjugators]
    elements = [seed]
    index = {seed: 0}
    i = 0
    while i < len(elements):
        x = elements[i]
        for g, gi in pairs:
            y = gi * x * g
            if y not in index:
                if len(elements) >= cap:
                    raise CapExceeded(f"class size exceeds cap {cap}")
                index[y] = len(elements)
                elements.append(y)
        i += 1
    order_t, third = _scan_pairs(elements, index, identity, strict)
    return TranspositionClass(spec, elements, index, order_t, third)


def verify_3transpositions(cls):
    """True iff every off-diagonal pair order is 2 or 3."""
    n = len(cls)
    return all(cls.pair_order[i][j] in (2, 3)
               for i in range(n) for j in range(i + 1, n))


def perp_subclass(cls, i=0):
    """Subclass of elements commuting with element i (i excluded).

    Index order is inherited from the parent class, making the result
    canonical. The subclass is closed under its own conjugation, so the
    sliced third-point table stays internal.
    """
    n = len(cls)
    keep = [j for j in range(n) if j != i and cls.pair_order[i][j] == 2]
    if not keep:
        raise EmptyPerp(f"no element commutes with element {i}")
    old_to_new = {o: k for k, o in enumerate(keep)}
    elements = [cls.elements[o] for o in keep]
    index = {e: k for k, e in enumerate(elements)}
    m = len(keep)
    order_t = [bytearray(m) for _ in range(m)]
    third = {}
    for a, oa in enumerate(keep):
        row = cls.pair_order[oa]
        for b, ob in enumerate(keep):
            order_t[a][b] = row[ob]
            if a < b and row[ob] == 3:
                t = cls.third_point(oa, ob)
                assert t in old_to_new, "perp subclass not closed"
                third[(a, b)] = old_to_new[t]
    labels = [cls.labels[o] for o in keep] if cls.labels else None
    spec = GroupSpec(tuple(elements), elements[0],
                     name=(cls.spec.name + "-perp") if cls.spec.name else "perp")
    return TranspositionClass(spec, elements, index, order_t, third, labels)
