"""Factories for the built-in 3-transposition families.

Covered families: transpositions of Sym(m); wreath classes Wr(T,n) for base
groups T of exponent dividing 6 (cyclic of order 2 or 3, Alt(4)); the nine
affine involutions x -> c - x on a 3x3 grid; symplectic, orthogonal and
unitary transvection classes over GF(2) and GF(4); reflection classes of the
orthogonal groups over GF(3).

The literature fixes these groups only up to isomorphism, never a concrete
form or transvection convention, so the matrix factories are oracle gated:
each closed class must reproduce the point count of its classification row
(labels PR1..PR12, parameters h, m, eps) or construction fails loudly.
"""

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache

from .errors import (BadBaseGroup, BadParams, CapExceeded, NotInvolution,
                     OracleMismatch, ParseError)
from .groups import (GF4_MUL, Mat, Perm, TableGroup, GroupSpec,
                     conjugacy_closure, perp_subclass)


class WreathElement:
    """Element of T wr Sym(n): a length-n word over T plus a slot permutation.

    word[l] is the index (into the base group table) of the entry in slot l.
    Products push the right factor's word through the left factor's slot
    permutation: (u, s)(v, t) acts on slot l as u[l] * v[s(l)], slots s then t.
    """

    __slots__ = ("word", "perm", "group")

    def __init__(self, word, perm, group):
        self.word = tuple(word)
        self.perm = tuple(perm)
        self.group = group

    def __mul__(self, other):
        tbl = self.group.table
        ow, op = other.word, other.perm
        return WreathElement(
            (tbl[a][ow[b]] for a, b in zip(self.word, self.perm)),
            (op[b] for b in self.perm), self.group)

    def inv(self):
        n = len(self.perm)
        pinv = [0] * n
        for l, x in enumerate(self.perm):
            pinv[x] = l
        invert = self.group.inverse
        return WreathElement((invert[self.word[pinv[l]]] for l in range(n)),
                             pinv, self.group)

    def __eq__(self, other):
        return (isinstance(other, WreathElement)
                and self.group is other.group
                and self.word == other.word and self.perm == other.perm)

    def __hash__(self):
        return hash((self.word, self.perm))

    def __repr__(self):
        return f"WreathElement({self.word}, {self.perm})"


def cyclic_table(p):
    """Multiplication table of the cyclic group of order p (index = residue)."""
    return tuple(tuple((i + j) % p for j in range(p)) for i in range(p))


def alt4_table():
    """Multiplication table of Alt(4) over its 12 even permutations, sorted."""
    perms = sorted((p for p in itertools.permutations(range(4))
                    if _parity(p) == 0))
    index = {p: i for i, p in enumerate(perms)}
    return tuple(tuple(index[tuple(q[x] for x in p)] for q in perms)
                 for p in perms)


def _parity(img):
    flips = sum(1 for a, b in itertools.combinations(img, 2) if a > b)
    return flips & 1


def build_sym(m):
    """Transposition class of Sym(m): adjacent swaps generate, seed (0 1)."""
    if m < 2:
        raise BadParams("need m >= 2")
    gens = tuple(Perm.from_cycles([[i, i + 1]], m) for i in range(m - 1))
    return GroupSpec(gens, gens[0], name=f"Sym({m})")


def build_wreath(table, n):
    """Swap class of T wr Sym(n) for a table-backed base group T.

    The class consists of the symbols t.(i,j): word t at slot i, its inverse
    at slot j, times the slot swap (i j). Generators are every t.(0,1) plus
    the plain adjacent swaps, which reach the whole class by conjugation.
    """
    if n < 3:
        raise BadParams("need n >= 3")
    tg = TableGroup(table)
    k = len(tg)
    for t in range(k):
        power, order = tg.table[t][t], 2
        while power != tg.identity_idx:
            power, order = tg.table[power][t], order + 1
            if order > 3:
                raise BadBaseGroup(f"base group element {t} has order > 3")
    ident = (tg.identity_idx,) * n

    def swap(i, j):
        img = list(range(n))
        img[i], img[j] = j, i
        return tuple(img)

    gens = []
    for t in range(k):
        word = list(ident)
        word[0], word[1] = t, tg.inverse[t]
        gens.append(WreathElement(word, swap(0, 1), tg))
    for l in range(1, n - 1):
        gens.append(WreathElement(ident, swap(l, l + 1), tg))
    seed = WreathElement(ident, swap(0, 1), tg)
    return GroupSpec(tuple(gens), seed, name=f"Wr(T{k},{n})")


def build_wr2(n):
    """Wreath class over the cyclic group of order 2, n(n-1) points."""
    if n < 4:
        raise BadParams("need n >= 4")
    spec = build_wreath(cyclic_table(2), n)
    return GroupSpec(spec.generators, spec.seed, name=f"Wr(2,{n})")


def build_wr3(n):
    """Wreath class over the cyclic group of order 3, 3n(n-1)/2 points."""
    if n < 4:
        raise BadParams("need n >= 4")
    spec = build_wreath(cyclic_table(3), n)
    return GroupSpec(spec.generators, spec.seed, name=f"Wr(3,{n})")


def wr_point_labels(cls, p):
    """Decode ('b', i, j) / ('c', i, j) labels for a Wr(p,n) class, 0-based.

    A class element swaps exactly two slots i < j and carries t in slot i.
    t = 0 is the bare swap b_{i,j}; for p = 2 the nonzero t is c_{i,j}; for
    p = 3 the vector e_i - e_j gives c_{i,j} and its negative c_{j,i}.
    """
    labels = []
    for e in cls.elements:
        i, j = (l for l, x in enumerate(e.perm) if x != l)
        t = e.word[i]
        if t == 0:
            labels.append(("b", i, j))
        elif p == 2 or t == 1:
            labels.append(("c", i, j))
        else:
            labels.append(("c", j, i))
    return labels


def build_frob9():
    """The nine involutions x -> c - x of the affine plane over GF(3).

    Points are pairs (a, b) indexed 3a + b; any two of the nine maps multiply
    to a translation of order 3, so the diagram is the complete graph K9.
    """
    gens = []
    for c0 in range(3):
        for c1 in range(3):
            img = [3 * ((c0 - a) % 3) + ((c1 - b) % 3)
                   for a in range(3) for b in range(3)]
            gens.append(Perm(img))
    return GroupSpec(tuple(gens), gens[0], name="3^2:2")


def _unit(n, j):
    return tuple(1 if i == j else 0 for i in range(n))


def _transvection_gf2(bilinear, v, n):
    # row convention: vectors are rows, x -> x + b(x, v) v
    rows = []
    for j in range(n):
        coeff = bilinear(_unit(n, j), v)
        rows.append(tuple((1 if i == j else 0) ^ (coeff & v[i] if coeff else 0)
                          for i in range(n)))
    return Mat(2, rows)


def build_sp(m):
    """Symplectic transvection class of Sp_{2m}(2): all 4^m - 1 transvections.

    The alternating form pairs slots (2i, 2i+1). Seed is the transvection at
    the first basis vector; every nonzero vector contributes one transvection.
    """
    if m < 3:
        raise BadParams("need m >= 3")
    if m > 4:
        raise CapExceeded("symplectic rank past desk scale (m <= 4)")
    n = 2 * m

    def form(x, y):
        return sum(x[2 * i] * y[2 * i + 1] + x[2 * i + 1] * y[2 * i]
                   for i in range(m)) & 1

    vecs = sorted(v for v in itertools.product((0, 1), repeat=n) if any(v))
    gens = tuple(_transvection_gf2(form, v, n) for v in vecs)
    seed = _transvection_gf2(form, _unit(n, 0), n)
    return GroupSpec(gens, seed, name=f"Sp{n}(2)")


def build_orthogonal2(m, eps):
    """Orthogonal transvection class of O^eps_{2m}(2).

    The quadratic form is a sum of hyperbolic pairs x_{2i} x_{2i+1}, with the
    last pair replaced by x^2 + xy + y^2 for minus type. Transvections sit at
    the vectors of norm 1; their count is 2^{2m-1} - 2^{m-1} for plus type
    and 2^{2m-1} + 2^{m-1} for minus type.
    """
    if m < 3:
        raise BadParams("need m >= 3")
    if (m, eps) == (3, "plus"):
        raise BadParams("the (m, eps) = (3, plus) class is the Sym(8) one")
    if m > 5:
        raise CapExceeded("orthogonal rank past desk scale (m <= 5)")
    if eps not in ("plus", "minus"):
        raise BadParams("eps must be 'plus' or 'minus'")
    n = 2 * m

    def quad(x):
        q = sum(x[2 * i] * x[2 * i + 1] for i in range(m))
        if eps == "minus":
            q += x[n - 2] ** 2 + x[n - 1] ** 2
        return q & 1

    def form(x, y):
        s = tuple(a ^ b for a, b in zip(x, y))
        return quad(s) ^ quad(x) ^ quad(y)

    vecs = sorted(v for v in itertools.product((0, 1), repeat=n)
                  if any(v) and quad(v) == 1)
    gens = tuple(_transvection_gf2(form, v, n) for v in vecs)
    return GroupSpec(gens, gens[0], name=f"O{n}{'+' if eps == 'plus' else '-'}(2)")


def build_su(m):
    """Unitary transvection class of SU_m(2) over GF(4).

    The Hermitian form is h(x, y) = sum x_k conj(y_k) with conj the squaring
    map. Involutive unitary transvections are x -> x + h(x, v) v at isotropic
    v != 0; proportional centers give equal maps, so matrices are deduped.
    The closed class size is checked against the classification row.
    """
    if m not in (4, 5):
        raise BadParams("built-in desk scale has m in {4, 5}")
    conj = (0, 1, 3, 2)
    seen = set()
    mats = []
    for v in itertools.product(range(4), repeat=m):
        if not any(v):
            continue
        if sum(1 for x in v if x) & 1:
            continue  # h(v, v) = parity of the nonzero support
        rows = tuple(tuple((1 if i == j else 0)
                           ^ GF4_MUL[conj[v[j]]][v[i]]
                           for i in range(m)) for j in range(m))
        if rows not in seen:
            seen.add(rows)
            mats.append(Mat(4, rows))
    mats.sort(key=lambda a: a.rows)
    spec = GroupSpec(tuple(mats), mats[0], name=f"SU{m}(2)")
    expected = (2 ** (2 * m - 1) + (2 ** (m - 1) if m % 2 == 0 else
                                    -2 ** (m - 1)) - 1) // 3
    if len(mats) != expected or len(conjugacy_closure(spec).elements) != expected:
        raise OracleMismatch(
            f"SU_{m}(2) transvection count != {expected}")
    return spec


@lru_cache(maxsize=None)
def _omega3_reflections(m, eps):
    """Reflection matrices over GF(3) for the norm-1 centers, deduped by sign.

    Two diagonal forms are nondegenerate up to equivalence; the one whose
    norm-1 reflection count matches the expected class size is kept. The
    count alone pins the form: the two candidates never tie.
    """
    expected = _omega3_class_size(m, eps)
    for first in (1, 2):
        diag = (first,) + (1,) * (m - 1)

        def form(x, y):
            return sum(d * a * b for d, a, b in zip(diag, x, y)) % 3

        mats = set()
        for v in itertools.product(range(3), repeat=m):
            if form(v, v) != 1:
                continue
            mats.add(tuple(
                tuple(((1 if i == j else 0) + form(_unit(m, j), v) * v[i]) % 3
                      for i in range(m))
                for j in range(m)))
        if len(mats) == expected:
            return tuple(Mat(3, rows) for rows in sorted(mats))
    raise OracleMismatch(
        f"no diagonal form over GF(3) yields {expected} reflections")


def _omega3_class_size(m, eps):
    sign = -1 if eps == "plus" else 1
    if m % 2 == 0:
        return (3 ** (m - 1) + sign * 3 ** ((m - 2) // 2)) // 2
    return (3 ** (m - 1) + sign * 3 ** ((m - 1) // 2)) // 2


def build_omega3(m, eps):
    """Reflection class of the orthogonal group over GF(3) in dimension m.

    Even m: reflections at norm-1 centers for the form of the right type.
    Odd m: the commuting subclass of a point inside the even case one
    dimension up, which is where the odd-dimensional class lives.
    """
    if m not in (5, 6):
        raise BadParams("built-in desk scale has m in {5, 6}")
    if eps not in ("plus", "minus"):
        raise BadParams("eps must be 'plus' or 'minus'")
    sign = "+" if eps == "plus" else "-"
    if m % 2 == 0:
        mats = _omega3_reflections(m, eps)
        return GroupSpec(mats, mats[0], name=f"+O{m}{sign}(3)")
    mats = _omega3_reflections(m + 1, eps)
    parent = conjugacy_closure(GroupSpec(mats, mats[0]))
    sub = perp_subclass(parent, 0)
    if len(sub) != _omega3_class_size(m, eps):
        raise OracleMismatch(
            f"commuting subclass size {len(sub)} != expected "
            f"{_omega3_class_size(m, eps)}")
    return GroupSpec(tuple(sub.elements), sub.elements[0],
                     name=f"+O{m}{sign}(3)")


# ---------------------------------------------------------------------------
# family registry

@dataclass(frozen=True)
class FamilyParams:
    """Normalized construction request plus its classification row data."""

    family: str
    m: int = None
    n: int = None
    eps: str = None
    path: str = None
    pr_label: str = None
    pr_h: int = None
    pr_m: int = None
    pr_eps: str = None


FAMILIES = ("sym", "wr2", "wr3", "wralt4", "frob9", "sp", "o2", "su",
            "omega3", "su-perp", "file")


def family_params(family, m=None, n=None, eps=None, path=None):
    """Validate raw family arguments and fill in the classification row."""
    if family == "sym":
        if m is None:
            raise BadParams("sym needs m")
        return FamilyParams("sym", m=m, pr_label="PR2(a)", pr_h=0, pr_m=m)
    if family == "wr2":
        if n is None:
            raise BadParams("wr2 needs n")
        return FamilyParams("wr2", n=n, pr_label="PR2(a)", pr_h=1, pr_m=n)
    if family == "wr3":
        if n is None:
            raise BadParams("wr3 needs n")
        return FamilyParams("wr3", n=n, pr_label="PR2(b)", pr_h=1, pr_m=n)
    if family == "wralt4":
        if n is None:
            raise BadParams("wralt4 needs n")
        return FamilyParams("wralt4", n=n, pr_label="PR2(d)", pr_h=1, pr_m=n)
    if family == "frob9":
        return FamilyParams("frob9", pr_label="PR1", pr_h=2)
    if family == "sp":
        if m is None:
            raise BadParams("sp needs m")
        return FamilyParams("sp", m=m, pr_label="PR4", pr_h=0, pr_m=m)
    if family == "o2":
        if m is None or eps is None:
            raise BadParams("o2 needs m and eps")
        return FamilyParams("o2", m=m, eps=eps, pr_label="PR3", pr_h=0,
                            pr_m=m, pr_eps=eps)
    if family == "su":
        if m is None:
            raise BadParams("su needs m")
        return FamilyParams("su", m=m, pr_label="PR6", pr_h=0, pr_m=m)
    if family == "omega3":
        if m is None or eps is None:
            raise BadParams("omega3 needs m and eps")
        return FamilyParams("omega3", m=m, eps=eps, pr_label="PR5", pr_h=0,
                            pr_m=m, pr_eps=eps)
    if family == "su-perp":
        return FamilyParams("su-perp", pr_label="PR6", pr_h=1, pr_m=3)
    if family == "file":
        if path is None:
            raise BadParams("file family needs a path")
        return FamilyParams("file", path=path)
    raise BadParams(f"unknown family {family!r}")


def expected_class_size(fp):
    """Point count the closed class must reproduce (None for file input)."""
    f = fp.family
    if f == "sym":
        return fp.m * (fp.m - 1) // 2
    if f == "wr2":
        return fp.n * (fp.n - 1)
    if f == "wr3":
        return 3 * fp.n * (fp.n - 1) // 2
    if f == "wralt4":
        return 6 * fp.n * (fp.n - 1)
    if f == "frob9":
        return 9
    if f == "sp":
        return 4 ** fp.m - 1
    if f == "o2":
        half = 2 ** (fp.m - 1)
        return 2 * half * half + (-half if fp.eps == "plus" else half)
    if f == "su":
        return (2 ** (2 * fp.m - 1)
                + (2 ** (fp.m - 1) if fp.m % 2 == 0 else -2 ** (fp.m - 1))
                - 1) // 3
    if f == "omega3":
        return _omega3_class_size(fp.m, fp.eps)
    if f == "su-perp":
        return 36
    return None


_CLOSED = {}


def close_family(fp, cap=5000):
    """Build, close and size-check the class for a family request.

    Results are memoized per process: classes are immutable and the matrix
    families are the expensive ones to close. Wr(2,n) and Wr(3,n) classes
    come back with their b/c point labels attached.
    """
    key = (fp, cap)
    if key in _CLOSED:
        return _CLOSED[key]
    f = fp.family
    if f == "su-perp":
        parent = close_family(family_params("su", m=5), cap=cap)
        cls = perp_subclass(parent, 0)
    else:
        builders = {
            "sym": lambda: build_sym(fp.m),
            "wr2": lambda: build_wr2(fp.n),
            "wr3": lambda: build_wr3(fp.n),
            "wralt4": lambda: build_wreath(alt4_table(), fp.n),
            "frob9": build_frob9,
            "sp": lambda: build_sp(fp.m),
            "o2": lambda: build_orthogonal2(fp.m, fp.eps),
            "su": lambda: build_su(fp.m),
            "omega3": lambda: build_omega3(fp.m, fp.eps),
            "file": lambda: load_group_file(fp.path),
        }
        cls = conjugacy_closure(builders[f](), cap=cap)
    expected = expected_class_size(fp)
    if expected is not None and len(cls) != expected:
        raise OracleMismatch(
            f"{f} class closed to {len(cls)} points, expected {expected}")
    if f in ("wr2", "wr3"):
        cls.labels = wr_point_labels(cls, 2 if f == "wr2" else 3)
    _CLOSED[key] = cls
    return cls


# ---------------------------------------------------------------------------
# group files

_CYCLES_RE = re.compile(r"^(\(\s*\d+(\s*,\s*\d+)*\s*\)|\(\s*\))*$")
_CYCLE_BODY_RE = re.compile(r"\(([^()]*)\)")


def _parse_perm(data, n, lineno):
    text = data.strip()
    if not _CYCLES_RE.match(text):
        raise ParseError(f"malformed cycle notation {data!r}", line=lineno)
    cycles = []
    for body in _CYCLE_BODY_RE.findall(text):
        pts = [int(tok) for tok in body.split(",")] if body.strip() else []
        if any(not 1 <= p <= n for p in pts):
            raise ParseError(f"cycle point out of range 1..{n}", line=lineno)
        if len(set(pts)) != len(pts):
            raise ParseError("repeated point inside a cycle", line=lineno)
        cycles.append([p - 1 for p in pts])
    return Perm.from_cycles(cycles, n)


def _parse_mat(data, q, n, lineno):
    toks = data.split()
    if len(toks) != n * n:
        raise ParseError(f"expected {n * n} entries, got {len(toks)}",
                         line=lineno)
    try:
        vals = [int(t) for t in toks]
    except ValueError:
        raise ParseError("matrix entries must be integers", line=lineno)
    if any(not 0 <= v < q for v in vals):
        raise ParseError(f"matrix entry out of range 0..{q - 1}", line=lineno)
    return Mat(q, [vals[i * n:(i + 1) * n] for i in range(n)])


def load_group_file(path):
    """Parse the plain text group format into a GroupSpec.

    Line 1 declares the backend: 'perm <n>', 'mat <q> <n>' or 'table <k>'.
    For tables, the next k lines hold the k x k multiplication block as
    bare 0-based indices. Generators follow as 'gen <data>' lines and the
    single 'seed <data>' line closes the file; data is cycle notation for
    permutations, n*n row-major entries for matrices, an element index for
    tables. Blank lines and '#' comments are skipped.
    """
    with open(path) as fh:
        raw = fh.read().splitlines()
    lines = [(no, ln.strip()) for no, ln in enumerate(raw, 1)
             if ln.strip() and not ln.strip().startswith("#")]
    if not lines:
        raise ParseError("empty group file")
    no, header = lines[0]
    fields = header.split()
    rest = lines[1:]
    group = None
    if fields[0] == "perm" and len(fields) == 2 and fields[1].isdigit():
        n = int(fields[1])
        parse = lambda data, ln: _parse_perm(data, n, ln)
    elif (fields[0] == "mat" and len(fields) == 3
          and fields[1].isdigit() and fields[2].isdigit()):
        q, n = int(fields[1]), int(fields[2])
        if q not in (2, 3, 4):
            raise ParseError("matrix field size must be 2, 3 or 4", line=no)
        parse = lambda data, ln: _parse_mat(data, q, n, ln)
    elif fields[0] == "table" and len(fields) == 2 and fields[1].isdigit():
        k = int(fields[1])
        if len(rest) < k:
            raise ParseError(f"table backend needs {k} table rows", line=no)
        block = []
        for rno, row in rest[:k]:
            toks = row.split()
            if len(toks) != k or not all(t.isdigit() for t in toks):
                raise ParseError(f"expected {k} table indices", line=rno)
            vals = [int(t) for t in toks]
            if any(v >= k for v in vals):
                raise ParseError("table index out of range", line=rno)
            block.append(vals)
        try:
            group = TableGroup(block)
        except StopIteration:
            raise ParseError("multiplication table has no identity", line=no)
        rest = rest[k:]

        def parse(data, ln):
            if not data.strip().isdigit() or int(data) >= k:
                raise ParseError("element must be an index below "
                                 f"{k}", line=ln)
            return group.element(int(data))
    else:
        raise ParseError(f"bad header {header!r}", line=no)

    gens, seed = [], None
    for lno, ln in rest:
        kw, _, data = ln.partition(" ")
        if kw == "gen":
            gens.append(parse(data, lno))
        elif kw == "seed":
            if seed is not None:
                raise ParseError("more than one seed line", line=lno)
            seed = parse(data, lno)
        else:
            raise ParseError(f"unexpected keyword {kw!r}", line=lno)
    if seed is None:
        raise ParseError("missing seed line")
    if not gens:
        raise ParseError("no generator lines")
    identity = seed * seed.inv()
    if seed == identity or seed * seed != identity:
        raise NotInvolution("seed element does not have order 2")
    return GroupSpec(tuple(gens), seed, name=f"file:{path}")
