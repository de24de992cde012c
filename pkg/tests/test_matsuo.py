import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from axial.constructions import close_family, family_params
from axial.errors import BadEta, MissingLabels, NotAnIdeal, WrongEta
from axial.exact import RatMatrix, rank, rref
from axial.matsuo import (algebra_json, build_matsuo, check_equivariance,
                          check_frobenius, check_gram_identity, gram_pair,
                          quotient, radical, radical_dim_via_spectrum,
                          wr_radical_basis)

HALF = Fraction(1, 2)


def get(fam, **kw):
    return close_family(family_params(fam, **kw))


def test_product_rules(sym4, sym4_alg):
    M = sym4_alg
    n = M.algebra.dim
    for i in range(n):
        assert dict(M.algebra.pair_product(i, i)) == {i: Fraction(1)}
        for j in range(i + 1, n):
            p = dict(M.algebra.pair_product(i, j))
            if sym4.order(i, j) == 2:
                assert p == {}
                assert M.gram[i, j] == 0
            else:
                k = sym4.third_point(i, j)
                assert p == {i: Fraction(1, 4), j: Fraction(1, 4),
                             k: Fraction(-1, 4)}
                assert M.gram[i, j] == Fraction(1, 4)
        assert M.gram[i, i] == 1


def test_gram_and_frobenius_on_fixtures(sym4_alg, wr2_5_alg, wr3_4_alg,
                                        sp3_alg):
    for M in (sym4_alg, wr2_5_alg, wr3_4_alg, sp3_alg):
        assert check_gram_identity(M)
        assert check_frobenius(M)


def test_equivariance_on_fixtures(sym4_alg, wr2_5_alg, wr3_4_alg, sp3_alg):
    for M in (sym4_alg, wr2_5_alg, wr3_4_alg, sp3_alg):
        assert check_equivariance(M)


def test_eta_excluded_values(sym4):
    for eta in (Fraction(0), Fraction(1)):
        with pytest.raises(BadEta):
            build_matsuo(sym4, eta)


def test_zero_radical_for_small_sym():
    for m in (3, 4, 5, 6):
        M = build_matsuo(get("sym", m=m), HALF)
        assert radical(M) == []
        assert radical_dim_via_spectrum(M) == 0


def test_frob9_zero_radical(frob9):
    M = build_matsuo(frob9, HALF)
    assert radical(M) == []
    assert radical_dim_via_spectrum(M) == 0


RADICAL_CASES = (
    ("sp", dict(m=3), 35, 28),
    ("o2", dict(m=3, eps="minus"), 15, 21),
    ("su", dict(m=4), 20, 25),
    ("su-perp", {}, 8, 28),
)


@pytest.mark.parametrize("fam,kw,rad_dim,quo_dim", RADICAL_CASES,
                         ids=[f"{f}-{k}" for f, k, _, _ in RADICAL_CASES])
def test_radical_dims_two_ways(fam, kw, rad_dim, quo_dim):
    M = build_matsuo(get(fam, **kw), HALF)
    rad = radical(M)
    assert len(rad) == rad_dim
    assert radical_dim_via_spectrum(M) == rad_dim
    assert quotient(M, rad).algebra.dim == quo_dim


@pytest.mark.parametrize("fam,p", (("wr2", 2), ("wr3", 3)))
@pytest.mark.parametrize("n", (4, 5, 6, 7, 8))
def test_wreath_radical_closed_form(fam, p, n):
    cls = get(fam, n=n)
    M = build_matsuo(cls, HALF)
    rad = radical(M)
    assert len(rad) == n * (n - 3) // 2
    closed = wr_radical_basis(cls, p, n)
    assert len(closed) == len(rad)
    # contained in the kernel...
    for v in closed:
        assert not any(M.gram.mul_vec(v))
    # ...and spanning it: same reduced row space both ways
    assert rref(RatMatrix([list(v) for v in closed]))[0] == \
        rref(RatMatrix([list(v) for v in rad]))[0]


def test_wr_radical_basis_needs_labels(sp3):
    with pytest.raises(MissingLabels):
        wr_radical_basis(sp3, 2, 4)


def test_quotient_projection_section(wr2_5_alg):
    M = wr2_5_alg
    rad = radical(M)
    Q = quotient(M, rad)
    assert Q.algebra.dim == 15
    for v in rad:
        assert not any(Q.projection.mul_vec(v))
    # section coordinates project to unit vectors
    for qi, orig in enumerate(Q.section):
        unit = [Fraction(int(t == orig)) for t in range(M.algebra.dim)]
        img = Q.projection.mul_vec(unit)
        assert img == [Fraction(int(t == qi)) for t in range(Q.algebra.dim)]


def test_quotient_refuses_non_ideal(sym4_alg):
    e0 = [Fraction(int(i == 0)) for i in range(6)]
    with pytest.raises(NotAnIdeal) as err:
        quotient(sym4_alg, [e0])
    assert err.value.witness is not None


def test_quotient_with_zero_ideal(sym4_alg):
    Q = quotient(sym4_alg, [])
    assert Q.algebra.dim == 6
    assert Q.section == tuple(range(6))


def test_gram_pair_matches_form(sym4, sym4_alg):
    M = sym4_alg
    n = M.algebra.dim
    u = [Fraction(1)] * n
    # (sum of all, sum of all) = n + 2 * (eta/2) * adjacent pairs
    adj = sum(1 for i in range(n) for j in range(i + 1, n)
              if sym4.adjacent(i, j))
    assert gram_pair(M, u, u) == n + 2 * Fraction(1, 4) * adj


def test_algebra_json_deterministic(wr3_4_alg):
    a = json.dumps(algebra_json(wr3_4_alg), sort_keys=True)
    M2 = build_matsuo(get("wr3", n=4), HALF)
    b = json.dumps(algebra_json(M2), sort_keys=True)
    assert a == b
    payload = algebra_json(wr3_4_alg)
    assert payload["dim"] == 18
    assert payload["eta"] == "1/2"
    assert all("/" in c or c.lstrip("-").isdigit()
               for pairs in payload["products"].values() for _, c in pairs)


def test_spectrum_radical_requires_half(sym4):
    M = build_matsuo(sym4, Fraction(1, 3))
    with pytest.raises(WrongEta):
        radical_dim_via_spectrum(M)


@given(st.integers(min_value=0, max_value=5), st.integers(min_value=0, max_value=5),
       st.fractions(min_value=-3, max_value=3, max_denominator=4),
       st.fractions(min_value=-3, max_value=3, max_denominator=4))
def test_frobenius_bilinear_random(i, j, s, t):
    # associativity (u*v, w) = (u, v*w) extends bilinearly; spot-check with
    # random linear combinations on a fixed small algebra
    cls = close_family(family_params("sym", m=4))
    M = build_matsuo(cls, HALF)
    n = M.algebra.dim
    u = [Fraction(0)] * n
    u[i] = Fraction(1)
    v = [s if k == j else Fraction(0) for k in range(n)]
    w = [t] * n
    uv = M.algebra.mul_vec(u, v)
    vw = M.algebra.mul_vec(v, w)
    assert gram_pair(M, uv, w) == gram_pair(M, u, vw)
