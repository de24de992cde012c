import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from axial.constructions import close_family, family_params
from axial.errors import NotIdempotent, WrongEta
from axial.jordan import (EtaAnalysis, eta_not_half_analysis,
                          is_primitive_axis, jordan_check,
                          jordan_modulo_radical, peirce, w_basis, w_element)
from axial.matsuo import build_matsuo, quotient, radical

HALF = Fraction(1, 2)


def get(fam, **kw):
    return close_family(family_params(fam, **kw))


def unit(n, i):
    return [Fraction(int(k == i)) for k in range(n)]


def test_w_symmetric_in_x_z_w(sym4_alg):
    A = sym4_alg.algebra
    n = A.dim
    x, y, z, w = unit(n, 0), unit(n, 2), unit(n, 3), unit(n, 5)
    base = w_element(A, x, y, z, w)
    for p, q, r in itertools.permutations((x, z, w)):
        assert w_element(A, p, y, q, r) == base


@given(st.fractions(min_value=-2, max_value=2, max_denominator=3),
       st.fractions(min_value=-2, max_value=2, max_denominator=3))
def test_w_linear_in_first_slot(s, t):
    A = build_matsuo(get("sym", m=4), HALF).algebra
    n = A.dim
    y, z, w = unit(n, 1), unit(n, 2), unit(n, 4)
    u, v = unit(n, 0), unit(n, 5)
    combo = [s * a + t * b for a, b in zip(u, v)]
    lhs = w_element(A, combo, y, z, w)
    wu = w_element(A, u, y, z, w)
    wv = w_element(A, v, y, z, w)
    assert lhs == [s * a + t * b for a, b in zip(wu, wv)]


@pytest.mark.parametrize("m", (3, 4, 5, 6))
def test_sym_matsuo_is_jordan(m):
    A = build_matsuo(get("sym", m=m), HALF).algebra
    verdict = jordan_check(A)
    assert verdict.is_jordan
    assert verdict.counterexample is None


def test_frob9_matsuo_is_jordan(frob9):
    A = build_matsuo(frob9, HALF).algebra
    assert jordan_check(A).is_jordan


def test_wralt4_quotient_not_jordan():
    M = build_matsuo(get("wralt4", n=4), HALF)
    assert len(radical(M)) == 12
    verdict = jordan_modulo_radical(M)
    assert not verdict.is_jordan
    assert verdict.counterexample == (1, 0, 3, 9)
    assert verdict.symmetry_used


def test_wralt4_counterexample_replays():
    M = build_matsuo(get("wralt4", n=4), HALF)
    x, y, z, w = jordan_modulo_radical(M).counterexample
    defect = w_basis(M.algebra, x, y, z, w)
    assert any(defect)
    assert any(M.gram.mul_vec(defect))


def test_full_y_sweep_agrees():
    M = build_matsuo(get("wralt4", n=4), HALF)
    verdict = jordan_modulo_radical(M, use_symmetry=False)
    assert not verdict.is_jordan
    assert verdict.counterexample == (0, 1, 3, 9)
    assert not verdict.symmetry_used


def test_threads_do_not_change_verdict():
    M = build_matsuo(get("wr2", n=4), HALF)
    one = jordan_modulo_radical(M, threads=1)
    two = jordan_modulo_radical(M, threads=2)
    assert one.is_jordan and two.is_jordan
    bad = build_matsuo(get("wralt4", n=4), HALF)
    assert jordan_modulo_radical(bad, threads=2).counterexample == \
        jordan_modulo_radical(bad, threads=1).counterexample


def test_positive_quotients_are_jordan(wr3_4_alg, sp3_alg):
    for M, dim in ((wr3_4_alg, 16), (sp3_alg, 28)):
        rad = radical(M)
        assert quotient(M, rad).algebra.dim == dim
        assert jordan_modulo_radical(M).is_jordan


def test_direct_check_catches_wralt4():
    A = build_matsuo(get("wralt4", n=4), HALF).algebra
    verdict = jordan_check(A)
    assert not verdict.is_jordan
    assert verdict.counterexample == (0, 1, 3, 6)
    x, y, z, w = verdict.counterexample
    assert any(w_basis(A, x, y, z, w))


def test_peirce_on_class_axis():
    cls = get("sym", m=5)
    A = build_matsuo(cls, HALF).algebra
    n = A.dim
    deg = sum(1 for j in range(1, n) if cls.adjacent(0, j))
    rep = peirce(A, unit(n, 0), (Fraction(1), Fraction(0), HALF))
    assert rep.dims == {Fraction(1): 1, Fraction(0): n - 1 - deg // 2,
                        HALF: deg // 2}
    assert rep.fusion_violations == ()


def test_peirce_rejects_non_idempotent(sym4_alg):
    A = sym4_alg.algebra
    v = [Fraction(2)] + [Fraction(0)] * (A.dim - 1)
    with pytest.raises(NotIdempotent):
        peirce(A, v, (Fraction(1), Fraction(0), HALF))


def test_class_axes_are_primitive(sym4_alg):
    A = sym4_alg.algebra
    for i in range(A.dim):
        assert is_primitive_axis(A, unit(A.dim, i), HALF)


def test_uniform_vector_is_not_primitive(sym4_alg):
    A = sym4_alg.algebra
    # idempotent of the wrong shape: scaled all-ones vector
    total = A.mul_vec([Fraction(1)] * A.dim, [Fraction(1)] * A.dim)
    lam = total[0]
    cand = [Fraction(1) / lam] * A.dim
    assert A.mul_vec(cand, cand) == cand
    assert not is_primitive_axis(A, cand, HALF)


def test_eta_two_complete_diagram_gives_case_ii(frob9):
    for cls in (get("sym", m=3), frob9):
        M = build_matsuo(cls, Fraction(2))
        rep = eta_not_half_analysis(M)
        assert rep.case == "ii"
        assert rep.quotient_dim == 1


def test_single_point_gives_case_i():
    M = build_matsuo(get("sym", m=2), Fraction(3))
    assert M.algebra.dim == 1
    rep = eta_not_half_analysis(M)
    assert rep.case == "i"
    assert rep.quotient_dim == 1


@pytest.mark.parametrize("eta", (Fraction(3), Fraction(-1), Fraction(1, 3)))
def test_other_eta_admits_no_jordan_factor(sym4, eta):
    M = build_matsuo(sym4, eta)
    rep = eta_not_half_analysis(M)
    assert rep.case == "no_jordan_factor"
    assert rep.quotient_dim is None


def test_eta_two_incomplete_diagram_fails(sym4):
    M = build_matsuo(sym4, Fraction(2))
    assert eta_not_half_analysis(M).case == "no_jordan_factor"


def test_analysis_refuses_eta_half(sym4_alg):
    with pytest.raises(WrongEta):
        eta_not_half_analysis(sym4_alg)
