from fractions import Fraction

import pytest

from axial.constructions import close_family, family_params
from axial.errors import BadParams, InconsistentLine
from axial.fischer import (Diagram, SpectrumReport, Table1Row, diagram,
                           diagram_fingerprint, edge_list_text,
                           expected_spectrum, is_connected, lines,
                           spectra_match, spectrum)

# every desk-scale built-in: computed size and spectrum must equal the
# classification row's closed forms exactly
CASES = (
    ("sym", dict(m=3)), ("sym", dict(m=4)), ("sym", dict(m=5)),
    ("sym", dict(m=6)), ("sym", dict(m=7)), ("sym", dict(m=8)),
    ("wr2", dict(n=4)), ("wr2", dict(n=5)), ("wr2", dict(n=6)),
    ("wr2", dict(n=7)), ("wr2", dict(n=8)),
    ("wr3", dict(n=4)), ("wr3", dict(n=5)), ("wr3", dict(n=6)),
    ("wr3", dict(n=7)), ("wr3", dict(n=8)),
    ("wralt4", dict(n=4)),
    ("frob9", {}),
    ("sp", dict(m=3)),
    ("o2", dict(m=3, eps="minus")), ("o2", dict(m=4, eps="plus")),
    ("o2", dict(m=4, eps="minus")),
    ("su", dict(m=4)), ("su", dict(m=5)),
    ("omega3", dict(m=5, eps="plus")), ("omega3", dict(m=5, eps="minus")),
    ("omega3", dict(m=6, eps="minus")),
    ("su-perp", {}),
)


@pytest.mark.parametrize("family,kwargs", CASES,
                         ids=[f"{f}-{k}" for f, k in CASES])
def test_size_and_spectrum_match_closed_forms(family, kwargs):
    fp = family_params(family, **kwargs)
    cls = close_family(fp)
    g = diagram(cls)
    assert is_connected(g)
    spec = spectrum(g)
    assert spec.unaccounted_mass == 0
    row = Table1Row(fp.pr_label, h=fp.pr_h or 0, m=fp.pr_m, eps=fp.pr_eps)
    assert row.size == len(cls)
    assert spectra_match(spec, expected_spectrum(row))


@pytest.mark.parametrize("family,kwargs", CASES,
                         ids=[f"{f}-{k}" for f, k in CASES])
def test_every_adjacent_pair_lies_on_one_line(family, kwargs):
    cls = close_family(family_params(family, **kwargs))
    g = diagram(cls)
    ls = lines(cls)
    n_adj = sum(sum(r) for r in g.adjacency) // 2
    assert len(ls) * 3 == n_adj
    for a, b, c in ls:
        assert cls.adjacent(a, b) and cls.adjacent(b, c) and cls.adjacent(a, c)
        assert cls.third_point(a, b) == c


def test_single_point_row():
    row = Table1Row("PR2(a)", h=0, m=2)
    assert row.size == 1
    assert expected_spectrum(row).pairs == ((0, 1),)


def test_rows_reject_bad_parameters():
    for bad in (Table1Row("PR3", m=3, eps="plus"),
                Table1Row("PR5", m=4, eps="plus"),
                Table1Row("PR4", m=2), Table1Row("PR1", h=-1),
                Table1Row("PR3", m=4), Table1Row("PRX")):
        with pytest.raises(BadParams):
            expected_spectrum(bad)


def test_sporadic_rows_have_consistent_mass():
    for label in ("PR7(a)", "PR7(b)", "PR7(c)", "PR7(d)", "PR7(e)"):
        row = Table1Row(label)
        rep = expected_spectrum(row)
        assert rep.total() == row.size
        assert rep.pairs[0][1] == 1  # simple top eigenvalue


def test_pr7d_row_values():
    row = Table1Row("PR7(d)")
    assert row.size == 360
    assert dict(row.spectrum_pairs)[-4] == 252


def test_spectra_match_normalizes():
    a = SpectrumReport(((4, 1), (0, 2), (0, 1), (-2, 2)))
    b = SpectrumReport(((4, 1), (0, 3), (-2, 2), (7, 0)))
    c = SpectrumReport(((4, 1), (0, 3), (-2, 2)), unaccounted_mass=1)
    assert spectra_match(a, b)
    assert not spectra_match(a, c)


def test_disconnected_diagram_detected():
    g = Diagram(4, [[0, 1, 0, 0], [1, 0, 0, 0],
                    [0, 0, 0, 1], [0, 0, 1, 0]], None)
    assert not is_connected(g)


def test_fingerprint_separates_cospectral_invariants(sym4):
    g = diagram(sym4)
    fp = diagram_fingerprint(g)
    assert fp.startswith("n=6;")
    assert "spec=" in fp and "tri=" in fp
    assert diagram_fingerprint(g) == fp


def test_edge_list_text(sym4):
    txt = edge_list_text(diagram(sym4))
    head, *rest = txt.splitlines()
    assert head == "6 12"
    assert len(rest) == 12
    for line in rest:
        i, j = map(int, line.split())
        assert 0 <= i < j < 6


def test_missing_third_point_raises(sym4):
    import dataclasses
    n = len(sym4)
    pair = next((i, j) for i in range(n) for j in range(i + 1, n)
                if sym4.adjacent(i, j))
    broken = dict(sym4.third)
    del broken[pair]
    bad = dataclasses.replace(sym4, third=broken)
    with pytest.raises(InconsistentLine):
        lines(bad)
