"""What happens to Jordan quotients when eta moves away from 1/2.

Away from the symmetric value the radical machinery changes character. A
single point always gives the one-dimensional algebra (case i). At eta = 2
on a complete diagram the pairwise differences of generators span a
codimension-1 ideal inside the form's kernel, so a 1-dimensional Jordan
quotient survives (case ii). Every other choice admits no Jordan factor.
"""

from fractions import Fraction

from axial.constructions import close_family, family_params
from axial.jordan import eta_not_half_analysis
from axial.matsuo import build_matsuo


def main():
    single = close_family(family_params("sym", m=2))
    rep = eta_not_half_analysis(build_matsuo(single, Fraction(5)))
    print(f"sym m=2, eta=5: case {rep.case}, quotient dim {rep.quotient_dim}")
    assert rep.case == "i"

    for family, kwargs in (("sym", dict(m=3)), ("frob9", {})):
        cls = close_family(family_params(family, **kwargs))
        rep = eta_not_half_analysis(build_matsuo(cls, Fraction(2)))
        label = " ".join([family] + [f"{k}={v}" for k, v in kwargs.items()])
        print(f"{label}, eta=2: case {rep.case}, "
              f"quotient dim {rep.quotient_dim}")
        assert rep.case == "ii" and rep.quotient_dim == 1

    sym4 = close_family(family_params("sym", m=4))
    for eta in (Fraction(3), Fraction(-1), Fraction(1, 3), Fraction(2)):
        rep = eta_not_half_analysis(build_matsuo(sym4, eta))
        print(f"sym m=4, eta={eta}: case {rep.case} ({rep.detail})")
        assert rep.case == "no_jordan_factor"


if __name__ == "__main__":
    main()
