"""Decide which quotients satisfy the linearized Jordan identity.

Zero-radical algebras are swept directly; the rest are tested modulo the
radical, where a defect only matters if it falls outside the form's kernel.
The alternating-group wreath case is the one honest negative at eta = 1/2,
and its counterexample quadruple is replayed explicitly.
"""

from fractions import Fraction

from axial.constructions import close_family, family_params
from axial.jordan import jordan_check, jordan_modulo_radical, w_basis
from axial.matsuo import build_matsuo, radical

HALF = Fraction(1, 2)


def main():
    print("zero-radical cases, direct sweep:")
    for family, kwargs in (("sym", dict(m=5)), ("frob9", {})):
        M = build_matsuo(close_family(family_params(family, **kwargs)), HALF)
        assert radical(M) == []
        verdict = jordan_check(M.algebra)
        label = " ".join([family] + [f"{k}={v}" for k, v in kwargs.items()])
        print(f"  {label:10s} jordan {verdict.is_jordan} "
              f"({verdict.quadruples_checked} quadruples)")
        assert verdict.is_jordan

    print("positive cases modulo the radical:")
    for family, kwargs, dim in (("wr2", dict(n=5), 15),
                                ("sp", dict(m=3), 28)):
        M = build_matsuo(close_family(family_params(family, **kwargs)), HALF)
        verdict = jordan_modulo_radical(M)
        label = " ".join([family] + [f"{k}={v}" for k, v in kwargs.items()])
        quo = M.algebra.dim - len(radical(M))
        print(f"  {label:10s} jordan {verdict.is_jordan} quotient dim {quo}")
        assert verdict.is_jordan and quo == dim

    print("the negative case:")
    M = build_matsuo(close_family(family_params("wralt4", n=4)), HALF)
    verdict = jordan_modulo_radical(M)
    print(f"  wralt4 n=4 jordan {verdict.is_jordan} "
          f"counterexample {verdict.counterexample}")
    assert not verdict.is_jordan
    x, y, z, w = verdict.counterexample
    defect = w_basis(M.algebra, x, y, z, w)
    outside = any(M.gram.mul_vec(defect))
    print(f"  defect of that quadruple lies outside the kernel: {outside}")
    assert outside


if __name__ == "__main__":
    main()
