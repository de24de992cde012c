"""End-to-end certificate for the exceptional 27-dimensional algebra.

Four concrete idempotent Hermitian matrices over the rational octonions
generate the whole algebra: 23 iterated Jordan products extend them to a
27-element spanning set whose coordinate determinant is the exact rational
1/(2^78 * 3^36) up to sign. The structure constants over that basis pass
the full linearized Jordan sweep, the four generators are primitive axes at
eta = 1/2 with eigenspace dimensions (1, 10, 16), and octonion norms stay
multiplicative. Runs in well under two minutes.
"""

import time
from fractions import Fraction

from axial.albert import BASIS_NAMES, verify_albert_axial
from axial.octonion import unit


def main():
    print("sample octonion products:",
          f"i0*i1 = {'i3' if unit(0) * unit(1) == unit(3) else '?'},",
          f"i2*i5 = {'-i3' if unit(2) * unit(5) == -unit(3) else '?'}")
    t0 = time.perf_counter()
    rep = verify_albert_axial()
    dt = time.perf_counter() - t0
    print(f"octonion table consistent with the triple rule: "
          f"{rep.table_consistent}")
    print(f"basis elements: {len(BASIS_NAMES)} "
          f"({', '.join(BASIS_NAMES[:6])}, ...)")
    num, den = rep.determinant.numerator, rep.determinant.denominator
    print(f"coordinate matrix rank {rep.rank}, |det| = {abs(num)}/{den}")
    print(f"|det| equals 1/(2^78 * 3^36): {rep.determinant_ok}")
    print(f"linearized Jordan identity over the generated basis: "
          f"{rep.jordan.is_jordan}")
    print(f"primitive axes at eta = 1/2: {sum(rep.axes_primitive)} of 4")
    print(f"eigenspace dimensions per axis: {rep.peirce_dims[0]}")
    print(f"norm composition on {rep.composition_pairs} pairs: "
          f"{rep.composition_ok}")
    print(f"certificate passed: {rep.passed} ({dt:.1f}s)")
    assert rep.passed
    assert abs(rep.determinant) == Fraction(1, 2**78 * 3**36)


if __name__ == "__main__":
    main()
