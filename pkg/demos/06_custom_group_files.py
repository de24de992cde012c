"""Run the pipeline on a user-supplied group instead of a built-in family.

A group file lists generators and one seed involution; the class is the
conjugacy closure of the seed. Permutation cycles are 1-based in files.
The same file works on the command line: axial jordan --file sym5.grp
"""

import tempfile
from fractions import Fraction
from pathlib import Path

from axial.constructions import close_family, family_params
from axial.groups import verify_3transpositions
from axial.jordan import jordan_check
from axial.matsuo import build_matsuo, radical

SYM5 = """\
# symmetric group on five letters, class of transpositions
perm 5
gen (1,2)
gen (1,2,3,4,5)
seed (1,2)
"""


def main():
    with tempfile.TemporaryDirectory() as tmp:
        path = Path(tmp) / "sym5.grp"
        path.write_text(SYM5)
        cls = close_family(family_params("file", path=str(path)))
        print(f"loaded class of {len(cls)} involutions from {path.name}")
        print(f"pair orders bounded by 3: {verify_3transpositions(cls)}")
        M = build_matsuo(cls, Fraction(1, 2))
        print(f"algebra dimension {M.algebra.dim}, "
              f"radical dimension {len(radical(M))}")
        verdict = jordan_check(M.algebra)
        print(f"jordan: {verdict.is_jordan}")
        assert len(cls) == 10 and verdict.is_jordan


if __name__ == "__main__":
    main()
