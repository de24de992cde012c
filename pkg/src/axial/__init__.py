"""Exact arithmetic for transposition classes and their axial algebras.

The pipeline: build a class of involutions closed under conjugation
(constructions), view it as a point-line geometry and compare the diagram
spectrum with the classification's closed forms (fischer), form the
commutative algebra with its Frobenius form, radical and quotient
(matsuo), decide the Jordan question exactly (jordan), and certify the
27-dimensional exceptional example over the rational octonions
(octonion, albert). Everything runs over Fraction; nothing is floated.
"""

from .errors import (AxialError, BadBaseGroup, BadEta, BadParams,
                     CapExceeded, EmptyPerp, InconsistentLine, MissingLabels,
                     NonScalarNorm, NotAnIdeal, NotHermitianResult,
                     NotIdempotent, NotInvolution, NotSemisimple,
                     NotThreeTransposition, OracleMismatch, ParseError,
                     ReferenceMismatch, WrongEta)
from .exact import (RatMatrix, Rational, det, eigen_multiplicity_range,
                    integer_eigen_multiplicity, inverse, nullspace_basis,
                    rank, rref)
from .groups import (GroupSpec, TranspositionClass, conjugacy_closure,
                     perp_subclass, verify_3transpositions)
from .constructions import (FAMILIES, FamilyParams, build_frob9,
                            build_omega3, build_orthogonal2, build_sp,
                            build_su, build_sym, build_wr2, build_wr3,
                            close_family, expected_class_size, family_params,
                            load_group_file)
from .fischer import (Diagram, SpectrumReport, Table1Row, diagram,
                      diagram_fingerprint, expected_spectrum, is_connected,
                      lines, spectra_match, spectrum)
from .matsuo import (Algebra, MatsuoAlgebra, QuotientAlgebra, algebra_json,
                     build_matsuo, check_equivariance, check_frobenius,
                     check_gram_identity, quotient, radical,
                     radical_dim_via_spectrum, wr_radical_basis)
from .jordan import (EtaAnalysis, JordanVerdict, PeirceReport,
                     eta_not_half_analysis, is_primitive_axis, jordan_check,
                     jordan_modulo_radical, peirce, w_basis, w_element)
from .octonion import (Octonion, oct, oct_conj, oct_mul, oct_norm,
                       quaternion_triples_consistent, unit)
from .albert import (AlbertElement, AlbertReport, albert_algebra,
                     albert_jordan_mul, basis_certificate, coords27,
                     from_coords27, generated_basis_27, products_from_axes,
                     standard_axes, trace, verify_albert_axial)

__version__ = "0.1.0"
