"""Exact-arithmetic toolkit for matrix semi-invariants.

Evaluates the generating invariants of tuples of 2x2 matrices under the
two-sided determinant-one action and of l x n matrices under the left
action, decides orbit separation with reproducible witnesses, tests
stability and nullcone membership, decides graph-closure membership
through stacked-rank criteria and explicit witness curves, and certifies
the dimensions of the separating-variety components by exact Jacobian
ranks of rational parameterizations.  Everything runs over the rationals
with no floating point and no tolerances.
"""

from .binform import BinaryForm, binary_form_gcd, rational_projective_roots
from .certify import (ClaimRow, DimensionCertificate, Parameterization,
                      builtin_claims, builtin_parameterization, certify_builtin,
                      certify_dimension, jacobian, sl2_chart,
                      verify_bracket_identity, verify_xi_identity)
from .dual import DualScalar, jacobian_of
from .errors import (CertificationError, ChartSingularityError, InputError,
                     PreconditionError, ShapeError)
from .geometry_left import (CurveWitness, echelon_sl, graph_member_l23,
                            graph_necessary, is_stable_left,
                            nullcone_member_left, reduced_form_single, stack,
                            witness_curve_auto, witness_curve_left)
from .geometry_lr import (PhiImage, StabilityReport, UpperPair, classify_pair,
                          classify_pair_any, common_directions, graph_member_upper,
                          in_cc, in_cr, in_dc, in_dr, is_stable_lr, m_c, m_matrix,
                          m_r, nullcone_member_lr, phi, phi_inverse)
from .invariants import (GeneratorVector, LeftMatrix, MatrixTupleLR, bracket,
                         det_inv, generator_count_lr, generators_lr,
                         invariant_dim_left, invariant_dim_lr, lower_bound_left,
                         lower_bound_lr, minor_column_sets, minors_left, xi)
from .laurent import LaurentMatrix, LaurentPoly
from .matrix import RMatrix, stack_rows
from .rational import Rational, format_rational, parse_rational, rat
from .separation import (GroupElementL, GroupElementLR, SeparationReport,
                         act_left, act_lr, separated_left, separated_lr, star)
from .sparsepoly import SparsePoly, poly_expand_det

__version__ = "0.1.0"
