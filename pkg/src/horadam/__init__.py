"""Exact arithmetic for second-order linear recurrences R[n+1] = f R[n] + g R[n-1]."""
from .catalog import CATALOG, corollary_check, get_sequence
from .closed_forms import (CaseTag, classify, diag_check, m_matrix, r_binet, r_degenerate,
                           r_geometric, r_squared_det)
from .engine import Mat2, OpStats, RecurrenceSpec, build_abcd, lemma21_residual, mat_pow, r_fast, r_iter
from .errors import (DegenerateDiscriminantError, DegenerateSpecError, IdentityViolation,
                     IncompatibleExtensionError, NotInvertibleError, RecurrenceError,
                     UnknownSequenceError, WrongCaseError, ZeroDenominatorError)
from .identities import (addition_residual, cassini_residual, r_add_compose, s_term,
                         solve_sums, sum_identities_residual)
from .ring import Poly, QuadExt, invert, normalize_rational, ring_power

__version__ = "0.1.0"
