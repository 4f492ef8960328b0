"""Pade approximants of Markov-type functions via P-fractions and
generalized Jacobi matrices: exact rational pipeline from moments to
diagonal, subdiagonal, definitizable and modified approximants, with
gap-geometry forecasts for spurious poles."""

from .errors import PadeJacobiError
from .scalars import (DEFAULT_PRECISION_BITS, get_precision, precision,
                      set_precision)
from .series import FormalSeries
from .poly import Poly
from .hankel import (MomentSequence, NormalIndexSet, hankel_det,
                     negative_inertia, normal_indices, stabilized_inertia)
from .measures import (ARCSINE, LEBESGUE, TABLE, FunctionSpec, MeasureSpec,
                       RationalPerturbation, assemble_series, eval_exact,
                       measure_moments, moments)
from .scalars import to_mpf
from .pfraction import (GJM, PFraction, PFractionStep, build_gjm, companion,
                        expand_pfraction, gram, schur_step)
from .recurrence import (PolySequencePair, christoffel, m_function,
                         poly_pair, tau, tau_sequence, zero_distance)
from .pade import (RationalApproximant, condition_b_report,
                   definitizable_diagonal, diagonal, modified_diagonal,
                   pade_oracle, pole_report, subdiagonal, verify_contact)
from .defclass import (DSeries, admissible_indices, classify,
                       d_inverse_schur, d_pfraction, d_schur_transform,
                       shift_moments, unshift)
from .gapgeometry import (GapSpec, classify_rational, elliptic_E,
                          elliptic_K, harmonic_measure, jacobi_sn,
                          pole_forecast)
from .scenarios import SCENARIOS, RunReport, run_scenario

__version__ = "0.1.0"

__all__ = [
    "PadeJacobiError", "DEFAULT_PRECISION_BITS", "get_precision",
    "precision", "set_precision", "to_mpf", "FormalSeries", "Poly",
    "ARCSINE", "LEBESGUE", "TABLE",
    "MomentSequence", "NormalIndexSet", "hankel_det", "negative_inertia",
    "normal_indices", "stabilized_inertia", "FunctionSpec", "MeasureSpec",
    "RationalPerturbation", "assemble_series", "eval_exact",
    "measure_moments", "moments", "GJM", "PFraction", "PFractionStep",
    "build_gjm", "companion", "expand_pfraction", "gram", "schur_step",
    "PolySequencePair", "christoffel", "m_function", "poly_pair", "tau",
    "tau_sequence", "zero_distance", "RationalApproximant",
    "condition_b_report", "definitizable_diagonal", "diagonal",
    "modified_diagonal", "pade_oracle", "pole_report", "subdiagonal",
    "verify_contact", "DSeries", "admissible_indices", "classify",
    "d_inverse_schur", "d_pfraction", "d_schur_transform",
    "shift_moments", "unshift", "GapSpec", "classify_rational",
    "elliptic_E", "elliptic_K", "harmonic_measure", "jacobi_sn",
    "pole_forecast", "SCENARIOS", "RunReport", "run_scenario",
]
