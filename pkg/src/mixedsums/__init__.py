"""Incomplete mixed character sums modulo a prime: evaluation, certified
maximisation and the constructive lower-bound pipeline."""

from .charcore import (
    DirichletCharacter,
    ModulusError,
    PrimeModulus,
    RootOfUnity,
    build_modulus,
    char_eval,
    character_of_order,
    enumerate_characters,
    gauss_sum,
    legendre,
)
from .sums import (
    CoefficientVector,
    GridEvaluation,
    SumSpec,
    direct_sum,
    direct_sum_at,
    grid_evaluate,
    residual_profile,
    truncated_approx,
)
from .maxsearch import CertifiedMax, certified_max, lq_norm, mahler_measure, max_decomposed
from .weil import FactoredPoly, is_dth_power, poly_char_sum, weil_check, weil_exhaustive
from .prescribe import (
    PrescriptionError,
    PrescriptionSet,
    PrescriptionTarget,
    build_S,
    default_K0,
    membership,
    offdiag_diagnostic,
    select_k,
    sum_W_diagnostic,
    weight_W,
    weight_W_all,
)
from .lowerbound import LowerBoundWitness, choose_t, choose_xi, lower_bound_witness, sumcos, tilde_lower
from .randmodels import KINDS, random_poly_max, sample_rmf

__version__ = "0.1.0"
