"""Interleaved binary sequences with optimal autocorrelation magnitude.

Constructs the period-4p interleaving of Ding-Helleseth-Lam sequences from
quartic cyclotomy, computes exact autocorrelation spectra and 2-adic/linear
complexity, and machine-checks every supporting identity down to the integer
witnesses. See the verify module for the check harness and the gcd survey.
"""

from .analysis import (
    AutocorrSpectrum,
    TwoAdicReport,
    autocorrelation,
    berlekamp_massey,
    closed_form_spectrum,
    hu_identity_check,
    linear_complexity,
    two_adic_complexity,
)
from .bigmod import MersenneResidue, eval_S, eval_T_inv, gcd_with_modulus
from .numtheory import (
    CyclotomicClasses,
    QuarticParams,
    all_primitive_roots,
    cyclotomic_classes,
    eligible_primes,
    is_eligible_prime,
    is_prime,
    legendre_symbol,
    quartic_decomposition,
    smallest_primitive_root,
)
from .sequences import (
    ADMISSIBLE_W,
    BinarySequence,
    ConstructionParams,
    add_constant,
    construction_params,
    deinterleave,
    dhl_sequence,
    generalized_interleaved,
    interleave,
    left_shift,
    parse_sequence_literal,
    sequence_literal,
    su_sequence,
)
from .verify import (
    CheckReport,
    SurveyRow,
    check_autocorrelation_spectrum,
    check_complexity_bounds,
    check_coprimality_facts,
    check_product_congruence,
    check_small_factor_gcds,
    run_all,
    survey_conjecture,
)

__version__ = "0.1.0"
