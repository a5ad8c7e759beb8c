"""Exact prime counts, reciprocal-prime sums and the logarithmic RG flow
of the prime density."""

__version__ = "0.1.0"

from .errors import (BlowUpError, ConfigError, IntegerOverflowError, LimitExceededError,
                     PrimeflowError, RadiusError, RangeTooLargeError, SingularityError,
                     VerificationError)
from .sieve import SieveSegment, is_prime, iter_prime_blocks, primes_up_to, sieve_range
from .prime_count import PrimePi, pi_fast, pi_sieve, prime_pi
from .mertens import MertensSample, fbar, mertens_residual_curve, reciprocal_prime_sum
from .density import (DensitySample, ModelComparison, WindowDensity, compare_models,
                      density_at, li, window_density)
from .rgflow import (FlowState, NearPoleWarning, QuadraticVectorField, ScaleCheckRecord,
                     flow_closed_form, flow_numeric, flow_series, group_law_residual,
                     predict_density, scale_invariance_check, scale_relation_check)
from .report import emit_report, expand_grid
