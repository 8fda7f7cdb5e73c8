"""Identity verification harness."""

from .identities import (LIMITS, cor2_sum, cor3_numerator, test_conjecture8, thm1_sum, thm5_sum,
                         umbral_numerator, vandermonde, verify_cor2, verify_cor3, verify_cor3_closed,
                         verify_cor6, verify_limits, verify_thm1, verify_thm5)
from .report import (CONJ_FAIL, CONJ_PASS, MISMATCH, VERIFIED, ConsistencyError, VerificationReport,
                     bind_weights, random_point, random_weights)

__all__ = [
    "LIMITS", "cor2_sum", "cor3_numerator", "test_conjecture8", "thm1_sum", "thm5_sum",
    "umbral_numerator", "vandermonde", "verify_cor2", "verify_cor3", "verify_cor3_closed",
    "verify_cor6", "verify_limits", "verify_thm1", "verify_thm5",
    "CONJ_FAIL", "CONJ_PASS", "MISMATCH", "VERIFIED", "ConsistencyError", "VerificationReport",
    "bind_weights", "random_point", "random_weights",
]
from .named import NAMED_IDS, REGISTRY, named_suite, run_named  # noqa: E402
from .recurrence import (Recurrence, detect_recurrence, scaled_determinants,  # noqa: E402
                         verify_cor4, verify_cor7, verify_recurrence)

__all__ += ["NAMED_IDS", "REGISTRY", "named_suite", "run_named", "Recurrence", "detect_recurrence",
            "scaled_determinants", "verify_cor4", "verify_cor7", "verify_recurrence"]
