"""Exact arithmetic for the Drinfeld-twist quantization of W(2,2).

All coefficients are exact rationals, exposed as :class:`fractions.Fraction`.
The heavy lifting happens in the C++ extension module ``w22._core``.
"""

from ._core import (
    AlgebraElement,
    AlgebraSeries,
    ExprEvalError,
    ExprParseError,
    L,
    Tensor2Element,
    Tensor2Series,
    Tensor3Element,
    Tensor3Series,
    TwistConfig,
    TwistElements,
    VerificationReport,
    W,
    all_passed,
    bracket,
    build_twist,
    canonical,
    closed_form_antipode,
    closed_form_delta,
    compute,
    compute_json,
    delta0,
    eps,
    hbar,
    hbar_falling,
    hbar_rising,
    latex,
    mu,
    mu_series,
    one_minus_xt_power,
    run_all,
    s0,
    scalar,
    suite_closed_forms_l_twist,
    suite_closed_forms_w_twist,
    suite_cocycle,
    suite_commutation_rules,
    suite_coproduct_factorials,
    suite_exchange_l_twist,
    suite_exchange_w_twist,
    suite_factorial_calculus,
    suite_lie_laws,
    suite_twist_pairings,
    tensor2,
    tensor3,
    twisted_antipode,
    twisted_delta,
)
from ._core import __version__

__all__ = [
    "AlgebraElement",
    "AlgebraSeries",
    "ExprEvalError",
    "ExprParseError",
    "L",
    "Tensor2Element",
    "Tensor2Series",
    "Tensor3Element",
    "Tensor3Series",
    "TwistConfig",
    "TwistElements",
    "VerificationReport",
    "W",
    "all_passed",
    "bracket",
    "build_twist",
    "canonical",
    "closed_form_antipode",
    "closed_form_delta",
    "compute",
    "compute_json",
    "delta0",
    "eps",
    "hbar",
    "hbar_falling",
    "hbar_rising",
    "latex",
    "mu",
    "mu_series",
    "one_minus_xt_power",
    "run_all",
    "s0",
    "scalar",
    "suite_closed_forms_l_twist",
    "suite_closed_forms_w_twist",
    "suite_cocycle",
    "suite_commutation_rules",
    "suite_coproduct_factorials",
    "suite_exchange_l_twist",
    "suite_exchange_w_twist",
    "suite_factorial_calculus",
    "suite_lie_laws",
    "suite_twist_pairings",
    "tensor2",
    "tensor3",
    "twisted_antipode",
    "twisted_delta",
    "__version__",
]
