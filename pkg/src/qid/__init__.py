"""qid: an exact computer-algebra kernel for q-series with a verification
engine that mechanically checks a catalog of q-identities by truncated
power-series and symbolic-polynomial comparison.
"""

__version__ = "0.1.0"

from .polyring import (
    ExactRational, MultiPoly, Symbol, SYMBOLS, SYMBOL_BY_NAME,
    divide_exact_linear, render, symbol,
)
from .qkernel import (
    CauchyExpansion, cauchy_poly, expand_in_cauchy_basis, gaussian_binomial,
    generalized_cauchy_poly, hahn_poly, q_pochhammer,
)
from .qoperators import (
    apply_E_frak, apply_E_tilde, apply_L_tilde, apply_R, d_q, theta_single,
    theta_xy,
)
from .tseries import (
    SeriesContext, TruncatedSeries, euler_inv_pochhammer, euler_pochhammer,
    finite_pochhammer_series, map_coefficients, phi_rs, scale_series_var,
)
from .verifier import (
    CoeffSequence, IdentitySpec, VerificationReport, generate_and_check,
    lookup, registry, transform_check, verify,
)
from .expr import parse_expr

__all__ = [
    "ExactRational", "MultiPoly", "Symbol", "SYMBOLS", "SYMBOL_BY_NAME",
    "divide_exact_linear", "render", "symbol",
    "CauchyExpansion", "cauchy_poly", "expand_in_cauchy_basis",
    "gaussian_binomial", "generalized_cauchy_poly", "hahn_poly",
    "q_pochhammer",
    "apply_E_frak", "apply_E_tilde", "apply_L_tilde", "apply_R", "d_q",
    "theta_single", "theta_xy",
    "SeriesContext", "TruncatedSeries", "euler_inv_pochhammer",
    "euler_pochhammer", "finite_pochhammer_series", "map_coefficients",
    "phi_rs", "scale_series_var",
    "CoeffSequence", "IdentitySpec", "VerificationReport",
    "generate_and_check", "lookup", "registry", "transform_check", "verify",
    "parse_expr",
]
