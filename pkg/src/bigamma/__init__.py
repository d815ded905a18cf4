"""Two-variable gamma function Gamma(x, z) = 1 / ((z+x-1) e^{z gamma(x)} G(x, z)).

Evaluation by four independent routes, the supporting special functions,
Taylor series in each variable and a verification harness for the
identities the function satisfies.
"""
from ._backend import BACKEND
from .core import (
    EULER_GAMMA,
    digamma,
    euler_gamma_x,
    gamma_classical,
    hurwitz_zeta,
    pochhammer,
    riemann_zeta,
    stieltjes_zeroth,
)
from .gamma2 import (
    METHODS,
    NORM_BASE,
    DomainClassification,
    I_integral,
    StirlingParts,
    classify,
    gamma_euler_limit,
    gamma_euler_product,
    gamma_stirling,
    gamma_stirling_log,
    gamma_weierstrass,
    gamma_xz,
    gaussian_norm,
    gaussian_norm_closed_form,
    gaussian_norm_report,
    half_integer_value,
    residue_at,
    stirling_asymptotic,
)
from .policy import (
    DomainError,
    EvalOverflowError,
    EvalResult,
    PoleError,
    TruncationPolicy,
    default_policy,
)
from .product import (
    G,
    ProductTail,
    g_shift_x_residual,
    g_shift_z_residual,
    g_sin_residual,
    sin2_product,
    sin2_product_residual,
)
from .series import (
    SeriesExpansion,
    c_coefficient,
    coeffs_a,
    coeffs_b,
    log_series_in_x,
    log_series_in_z,
)
from .verify import (
    IdentityDescriptor,
    IdentityReport,
    gauss2_check,
    mult_const_check,
    registry,
    run_all,
    verify_identity,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
