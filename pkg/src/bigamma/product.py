"""The Weierstrass-type product G(x, z) = prod_{n>=0} (1 + z/(n+x)) exp(-z/(n+x)).

The product is accumulated in log space; after N explicit factors the tail
sum_{n>=N} (log(1+w_n) - w_n) is replaced by
sum_k (-1)^(k+1) z^k/k * zeta(k, x+N).
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from ._backend import kernels
from .core import euler_gamma_x, hurwitz_zeta
from .policy import (
    EPS,
    DomainError,
    EvalResult,
    check_overflow,
    is_nonpositive_integer,
    nearest_int,
    resolve,
)

_LOG_OVERFLOW = math.log(1e300)


@dataclass(frozen=True)
class ProductTail:
    terms_summed: int
    zeta2_correction: complex
    zeta3_correction: complex
    total: complex


@dataclass(frozen=True)
class LogProduct:
    value: complex        # log G, any branch
    abs_err: float
    terms: int
    tail: ProductTail


def _zero_index(x, z):
    """m >= 0 with z = -(x+m), if any."""
    m = nearest_int(-(complex(z) + complex(x)))
    if m is not None and m >= 0:
        return m
    return None


def log_G(x, z, policy=None) -> LogProduct:
    """log G(x, z) with an absolute error bound. Caller excludes zeros."""
    policy = resolve(policy)
    x = complex(x)
    z = complex(z)
    if is_nonpositive_integer(x):
        raise DomainError(f"G(x, z) undefined for x in Z_0^-: x={x}")
    n = max(policy.max_terms, int(4 * (abs(x) + abs(z))) + 16)
    s, mag = kernels.weierstrass_log_sum(x, z, n)
    order = policy.tail_order
    a = x + n
    corrections = []
    zk = z
    for k in range(2, order + 2):
        zk = zk * z
        corrections.append((-1) ** (k + 1) * zk / k * hurwitz_zeta(k, a))
    tail_total = sum(corrections, 0j)
    k_next = order + 2
    trunc = 2.0 * abs(z) ** k_next / k_next * abs(hurwitz_zeta(k_next, a))
    value = s + tail_total
    tail = ProductTail(
        terms_summed=n,
        zeta2_correction=corrections[0] if order >= 1 else 0j,
        zeta3_correction=corrections[1] if order >= 2 else 0j,
        total=tail_total,
    )
    return LogProduct(value, trunc + 4.0 * EPS * (mag + abs(value)), n, tail)


def G(x, z, policy=None) -> EvalResult:
    """Evaluate G(x, z); exactly 0 on the zero lattice z = -(x+m), m >= 0."""
    policy = resolve(policy)
    if is_nonpositive_integer(x):
        raise DomainError(f"G(x, z) undefined for x in Z_0^-: x={x}")
    if _zero_index(x, z) is not None:
        return EvalResult(0j, 0.0, "weierstrass-product", 0)
    lp = log_G(x, z, policy)
    if lp.value.real > _LOG_OVERFLOW:
        check_overflow(math.inf, "G")
    value = cmath.exp(lp.value)
    return EvalResult(value, lp.abs_err, "weierstrass-product", lp.terms,
                      extra={"tail": lp.tail})


def _rel(lhs, rhs, scale=None):
    if scale is None:
        scale = max(1.0, abs(lhs), abs(rhs))
    return abs(lhs - rhs) / scale


def g_shift_z_residual(x, z, policy=None) -> float:
    """|G(x,z-1) - (z+x-1) e^{gamma(x)} G(x,z)| / max(1, |G(x,z-1)|)."""
    x = complex(x)
    z = complex(z)
    lhs = G(x, z - 1, policy).value
    rhs = (z + x - 1) * cmath.exp(euler_gamma_x(x, policy).value) * G(x, z, policy).value
    return _rel(lhs, rhs, max(1.0, abs(lhs)))


def g_shift_x_residual(x, z, policy=None) -> float:
    """Residual of G(x-1,z) = ((z+x-1)/(x-1)) e^{-z/(x-1)} G(x,z)."""
    x = complex(x)
    z = complex(z)
    if is_nonpositive_integer(x - 1):
        raise DomainError(f"x-1 must avoid Z_0^-: x={x}")
    lhs = G(x - 1, z, policy).value
    rhs = (z + x - 1) / (x - 1) * cmath.exp(-z / (x - 1)) * G(x, z, policy).value
    return _rel(lhs, rhs, max(1.0, abs(lhs)))


SIN_VARIANTS = ("literal", "proof")


def g_sin_sides(x, z, policy=None, variant="proof"):
    """Both sides of G(x,-z) G(-x,z) = (z-x) sin pi(z-x) / (x sin pi x) * e^{E}.

    ``variant='literal'`` uses E = z cot(pi x) + z/x, the reading
    without the factor pi; ``variant='proof'`` uses E = pi z cot(pi x) + z/x, the
    exponent produced by the derivation.
    """
    if variant not in SIN_VARIANTS:
        raise ValueError(f"variant must be one of {SIN_VARIANTS}")
    x = complex(x)
    z = complex(z)
    if nearest_int(x) is not None:
        raise DomainError(f"x must not be an integer: x={x}")
    lhs = G(x, -z, policy).value * G(-x, z, policy).value
    cot = 1.0 / cmath.tan(math.pi * x)
    if variant == "proof":
        cot = math.pi * cot
    rhs = ((z - x) * cmath.sin(math.pi * (z - x)) / (x * cmath.sin(math.pi * x))
           * cmath.exp(z * cot + z / x))
    return lhs, rhs


def g_sin_residual(x, z, policy=None, variant="proof") -> float:
    lhs, rhs = g_sin_sides(x, z, policy, variant)
    return _rel(lhs, rhs)


def g_sin_adjudicate(x, z, policy=None) -> dict:
    """Residual of each exponent reading at one point."""
    return {v: g_sin_residual(x, z, policy, v) for v in SIN_VARIANTS}


def sin2_product(x, z, policy=None) -> EvalResult:
    """prod_{n>=1} (1 - z^2/(n+x)^2)(1 - z^2/(n-x)^2), truncated with zeta tail."""
    policy = resolve(policy)
    x = complex(x)
    z = complex(z)
    if nearest_int(x) is not None:
        raise DomainError(f"x must not be an integer: x={x}")
    n = max(policy.max_terms, int(4 * (abs(x) + abs(z))) + 16)
    s, mag = kernels.sin2_log_sum(x, z, n)
    z2 = z * z
    tail = 0j
    p = 1.0 + 0j
    order = max(policy.tail_order, 1)
    for j in range(1, order + 1):
        p *= z2
        tail -= p / j * (hurwitz_zeta(2 * j, n + 1 + x) + hurwitz_zeta(2 * j, n + 1 - x))
    j = order + 1
    trunc = 2.0 * abs(p * z2) / j * (abs(hurwitz_zeta(2 * j, n + 1 + x))
                                     + abs(hurwitz_zeta(2 * j, n + 1 - x)))
    value = cmath.exp(s + tail)
    err = trunc + 4.0 * EPS * (mag + abs(s + tail))
    return EvalResult(value, err, "sin2-product", n)


def sin2_closed_form(x, z):
    x = complex(x)
    z = complex(z)
    sx = cmath.sin(math.pi * x)
    return (x / sx) ** 2 * (cmath.sin(math.pi * z) ** 2 - sx**2) / (z * z - x * x)


def sin2_product_residual(x, z, policy=None) -> float:
    """Relative residual between the double product and its closed form."""
    x = complex(x)
    z = complex(z)
    if abs(z * z - x * x) <= 1e-12 * max(1.0, abs(x) ** 2):
        raise DomainError("closed form needs z^2 != x^2")
    lhs = sin2_product(x, z, policy).value
    rhs = sin2_closed_form(x, z)
    return _rel(lhs, rhs)
