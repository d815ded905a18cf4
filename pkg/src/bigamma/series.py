"""Power series of log Gamma(x, z) and Gamma(x, z) in each variable.

In z about z = 1 (x fixed), with coefficients built from gamma(x) and
zeta(m, x); in x about x = 1 (z fixed), with coefficients built from
d_m(z) = zeta(m, z) - zeta(m) - z^-m + 1 = zeta(m, z+1) - zeta(m, 2).

The coefficient recursions come from matching the derivative of the series
against (series) x (log-derivative series). ``variant='literal'`` switches
to an alternative reading of each recursion, kept for adjudication.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Tuple

from ._backend import kernels
from .core import EULER_GAMMA, digamma, euler_gamma_x, gamma_classical, hurwitz_zeta
from .policy import DomainError, resolve

DEFAULT_ORDER = 32


@dataclass(frozen=True)
class SeriesExpansion:
    center_variable: str          # "z_at_1" or "x_at_1"
    anchor: complex
    coefficients: Tuple[complex, ...]
    radius_hint: float
    variant: str = "derived"

    def __call__(self, t):
        """Sum of c_m t^m; t is z (z_at_1) or x - 1 (x_at_1)."""
        acc = 0j
        for c in reversed(self.coefficients):
            acc = acc * t + c
        return acc


def _require_positive_real_part(v, name):
    if not complex(v).real > 0:
        raise DomainError(f"{name} needs positive real part, got {v}")


# --- expansions in z -------------------------------------------------------

def log_series_in_z(x, z, M: int, policy=None) -> complex:
    """log Gamma(x, z+1) = -z gamma(x) - sum_{m=2}^{M} (-1)^(m-1)/m zeta(m, x) z^m."""
    if int(M) != M or M < 1:
        raise ValueError(f"M must be a positive integer, got {M!r}")
    _require_positive_real_part(x, "x")
    x = complex(x)
    z = complex(z)
    r = min(1.0, abs(x))
    if not abs(z) < r:
        raise DomainError(f"need |z| < min(1, |x|) = {r}, got |z| = {abs(z)}")
    total = -z * euler_gamma_x(x, policy).value
    zm = z
    for m in range(2, int(M) + 1):
        zm *= z
        total -= (-1) ** (m - 1) / m * hurwitz_zeta(m, x) * zm
    return total


A_VARIANTS = ("derived", "literal")


def coeffs_a(x, M: int, variant="derived", policy=None) -> SeriesExpansion:
    """Coefficients a_m(x) of Gamma(x, z+1) = sum a_m z^m, m = 0..M.

    derived:  m a_m = -gamma(x) a_{m-1} + sum_{k<=m-2} (-1)^(m-k) zeta(m-k, x) a_k
    literal:  the same with (-1)^m in place of (-1)^(m-k)
    """
    if variant not in A_VARIANTS:
        raise ValueError(f"variant must be one of {A_VARIANTS}")
    if int(M) != M or M < 0:
        raise ValueError(f"M must be a nonnegative integer, got {M!r}")
    _require_positive_real_part(x, "x")
    x = complex(x)
    g = euler_gamma_x(x, policy).value
    zetas = {j: hurwitz_zeta(j, x) for j in range(2, int(M) + 1)}
    a = [1.0 + 0j]
    for m in range(1, int(M) + 1):
        acc = -g * a[m - 1]
        for k in range(m - 1):
            sign = (-1) ** (m - k) if variant == "derived" else (-1) ** m
            acc += sign * zetas[m - k] * a[k]
        a.append(acc / m)
    return SeriesExpansion("z_at_1", x, tuple(a), min(1.0, abs(x)), variant)


# --- expansions in x -------------------------------------------------------

def log_gamma1p(z, policy=None) -> complex:
    """sum_{n>=1} (z log((n+1)/n) - log((n+z)/n)) = log Gamma(1+z).

    Partial sum to N plus the tail sum_{k>=2} (-1)^(k+1) (z - z^k)/k zeta(k, N+1).
    """
    policy = resolve(policy)
    z = complex(z)
    n = max(policy.max_terms, int(4 * abs(z)) + 16)
    s, _ = kernels.euler_product_log_sum(0.0, z, n)
    tail = 0j
    zk = z
    for k in range(2, max(policy.tail_order, 1) + 2):
        zk *= z
        tail += (-1) ** (k + 1) * (z - zk) / k * hurwitz_zeta(k, n + 1.0)
    return s + tail


def c_coefficient(z, method="closed", policy=None) -> complex:
    """c(z) = sum_{n>=2} z / (n (n+z)).

    ``closed`` uses psi(z+1) + gamma - 1 + 1/(1+z); ``sum`` adds the terms
    directly with a zeta tail, as an independent check.
    """
    z = complex(z)
    if method == "closed":
        return digamma(z + 1) + EULER_GAMMA - 1.0 + 1.0 / (1.0 + z)
    if method != "sum":
        raise ValueError("method must be 'closed' or 'sum'")
    policy = resolve(policy)
    n = max(policy.max_terms, int(4 * abs(z)) + 16)
    h1, _ = kernels.harmonic_sum(2.0, n - 2)       # sum_{k=2}^{n} 1/k
    h2, _ = kernels.harmonic_sum(z + 2.0, n - 2)   # sum_{k=2}^{n} 1/(k+z)
    # sum_{k>n} (1/k - 1/(k+z)) = -sum_{j>=1} (-z)^j zeta(j+1, n+1)
    tail = 0j
    for j in range(1, max(policy.tail_order, 1) + 1):
        tail -= (-z) ** j * hurwitz_zeta(j + 1, n + 1.0)
    return h1 - h2 + tail


def d_coefficient(m: int, z) -> complex:
    """zeta(m, z) - zeta(m) - z^-m + 1, computed without the cancellation."""
    return hurwitz_zeta(m, complex(z) + 1.0) - hurwitz_zeta(m, 2.0)


def linear_x_coefficient(z, variant="derived") -> complex:
    """Coefficient of (x-1) in log Gamma(x+1, z).

    derived: c(z) - 1/(z+1) = psi(z+1) + gamma - 1.
    literal/proof: c(z) alone, without the -1/(z+1).
    """
    z = complex(z)
    if variant == "derived":
        return digamma(z + 1) + EULER_GAMMA - 1.0
    return c_coefficient(z)


def log_series_in_x(x, z, M: int, variant="derived", policy=None) -> complex:
    """log Gamma(x+1, z) expanded in powers of (x - 1) through order M."""
    if int(M) != M or M < 1:
        raise ValueError(f"M must be a positive integer, got {M!r}")
    if variant not in A_VARIANTS:
        raise ValueError(f"variant must be one of {A_VARIANTS}")
    _require_positive_real_part(z, "z")
    x = complex(x)
    z = complex(z)
    r = min(1.0, abs(z + 1))
    h = x - 1
    if not abs(h) < r:
        raise DomainError(f"need |x-1| < min(1, |z+1|) = {r}, got {abs(h)}")
    total = log_gamma1p(z, policy) + linear_x_coefficient(z, variant) * h
    hm = h
    for m in range(2, int(M) + 1):
        hm *= h
        total += (-1) ** m / m * d_coefficient(m, z) * hm
    return total


B_VARIANTS = ("derived", "proof", "literal")


def coeffs_b(z, M: int, variant="derived", policy=None) -> SeriesExpansion:
    """Coefficients b_m(z) of Gamma(x+1, z) = sum b_m (x-1)^m, m = 0..M.

    With L_0 the linear log-coefficient and L_j = (-1)^(j+1) d_{j+1}(z):
      derived: m b_m = sum_{k<m} b_k L_{m-1-k}, L_0 = psi(z+1) + gamma - 1
      proof:   the same recursion with L_0 = c(z)
      literal: b_m = b_{m-1}/m + c(z) + (1/m) sum_{k<=m-2} (-1)^(m-k) b_k d_{m-k}
    """
    if variant not in B_VARIANTS:
        raise ValueError(f"variant must be one of {B_VARIANTS}")
    if int(M) != M or M < 0:
        raise ValueError(f"M must be a nonnegative integer, got {M!r}")
    _require_positive_real_part(z, "z")
    z = complex(z)
    d = {j: d_coefficient(j, z) for j in range(2, int(M) + 1)}
    c = c_coefficient(z)
    L0 = linear_x_coefficient(z, "derived") if variant == "derived" else c
    b = [z * gamma_classical(z.real if z.imag == 0 else z)]
    for m in range(1, int(M) + 1):
        if variant == "literal":
            acc = b[m - 1] / m + c
            for k in range(m - 1):
                acc += (-1) ** (m - k) * b[k] * d[m - k] / m
            b.append(acc)
            continue
        acc = b[m - 1] * L0
        for k in range(m - 1):
            acc += (-1) ** (m - k) * d[m - k] * b[k]
        b.append(acc / m)
    return SeriesExpansion("x_at_1", z, tuple(b), min(1.0, abs(z + 1)), variant)


def log_derivative_coefficients(expansion: SeriesExpansion, policy=None):
    """Coefficients L_j of d/dt log(series) implied by the expansion's anchor."""
    M = len(expansion.coefficients) - 1
    anchor = expansion.anchor
    if expansion.center_variable == "z_at_1":
        L = [-euler_gamma_x(anchor, policy).value]
        L += [(-1) ** (j + 1) * hurwitz_zeta(j + 1, anchor) for j in range(1, M)]
    else:
        L = [linear_x_coefficient(anchor, "derived")]
        L += [(-1) ** (j + 1) * d_coefficient(j + 1, anchor) for j in range(1, M)]
    return L


def cauchy_residuals(expansion: SeriesExpansion, policy=None):
    """|m c_m - sum_k c_k L_{m-1-k}| for m = 1..M (formal series identity)."""
    L = log_derivative_coefficients(expansion, policy)
    c = expansion.coefficients
    out = []
    for m in range(1, len(c)):
        rhs = sum(c[k] * L[m - 1 - k] for k in range(m))
        out.append(abs(m * c[m] - rhs))
    return out


def series_error_bound(z, x, M):
    """Geometric tail bound 2 (|z|/r)^(M+1) / (1 - |z|/r), r = min(1, |x|)."""
    q = abs(z) / min(1.0, abs(x))
    if q >= 1:
        return math.inf
    return 2.0 * q ** (M + 1) / (1.0 - q)


def _fd_target(which, anchor, policy):
    """(f, rho): the function whose Taylor coefficients at 0 are a_m or b_m,
    and the distance from 0 to its nearest singularity."""
    from .gamma2 import gamma_xz

    anchor = complex(anchor)
    if which == "a":
        return (lambda t: gamma_xz(anchor, 1 + t, policy).value), abs(anchor)
    if which == "b":
        return (lambda t: gamma_xz(2 + t, anchor, policy).value), abs(anchor + 1)
    raise ValueError("which must be 'a' or 'b'")


def fd_coefficients(which: str, anchor, M: int = 6, policy=None, levels=4):
    """Taylor coefficients m = 0..M from step-halved central differences.

    The base step for order m is min(0.5, 0.8 rho / m) so the widest stencil
    stays inside the disc of analyticity. Returns (coefficients, errors).
    """
    from .extrapolation import taylor_coefficient

    policy = resolve(policy)
    f, rho = _fd_target(which, anchor, policy)
    coefs, errs = [], []
    for m in range(int(M) + 1):
        h = min(0.5, 0.8 * rho / max(m, 1))
        c, e = taylor_coefficient(f, 0.0, m, h=h, levels=levels)
        coefs.append(complex(c))
        errs.append(e)
    return coefs, errs


def adjudicate(which: str, anchor, M: int = 6, policy=None):
    """Compare each recursion variant with finite-difference coefficients.

    Returns one row per m with the coefficient of every variant, the
    finite-difference reference and each variant's deviation from it.
    """
    policy = resolve(policy)
    if which == "a":
        variants = A_VARIANTS
        exps = {v: coeffs_a(anchor, M, v, policy) for v in variants}
    elif which == "b":
        variants = B_VARIANTS
        exps = {v: coeffs_b(anchor, M, v, policy) for v in variants}
    else:
        raise ValueError("which must be 'a' or 'b'")
    ref, ref_err = fd_coefficients(which, anchor, M, policy)
    rows = []
    for m in range(int(M) + 1):
        row = {"m": m, "finite_difference": ref[m], "fd_error": ref_err[m]}
        for v in variants:
            cm = exps[v].coefficients[m]
            row[v] = cm
            row[f"{v}_deviation"] = abs(cm - ref[m])
        rows.append(row)
    return rows
