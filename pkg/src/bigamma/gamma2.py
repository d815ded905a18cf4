"""The two-variable gamma function Gamma(x, z).

Gamma(x, z) = 1 / ((z+x-1) e^{z gamma(x)} G(x, z)) for x outside the
nonpositive integers and z off the pole lattice z = -(x+m), m >= -1.

Four evaluation routes are provided (Weierstrass definition, Euler limit,
Euler product, exact Stirling-type formula) plus a dispatcher that shifts
arguments with the functional equations before evaluating.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from ._backend import kernels
from .core import euler_gamma_x, gamma_classical, hurwitz_zeta, pochhammer
from .extrapolation import richardson
from .policy import (
    EPS,
    DomainError,
    EvalResult,
    PoleError,
    check_overflow,
    is_nonpositive_integer,
    nearest_int,
    resolve,
)
from .product import log_G

_LOG_OVERFLOW = math.log(1e300)

METHODS = ("auto", "weierstrass", "euler-limit", "euler-product", "stirling")


@dataclass(frozen=True)
class DomainClassification:
    x_ok: bool
    z_in_Sx: bool
    pole_index: Optional[int]
    is_limit_zero_case: bool


def classify(x, z) -> DomainClassification:
    """Locate (x, z) relative to the domain and the pole lattice."""
    x = complex(x)
    z = complex(z)
    x_ok = not is_nonpositive_integer(x)
    m = nearest_int(-(z + x))
    pole_index = m if (m is not None and m >= -1) else None
    zn = nearest_int(z)
    limit_zero = (not x_ok) and not (zn is not None and zn >= 0)
    return DomainClassification(x_ok, pole_index is None, pole_index, limit_zero)


def _exp_checked(log_value, what="Gamma(x,z)"):
    if log_value.real > _LOG_OVERFLOW:
        check_overflow(math.inf, what)
    return cmath.exp(log_value)


def _guard(x, z):
    c = classify(x, z)
    if not c.x_ok:
        raise DomainError(
            f"Gamma(x,z) is undefined for x in Z_0^- (x={complex(x)}); "
            "it tends to 0 as x approaches a nonpositive integer")
    if c.pole_index is not None:
        try:
            res = residue_at(x, c.pole_index)
        except (DomainError, OverflowError):
            res = None
        raise PoleError(
            f"pole of Gamma(x,z) at z=-(x+{c.pole_index})",
            pole_index=c.pole_index, residue=res)
    return c


def _result(log_value, abs_err, method, terms, **extra):
    value = _exp_checked(log_value)
    err = abs_err + 4.0 * EPS * (abs(log_value) + 1.0)
    return EvalResult(value, err, method, terms, extra=extra)


def log_gamma_weierstrass(x, z, policy=None):
    """(log Gamma(x,z), abs error, terms) from the product definition."""
    policy = resolve(policy)
    x = complex(x)
    z = complex(z)
    g = euler_gamma_x(x, policy)
    lp = log_G(x, z, policy)
    log_value = -(cmath.log(z + x - 1) + z * g.value + lp.value)
    abs_err = abs(z) * g.err_estimate * max(1.0, abs(g.value)) + lp.abs_err
    return log_value, abs_err, max(g.terms_used, lp.terms)


def gamma_weierstrass(x, z, policy=None) -> EvalResult:
    """Gamma(x,z) straight from the product definition."""
    _guard(x, z)
    log_value, abs_err, terms = log_gamma_weierstrass(x, z, policy)
    return _result(log_value, abs_err, "weierstrass", terms)


def gamma_euler_limit(x, z, policy=None) -> EvalResult:
    """lim_n n^z (x)_n / (z+x-1)_{n+1}, accelerated in 1/n.

    log s_n = z log n - log(z+x-1) - sum_{k<n} log(1 + z/(x+k)) is taken at
    n0, 2 n0, ..., 16 n0 and extrapolated (four Richardson eliminations).
    """
    policy = resolve(policy)
    _guard(x, z)
    x = complex(x)
    z = complex(z)
    n_top = max(policy.max_terms, 64, int(16 * (abs(x) + abs(z))))
    if policy.acceleration == "richardson":
        n0 = max(8, n_top // 16)
        ns = [n0 * 2**j for j in range(5)]
    else:
        ns = [n_top // 2, n_top]
    sums = kernels.log1p_sum_checkpoints(x, z, ns)
    head = cmath.log(z + x - 1)
    logs = [z * math.log(n) - head - s for n, (s, _) in zip(ns, sums)]
    mag = sums[-1][1] + abs(z) * math.log(ns[-1]) + abs(head)
    if policy.acceleration == "richardson":
        est, trunc = richardson(logs, ratio=2.0, power=1)
        roundoff = 8.0 * EPS * mag
    else:
        # error ~ c/n, so |s_n - s_{n/2}| matches it only to leading order
        est, trunc = logs[-1], 2.0 * abs(logs[-1] - logs[-2])
        roundoff = 4.0 * EPS * mag
    return _result(est, trunc + roundoff, "euler-limit", ns[-1])


def gamma_euler_product(x, z, policy=None) -> EvalResult:
    """x / ((z+x-1)(z+x)) * prod_{n>=1} (1+1/n)^z (1 + z/(x+n))^-1."""
    policy = resolve(policy)
    _guard(x, z)
    x = complex(x)
    z = complex(z)
    n = max(policy.max_terms, int(4 * (abs(x) + abs(z))) + 16)
    s, mag = kernels.euler_product_log_sum(x, z, n)
    order = max(policy.tail_order, 1)
    # sum_{k>n} of: z(1/k - 1/(k+x)) + z(log(1+1/k) - 1/k) - (log(1+z/(x+k)) - z/(x+k))
    tail = 0j
    zk = z
    for k in range(1, order + 1):
        zeta_n = hurwitz_zeta(k + 1, n + 1.0)
        zk = zk * z
        tail += -z * (-x) ** k * zeta_n
        tail += z * (-1) ** k / (k + 1) * zeta_n
        tail -= (-1) ** k * zk / (k + 1) * hurwitz_zeta(k + 1, x + n + 1)
    k = order + 1
    zeta_next = abs(hurwitz_zeta(k + 1, n + 1.0))
    trunc = 2.0 * (abs(z) * (abs(x) ** k + 1.0 / (k + 1)) * zeta_next
                   + abs(z) ** (k + 1) / (k + 1) * abs(hurwitz_zeta(k + 1, x + n + 1)))
    log_value = cmath.log(x) - cmath.log(z + x - 1) - cmath.log(z + x) + s + tail
    return _result(log_value, trunc + 4.0 * EPS * mag, "euler-product", n)


# --- Stirling-type exact formula -------------------------------------------

def I_integral(z, policy=None) -> float:
    """I(z) = int_0^inf (t - floor(t) - 1/2)/(z + t) dt for real z > 0.

    Unit-interval closed forms summed to N, then the tail
    -sum_k 4^-k zeta(2k, z+N+1/2)/(2k+1).
    """
    policy = resolve(policy)
    if isinstance(z, complex):
        if z.imag != 0:
            raise DomainError(f"I(z) is defined here for real z > 0, got {z}")
        z = z.real
    z = float(z)
    if not z > 0:
        raise DomainError(f"I(z) needs z > 0, got {z}")
    n = policy.max_terms
    s, _ = kernels.binet_sum(z, n)
    tail = 0.0
    a = z + n + 0.5
    for k in range(1, max(policy.tail_order, 2) + 1):
        tail -= hurwitz_zeta(2 * k, a) / (4.0**k * (2 * k + 1))
    return s + tail


@dataclass(frozen=True)
class StirlingParts:
    main_term: complex
    I_x: float
    I_zx: float

    @property
    def log_value(self):
        return self.main_term + self.I_x - self.I_zx


def _require_real_positive(x, z):
    for name, v in (("x", x), ("z", z)):
        if isinstance(v, complex) and v.imag != 0:
            raise DomainError(f"Stirling formula needs real {name}, got {v}")
    x = complex(x).real
    z = complex(z).real
    if not (x > 0 and z > 0):
        raise DomainError(f"Stirling formula needs x, z > 0, got x={x}, z={z}")
    if not z + x - 1 > 0:
        raise DomainError(f"Stirling formula needs z+x-1 > 0, got {z + x - 1}")
    return x, z


def gamma_stirling_log(x, z, policy=None) -> StirlingParts:
    """log Gamma(x,z) = main + I(x) - I(z+x-1), exact for real x, z > 0."""
    x, z = _require_real_positive(x, z)
    w = z + x - 1.0
    main = (w - 0.5) * math.log(w) - z + 1.0 - (x - 0.5) * math.log(x)
    return StirlingParts(main, I_integral(x, policy), I_integral(w, policy))


def gamma_stirling(x, z, policy=None) -> EvalResult:
    policy = resolve(policy)
    parts = gamma_stirling_log(x, z, policy)
    lv = parts.log_value
    xr, zr = complex(x).real, complex(z).real
    # each I term is good to ~1e-16 absolute; main term loses eps*|w log w|
    w = zr + xr - 1.0
    abs_err = 8.0 * EPS * (abs(w * math.log(w)) + abs(xr * math.log(xr)) + zr + 1.0)
    value = _exp_checked(complex(lv))
    return EvalResult(value, abs_err, "stirling", policy.max_terms, extra={"parts": parts})


def stirling_asymptotic(x, z):
    """(z+x-1)^(z+x-3/2) e^(1-z) x^(1/2-x): the leading large-x shape."""
    x, z = _require_real_positive(x, z)
    w = z + x - 1.0
    return math.exp((w - 0.5) * math.log(w) + 1.0 - z + (0.5 - x) * math.log(x))


# --- dispatcher ------------------------------------------------------------

def _is_real_positive(v):
    v = complex(v)
    return v.imag == 0 and v.real > 0


def _auto(x, z, policy):
    xr, zr = complex(x), complex(z)
    if (_is_real_positive(x) and _is_real_positive(z) and (xr + zr - 1).real > 0
            and max(xr.real, zr.real) > 50):
        return gamma_stirling(x, z, policy)
    x = xr
    z = zr
    factor = 1.0 + 0j
    shift_err = 0.0
    steps = 0
    # Gamma(x, z) = x / (z+x-1) * Gamma(x+1, z)
    while x.real < 1.0:
        d = z + x - 1
        factor *= x / d
        shift_err += 2.0 * EPS * (1.0 + (abs(z) + abs(x) + 1) / abs(d))
        x += 1
        steps += 1
    # Gamma(x, z) = Gamma(x, z+1) / (z+x-1)
    while (z + x).real < 1.0:
        d = z + x - 1
        factor /= d
        shift_err += EPS * (abs(z) + abs(x) + 1) / abs(d)
        z += 1
        steps += 1
    log_value, abs_err, terms = log_gamma_weierstrass(x, z, policy)
    log_value += cmath.log(factor)
    res = _result(log_value, abs_err + shift_err, "weierstrass", terms,
                  shifts=steps)
    return res


def gamma_xz(x, z, policy=None, method="auto") -> EvalResult:
    """Evaluate Gamma(x, z).

    ``method`` selects one route explicitly; ``'auto'`` shifts x and then z
    upward with the functional equations until Re(x) >= 1 and
    Re(z+x) >= 1, evaluates the product definition there, and uses the
    Stirling formula for large real positive arguments. Poles raise
    ``PoleError`` carrying the pole index and residue.
    """
    policy = resolve(policy)
    if method not in METHODS:
        raise ValueError(f"method must be one of {METHODS}")
    _guard(x, z)
    if method == "weierstrass":
        return gamma_weierstrass(x, z, policy)
    if method == "euler-limit":
        return gamma_euler_limit(x, z, policy)
    if method == "euler-product":
        return gamma_euler_product(x, z, policy)
    if method == "stirling":
        return gamma_stirling(x, z, policy)
    res = _auto(x, z, policy)
    refinements = 0
    while res.err_estimate > policy.target_rel_tol and refinements < 2:
        policy = policy.with_terms(policy.max_terms * 4)
        res = _auto(x, z, policy)
        refinements += 1
    return res


# --- special values, residues ---------------------------------------------

def residue_at(x, m: int):
    """Residue of Gamma(x, .) at z = -(x+m), m >= -1."""
    if int(m) != m or m < -1:
        raise DomainError(f"pole index must be an integer >= -1, got {m!r}")
    m = int(m)
    if is_nonpositive_integer(x):
        raise DomainError(f"residue undefined for x in Z_0^-: x={x}")
    if m == -1:
        if is_nonpositive_integer(complex(x) - 1):
            # x = 1: (x-1) Gamma(x-1) -> Gamma(x)
            return 1.0 / gamma_classical(x)
        return 1.0 / ((x - 1) * gamma_classical(x - 1))
    return ((-1) ** (m + 1) * pochhammer(x, 2 * m + 1)
            / (math.factorial(m + 1) * gamma_classical(x + 2 * m + 1)))


def _poch_fraction(a: Fraction, n: int) -> Fraction:
    out = Fraction(1)
    for k in range(n):
        out *= a + k
    return out


def half_integer_value(k: int, l: int) -> float:
    """Closed form of Gamma((2k+1)/2, (2l+1)/2) for k, l >= 0, k+l >= 1."""
    if int(k) != k or int(l) != l or k < 0 or l < 0:
        raise ValueError(f"k and l must be nonnegative integers, got {k!r}, {l!r}")
    if k + l == 0:
        raise ValueError("k + l must be nonzero")
    k, l = int(k), int(l)
    f = math.factorial
    rational = (Fraction(2, 2 * k - 1)
                * Fraction(f(2 * l + 2), (-4) ** (l + 1) * f(l + 1))
                * Fraction(f(k + l - 1)) / _poch_fraction(Fraction(-2 * l - 1, 2), k + l))
    return float(rational) / math.sqrt(math.pi)


NORM_BASE = math.exp(math.pi) / (10.0 * (math.exp(2 * math.pi) + 1.0))


def gaussian_norm(n: int) -> float:
    """|Gamma(n+i, n+i)|^2 from |Gamma(i,i)|^2 by the diagonal recurrence.

    Gamma(x+1, z+1) = (z+x-1)(z+x)/x * Gamma(x, z) with x = z = j + i.
    """
    if int(n) != n or n < 0:
        raise ValueError(f"n must be a nonnegative integer, got {n!r}")
    value = NORM_BASE
    for j in range(int(n)):
        w = complex(j, 1.0)
        value *= abs((2 * w - 1) * (2 * w) / w) ** 2
    return value


def gaussian_norm_closed_form(n: int) -> float:
    """Closed product formula 5 prod_{k<=2n-2}(4+k^2) / prod_{k<n}(1+k^2) * base."""
    num = 5 * math.prod(4 + k * k for k in range(0, 2 * n - 1))
    den = math.prod(1 + k * k for k in range(0, n))
    return num / den * NORM_BASE


def gaussian_norm_report(n_max: int = 3) -> list:
    """Recurrence value vs the closed product formula for n = 0..n_max."""
    rows = []
    for n in range(n_max + 1):
        rec = gaussian_norm(n)
        closed = gaussian_norm_closed_form(n)
        rows.append({"n": n, "recurrence": rec, "closed_form": closed,
                     "ratio": closed / rec})
    return rows
