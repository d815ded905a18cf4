"""Scalar special functions used throughout the package.

Pochhammer symbol, Hurwitz/Riemann zeta at integer order, the classical
gamma function (libm on the real line, Lanczos off it), digamma, and the generalized Euler constant
gamma(x) = lim (1/x + ... + 1/(x+n-1) - log n) in two limit forms.
"""
from __future__ import annotations

import cmath
import math

from ._backend import kernels
from .policy import (
    EPS,
    DomainError,
    EvalResult,
    PoleError,
    check_overflow,
    is_nonpositive_integer,
    resolve,
)

EULER_GAMMA = 0.57721566490153286061

# B_2, B_4, ..., B_16
BERNOULLI_EVEN = (
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
)

# Lanczos, g = 7, n = 9; relative error ~1e-15 on the right half plane.
_LANCZOS_G = 7.0
_LANCZOS_COEF = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)
_LOG_OVERFLOW = math.log(1e300)


def _is_real(v):
    return not isinstance(v, complex)


def _out(value, real_input):
    return value.real if real_input else value


def pochhammer(z, n: int):
    """Rising factorial (z)_n = z (z+1) ... (z+n-1), with (z)_0 = 1."""
    if int(n) != n or n < 0:
        raise DomainError(f"pochhammer order must be a nonnegative integer, got {n!r}")
    result = 1
    for k in range(int(n)):
        result = result * (z + k)
        check_overflow(result, "pochhammer")
    return result


def hurwitz_zeta(m: int, x):
    """sum_{n>=0} (n+x)^(-m) for integer m >= 2 and Re(x) > 0.

    Direct summation of N = ceil(max(16, |Im x|)) terms, then an
    Euler-Maclaurin tail through B_12.
    """
    if int(m) != m or m < 2:
        raise DomainError(f"hurwitz_zeta needs integer order m >= 2, got {m!r}")
    m = int(m)
    real_input = _is_real(x)
    x = complex(x)
    if not x.real > 0:
        raise DomainError(f"hurwitz_zeta needs Re(x) > 0, got x={x}")
    n = math.ceil(max(16.0, abs(x.imag)))
    terms = [(x + k) ** (-m) for k in range(n)]
    a = x + n
    a_pow = a ** (-m)
    terms.append(a * a_pow / (m - 1))
    terms.append(0.5 * a_pow)
    inv_a2 = 1.0 / (a * a)
    # B_2k/(2k)! * (m)_{2k-1} * a^{-m-2k+1}
    rising = float(m)          # (m)_1
    fact = 2.0                 # 2!
    p = a_pow / a              # a^{-m-1}
    for k in range(1, 7):
        terms.append(BERNOULLI_EVEN[k - 1] / fact * rising * p)
        rising *= (m + 2 * k - 1) * (m + 2 * k)
        fact *= (2 * k + 1) * (2 * k + 2)
        p *= inv_a2
    value = complex(math.fsum(t.real for t in terms), math.fsum(t.imag for t in terms))
    return _out(value, real_input)


def riemann_zeta(m: int) -> float:
    """zeta(m) = hurwitz_zeta(m, 1) for integer m >= 2."""
    return hurwitz_zeta(m, 1.0)


def _log_gamma_lanczos(z: complex) -> complex:
    z = z - 1.0
    s = _LANCZOS_COEF[0]
    for i in range(1, len(_LANCZOS_COEF)):
        s += _LANCZOS_COEF[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    return _HALF_LOG_2PI + (z + 0.5) * cmath.log(t) - t + cmath.log(s)


def gamma_classical(z):
    """Classical Gamma(z).

    Real arguments go to ``math.gamma``. Complex arguments use the Lanczos
    approximation (g=7, n=9) with the reflection
    Gamma(z) Gamma(1-z) = pi / sin(pi z) for Re(z) < 1/2.
    """
    real_input = _is_real(z)
    z = complex(z)
    if is_nonpositive_integer(z):
        n = round(z.real)
        raise PoleError(f"Gamma has a pole at z={n}", pole_index=-n - 1,
                        residue=(-1) ** (-n) / math.factorial(-n))
    if real_input:
        # libm is correctly rounded to within an ulp on the real line
        try:
            value = math.gamma(z.real)
        except OverflowError:
            value = math.inf
        check_overflow(value, "gamma")
        return value
    if z.real < 0.5:
        s = cmath.sin(math.pi * z)
        rest = gamma_classical(1.0 - z)
        value = math.pi / (s * rest)
    else:
        lg = _log_gamma_lanczos(z)
        if lg.real > _LOG_OVERFLOW:
            check_overflow(math.inf, "gamma")
        value = cmath.exp(lg)
    check_overflow(value, "gamma")
    return _out(value, real_input)


def digamma(x):
    """psi(x) = Gamma'(x)/Gamma(x) via recurrence and the asymptotic series."""
    real_input = _is_real(x)
    x = complex(x)
    if is_nonpositive_integer(x):
        raise PoleError(f"digamma has a pole at x={round(x.real)}")
    if x.real < 0.5:
        # psi(x) = psi(1-x) - pi cot(pi x)
        value = digamma(1.0 - x) - math.pi / cmath.tan(math.pi * x)
        return _out(complex(value), real_input)
    shift = 0j
    while abs(x) < 15.0:
        shift -= 1.0 / x
        x += 1.0
    inv2 = 1.0 / (x * x)
    p = inv2
    series = 0j
    for k, b in enumerate(BERNOULLI_EVEN, start=1):
        series += b / (2 * k) * p
        p *= inv2
    value = shift + cmath.log(x) - 0.5 / x - series
    return _out(value, real_input)


def _check_gamma_x_domain(x):
    if is_nonpositive_integer(x):
        raise PoleError(f"gamma(x) has a pole at x={round(complex(x).real)}")


def _terms_for(policy, scale):
    # tail expansions need the cut-off well beyond |x|
    return max(policy.max_terms, int(4 * scale) + 16)


def euler_gamma_x(x, policy=None) -> EvalResult:
    """gamma(x) = 1/x + sum_{n>=1} (1/(x+n) - log((n+1)/n)).

    After N terms the remainder is expanded as
    sum_k (-x)^k zeta(k+1, N+1) + sum_j (-1)^j/j zeta(j, N+1),
    keeping ``policy.tail_order`` terms of each.
    ``err_estimate`` is relative to max(1, |gamma(x)|).
    """
    policy = resolve(policy)
    real_input = _is_real(x)
    x = complex(x)
    _check_gamma_x_domain(x)
    n = _terms_for(policy, abs(x))
    s, mag = kernels.gamma_x_sum(x, n)
    order = policy.tail_order
    tail = 0j
    for k in range(1, order + 1):
        zk = hurwitz_zeta(k + 1, n + 1.0)
        tail += (-x) ** k * zk + (-1) ** (k + 1) / (k + 1) * zk
    z_next = hurwitz_zeta(order + 2, n + 1.0)
    trunc = 2.0 * (abs(x) ** (order + 1) + 1.0 / (order + 2)) * z_next
    value = s + tail
    err = trunc + 4.0 * EPS * (mag + abs(value))
    return EvalResult(_out(value, real_input), err / max(1.0, abs(value)),
                      "series", n)


def stieltjes_zeroth(x, policy=None) -> EvalResult:
    """gamma_0(x) = lim (sum_{k=0}^{n} 1/(x+k) - log(n+x)).

    The remainder after n terms is the Euler-Maclaurin tail
    -1/(2a) + sum_k B_2k / (2k a^2k) with a = x + n.
    """
    policy = resolve(policy)
    real_input = _is_real(x)
    x = complex(x)
    _check_gamma_x_domain(x)
    n = _terms_for(policy, abs(x))
    s, mag = kernels.harmonic_sum(x, n)
    a = x + n
    log_a = cmath.log(a)
    order = min(policy.tail_order, len(BERNOULLI_EVEN) - 1)
    inv2 = 1.0 / (a * a)
    p = inv2
    tail = -0.5 / a
    for k in range(1, order + 1):
        tail += BERNOULLI_EVEN[k - 1] / (2 * k) * p
        p *= inv2
    trunc = 2.0 * abs(BERNOULLI_EVEN[order] / (2 * order + 2) * p)
    value = s - log_a + tail
    err = trunc + 4.0 * EPS * (mag + abs(log_a) + abs(value))
    return EvalResult(_out(value, real_input), err / max(1.0, abs(value)),
                      "stieltjes", n)
