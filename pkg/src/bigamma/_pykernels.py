"""Pure-Python versions of the hot summation loops.

Every function here has a twin with the same signature in ``_kernels.pyx``.
Sums are Kahan-compensated and each returns ``(value, abs_sum)`` where
``abs_sum`` is the sum of term magnitudes, used for roundoff bounds.
"""
import cmath
import math


def clog1p(w):
    """log(1 + w) on the principal branch, accurate for small |w|."""
    re = w.real
    im = w.imag
    if abs(re) < 0.5 and abs(im) < 0.5:
        return complex(0.5 * math.log1p(re * (2.0 + re) + im * im),
                       math.atan2(im, 1.0 + re))
    return cmath.log(1.0 + w)


class _Kahan:
    __slots__ = ("re", "im", "cre", "cim", "mag")

    def __init__(self):
        self.re = self.im = self.cre = self.cim = self.mag = 0.0

    def add(self, t):
        y = t.real - self.cre
        s = self.re + y
        self.cre = (s - self.re) - y
        self.re = s
        y = t.imag - self.cim
        s = self.im + y
        self.cim = (s - self.im) - y
        self.im = s
        # |re| + |im| bounds the modulus and is cheaper than hypot
        self.mag += abs(t.real) + abs(t.imag)

    def value(self):
        return complex(self.re, self.im)


def gamma_x_sum(x, n):
    """1/x + sum_{k=1}^{n} (1/(x+k) - log(1 + 1/k))."""
    x = complex(x)
    acc = _Kahan()
    acc.add(1.0 / x)
    for k in range(1, n + 1):
        acc.add(1.0 / (x + k) - math.log1p(1.0 / k))
    return acc.value(), acc.mag


def harmonic_sum(x, n):
    """sum_{k=0}^{n} 1/(x+k)."""
    x = complex(x)
    acc = _Kahan()
    for k in range(n + 1):
        acc.add(1.0 / (x + k))
    return acc.value(), acc.mag


def weierstrass_log_sum(x, z, n):
    """sum_{k=0}^{n-1} (log(1 + z/(x+k)) - z/(x+k))."""
    x = complex(x)
    z = complex(z)
    acc = _Kahan()
    for k in range(n):
        w = z / (x + k)
        acc.add(clog1p(w) - w)
    return acc.value(), acc.mag


def log1p_sum_checkpoints(x, z, checkpoints):
    """Partial sums sum_{k=0}^{n-1} log(1 + z/(x+k)) at each n in ``checkpoints``.

    ``checkpoints`` must be ascending. Returns a list of ``(value, abs_sum)``.
    """
    x = complex(x)
    z = complex(z)
    acc = _Kahan()
    out = []
    k = 0
    for n in checkpoints:
        while k < n:
            acc.add(clog1p(z / (x + k)))
            k += 1
        out.append((acc.value(), acc.mag))
    return out


def euler_product_log_sum(x, z, n):
    """sum_{k=1}^{n} (z log(1 + 1/k) - log(1 + z/(x+k)))."""
    x = complex(x)
    z = complex(z)
    acc = _Kahan()
    for k in range(1, n + 1):
        acc.add(z * math.log1p(1.0 / k) - clog1p(z / (x + k)))
    return acc.value(), acc.mag


def binet_term(a):
    """Integral of (t - floor(t) - 1/2)/(a + t) over [0, 1], a > 0."""
    if a < 2.0:
        return 1.0 - (a + 0.5) * math.log1p(1.0 / a)
    # 1 - atanh(t)/t with t = 1/(2a+1); no cancellation
    t = 1.0 / (2.0 * a + 1.0)
    t2 = t * t
    p = t2
    s = 0.0
    for j in range(1, 40):
        term = p / (2 * j + 1)
        s += term
        if term < 1e-18 * s:
            break
        p *= t2
    return -s


def binet_sum(z, n):
    """sum_{k=0}^{n-1} binet_term(z + k) for real z > 0."""
    s = 0.0
    c = 0.0
    mag = 0.0
    for k in range(n):
        t = binet_term(z + k)
        y = t - c
        u = s + y
        c = (u - s) - y
        s = u
        mag += abs(t)
    return s, mag


def sin2_log_sum(x, z, n):
    """sum_{k=1}^{n} (log(1 - z^2/(k+x)^2) + log(1 - z^2/(k-x)^2))."""
    x = complex(x)
    z2 = complex(z) ** 2
    acc = _Kahan()
    for k in range(1, n + 1):
        a = k + x
        b = k - x
        acc.add(clog1p(-z2 / (a * a)) + clog1p(-z2 / (b * b)))
    return acc.value(), acc.mag
