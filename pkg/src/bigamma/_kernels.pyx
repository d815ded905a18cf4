# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot summation loops in ``_pykernels``.

Signatures and results match the pure-Python module term for term; only
the loop overhead differs.
"""
from libc.math cimport log1p, atan2, fabs


cdef extern from "complex.h" nogil:
    double complex clog(double complex)


cdef inline double complex _clog1p(double complex w) noexcept nogil:
    cdef double re = w.real
    cdef double im = w.imag
    if fabs(re) < 0.5 and fabs(im) < 0.5:
        return 0.5 * log1p(re * (2.0 + re) + im * im) + atan2(im, 1.0 + re) * 1j
    return clog(1.0 + w)


cdef inline double _cabs(double complex w) noexcept nogil:
    # |re| + |im|: a cheap upper bound on the modulus, enough for roundoff bounds
    return fabs(w.real) + fabs(w.imag)


cdef inline double complex _cdiv(double complex a, double complex b) noexcept nogil:
    cdef double den = b.real * b.real + b.imag * b.imag
    return ((a.real * b.real + a.imag * b.imag) / den
            + (a.imag * b.real - a.real * b.imag) / den * 1j)


cdef struct Kahan:
    double re
    double im
    double cre
    double cim
    double mag


cdef inline void _kinit(Kahan* a) noexcept nogil:
    a.re = 0.0
    a.im = 0.0
    a.cre = 0.0
    a.cim = 0.0
    a.mag = 0.0


cdef inline void _kadd(Kahan* a, double complex t) noexcept nogil:
    cdef double y, s
    y = t.real - a.cre
    s = a.re + y
    a.cre = (s - a.re) - y
    a.re = s
    y = t.imag - a.cim
    s = a.im + y
    a.cim = (s - a.im) - y
    a.im = s
    a.mag += _cabs(t)


cdef inline object _kout(Kahan* a):
    return complex(a.re, a.im), a.mag


def clog1p(w):
    cdef double complex r = _clog1p(<double complex>complex(w))
    return complex(r.real, r.imag)


def gamma_x_sum(x, long n):
    cdef double complex cx = <double complex>complex(x)
    cdef Kahan acc
    cdef long k
    _kinit(&acc)
    with nogil:
        _kadd(&acc, _cdiv(1.0, cx))
        for k in range(1, n + 1):
            _kadd(&acc, _cdiv(1.0, cx + k) - log1p(1.0 / k))
    return _kout(&acc)


def harmonic_sum(x, long n):
    cdef double complex cx = <double complex>complex(x)
    cdef Kahan acc
    cdef long k
    _kinit(&acc)
    with nogil:
        for k in range(n + 1):
            _kadd(&acc, _cdiv(1.0, cx + k))
    return _kout(&acc)


def weierstrass_log_sum(x, z, long n):
    cdef double complex cx = <double complex>complex(x)
    cdef double complex cz = <double complex>complex(z)
    cdef double complex w
    cdef Kahan acc
    cdef long k
    _kinit(&acc)
    with nogil:
        for k in range(n):
            w = _cdiv(cz, cx + k)
            _kadd(&acc, _clog1p(w) - w)
    return _kout(&acc)


def log1p_sum_checkpoints(x, z, checkpoints):
    cdef double complex cx = <double complex>complex(x)
    cdef double complex cz = <double complex>complex(z)
    cdef Kahan acc
    cdef long k = 0
    cdef long n
    out = []
    _kinit(&acc)
    for n in checkpoints:
        with nogil:
            while k < n:
                _kadd(&acc, _clog1p(_cdiv(cz, cx + k)))
                k += 1
        out.append(_kout(&acc))
    return out


def euler_product_log_sum(x, z, long n):
    cdef double complex cx = <double complex>complex(x)
    cdef double complex cz = <double complex>complex(z)
    cdef Kahan acc
    cdef long k
    _kinit(&acc)
    with nogil:
        for k in range(1, n + 1):
            _kadd(&acc, cz * log1p(1.0 / k) - _clog1p(_cdiv(cz, cx + k)))
    return _kout(&acc)


cdef inline double _binet_term(double a) noexcept nogil:
    cdef double t, t2, p, s, term
    cdef int j
    if a < 2.0:
        return 1.0 - (a + 0.5) * log1p(1.0 / a)
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


def binet_term(double a):
    return _binet_term(a)


def binet_sum(double z, long n):
    cdef double s = 0.0, c = 0.0, mag = 0.0, t, y, u
    cdef long k
    with nogil:
        for k in range(n):
            t = _binet_term(z + k)
            y = t - c
            u = s + y
            c = (u - s) - y
            s = u
            mag += fabs(t)
    return s, mag


def sin2_log_sum(x, z, long n):
    cdef double complex cx = <double complex>complex(x)
    cdef double complex cz = <double complex>complex(z)
    cdef double complex z2 = cz * cz
    cdef double complex a, b
    cdef Kahan acc
    cdef long k
    _kinit(&acc)
    with nogil:
        for k in range(1, n + 1):
            a = k + cx
            b = k - cx
            _kadd(&acc, _clog1p(_cdiv(-z2, a * a)) + _clog1p(_cdiv(-z2, b * b)))
    return _kout(&acc)
