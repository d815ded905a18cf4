import cmath
import math

import mpmath as mp
import pytest
from hypothesis import given
from hypothesis import strategies as st

from bigamma.core import (
    EULER_GAMMA,
    digamma,
    euler_gamma_x,
    gamma_classical,
    hurwitz_zeta,
    pochhammer,
    riemann_zeta,
    stieltjes_zeroth,
)
from bigamma.extrapolation import central_difference, richardson, taylor_coefficient
from bigamma.policy import (
    DomainError,
    EvalOverflowError,
    PoleError,
    TruncationPolicy,
    default_policy,
)

from conftest import complexes, dist_int

LN2 = math.log(2.0)
ZETA3 = 1.2020569031595942


# pochhammer

@pytest.mark.parametrize("z,n,expected", [
    (2.5 + 1j, 0, 1),
    (3, 3, 60),
    (-1.5, 2, 0.75),
])
def test_pochhammer_values(z, n, expected):
    assert pochhammer(z, n) == expected


@given(complexes(10), st.integers(0, 20))
def test_pochhammer_step(z, n):
    assert pochhammer(z, n + 1) == pochhammer(z, n) * (z + n)


def test_pochhammer_rejects_bad_order():
    with pytest.raises(DomainError):
        pochhammer(1.0, -1)
    with pytest.raises(DomainError):
        pochhammer(1.0, 1.5)


def test_pochhammer_overflow():
    with pytest.raises(EvalOverflowError):
        pochhammer(1e100, 5)


# zeta

def test_hurwitz_known_values():
    assert hurwitz_zeta(2, 1) == pytest.approx(math.pi**2 / 6, rel=1e-15)
    assert hurwitz_zeta(2, 2) == pytest.approx(math.pi**2 / 6 - 1, rel=1e-15)
    # zeta(s, 1/2) = (2^s - 1) zeta(s)
    assert hurwitz_zeta(3, 0.5) == pytest.approx(7 * ZETA3, rel=1e-14)
    assert hurwitz_zeta(3, 0.5) == pytest.approx(8.414398322117160, rel=1e-14)


def test_riemann_values():
    assert riemann_zeta(2) == pytest.approx(math.pi**2 / 6, rel=1e-15)
    assert riemann_zeta(3) == pytest.approx(1.202056903159594, rel=1e-14)
    assert riemann_zeta(4) == pytest.approx(math.pi**4 / 90, rel=1e-15)


def test_hurwitz_real_in_real_out():
    assert isinstance(hurwitz_zeta(2, 1.5), float)
    assert isinstance(hurwitz_zeta(2, 1.5 + 0j), complex)


@pytest.mark.parametrize("m", range(2, 9))
@pytest.mark.parametrize("x", [0.3, 1.0, 2.7 + 1.5j, 0.1 - 20j, 7.5 + 40j])
def test_hurwitz_against_mpmath(m, x):
    assert abs(hurwitz_zeta(m, x) - complex(mp.zeta(m, x))) <= 1e-13 * abs(complex(mp.zeta(m, x)))


@given(st.integers(2, 8),
       st.builds(complex, st.floats(0.05, 30), st.floats(-30, 30)))
def test_hurwitz_telescoping(m, x):
    diff = hurwitz_zeta(m, x) - hurwitz_zeta(m, x + 1)
    assert abs(diff - x ** (-m)) <= 1e-12 * max(1.0, abs(x ** (-m)))


def test_hurwitz_domain():
    with pytest.raises(DomainError):
        hurwitz_zeta(1, 2.0)
    with pytest.raises(DomainError):
        hurwitz_zeta(2, -0.5)
    with pytest.raises(DomainError):
        hurwitz_zeta(2, 0.0)


# classical gamma

def test_gamma_classical_values():
    assert gamma_classical(1) == 1.0
    assert gamma_classical(5) == 24.0
    assert gamma_classical(0.5) == pytest.approx(1.772453850905516, rel=1e-15)


@pytest.mark.parametrize("z", [0.5 + 40j, -3.3 + 0.2j, 1e-3 + 1e-3j, 12 - 7j, -0.5 - 2j])
def test_gamma_classical_complex(z):
    ref = complex(mp.gamma(z))
    assert abs(gamma_classical(z) - ref) <= 1e-12 * abs(ref)


@pytest.mark.parametrize("n", [0, -1, -7])
def test_gamma_classical_poles(n):
    with pytest.raises(PoleError) as info:
        gamma_classical(n)
    assert info.value.pole_index == -n - 1
    assert info.value.residue == pytest.approx((-1) ** (-n) / math.factorial(-n))


def test_gamma_classical_overflow():
    with pytest.raises(EvalOverflowError):
        gamma_classical(200.0)
    with pytest.raises(EvalOverflowError):
        gamma_classical(200.0 + 1j)


# digamma

def test_digamma_values():
    assert digamma(1) == pytest.approx(-EULER_GAMMA, rel=1e-15)
    assert digamma(0.5) == pytest.approx(-EULER_GAMMA - 2 * LN2, rel=1e-15)
    assert digamma(2) == pytest.approx(1 - EULER_GAMMA, rel=1e-14)


@given(complexes(25))
def test_digamma_against_mpmath(x):
    if dist_int(x) < 1e-3 and complex(x).real < 0.5:
        return
    ref = complex(mp.digamma(x))
    assert abs(digamma(x) - ref) <= 1e-12 * max(1.0, abs(ref))


def test_digamma_pole():
    with pytest.raises(PoleError):
        digamma(-2)


# generalized Euler constant

def test_euler_gamma_x_values():
    assert euler_gamma_x(1).value == pytest.approx(EULER_GAMMA, abs=1e-15)
    assert euler_gamma_x(2).value == pytest.approx(EULER_GAMMA - 1, abs=1e-15)
    # oracle: -psi(1/2) = gamma + 2 log 2
    assert euler_gamma_x(0.5).value == pytest.approx(1.963510026021423, abs=1e-14)


def test_stieltjes_values():
    assert stieltjes_zeroth(1).value == pytest.approx(EULER_GAMMA, abs=1e-15)
    assert stieltjes_zeroth(2).value == pytest.approx(EULER_GAMMA - 1, abs=1e-15)
    assert stieltjes_zeroth(1.5).value == pytest.approx(
        EULER_GAMMA + 2 * LN2 - 2, abs=1e-14)


@given(st.builds(complex, st.floats(0.01, 50), st.floats(-50, 50)))
def test_euler_gamma_is_minus_digamma(x):
    assert abs(euler_gamma_x(x).value + digamma(x)) <= 1e-9


@given(complexes(20))
def test_euler_gamma_recurrence(x):
    if dist_int(x) < 1e-2 and complex(x).real < 1.5:
        return
    lhs = euler_gamma_x(x + 1).value
    rhs = euler_gamma_x(x).value - 1 / x
    assert abs(lhs - rhs) <= 1e-10 * max(1.0, abs(lhs))


@given(complexes(10))
def test_stieltjes_matches_series(x):
    if dist_int(x) < 1e-2 and complex(x).real < 0.5:
        return
    a = stieltjes_zeroth(x)
    b = euler_gamma_x(x)
    scale = max(1.0, abs(b.value))
    assert abs(a.value - b.value) <= (a.err_estimate + b.err_estimate) * scale + 1e-15 * scale


@pytest.mark.parametrize("x", [0.5, 3 + 4j, -2.5 + 0.1j, 40.0, 15 - 15j])
def test_euler_gamma_error_estimate_honest(x):
    small = TruncationPolicy(max_terms=500)
    r1 = euler_gamma_x(x, small)
    r2 = euler_gamma_x(x, small.with_terms(1000))
    assert abs(r2.value - r1.value) <= 4 * r1.err_estimate * max(1.0, abs(r1.value))
    truth = -complex(mp.digamma(x))
    assert abs(r1.value - truth) <= r1.err_estimate * max(1.0, abs(truth))


def test_euler_gamma_pole():
    with pytest.raises(PoleError):
        euler_gamma_x(-3)
    with pytest.raises(PoleError):
        stieltjes_zeroth(0)


def test_euler_gamma_real_in_real_out():
    assert isinstance(euler_gamma_x(2.5).value, float)


# policy

def test_policy_validation():
    with pytest.raises(ValueError):
        TruncationPolicy(max_terms=7)
    with pytest.raises(ValueError):
        TruncationPolicy(tail_order=-1)
    with pytest.raises(ValueError):
        TruncationPolicy(target_rel_tol=1e-16)
    with pytest.raises(ValueError):
        TruncationPolicy(acceleration="aitken")


def test_default_policy_env(monkeypatch):
    monkeypatch.setenv("BIGAMMA_MAX_TERMS", "321")
    assert default_policy().max_terms == 321
    monkeypatch.delenv("BIGAMMA_MAX_TERMS")
    assert default_policy().max_terms == 10_000


# extrapolation helpers

def test_richardson_removes_linear_error():
    vals = [1.0 + 0.5 / 2**k + 0.25 / 4**k for k in range(4)]
    est, err = richardson(vals, ratio=2, power=1)
    assert est == pytest.approx(1.0, abs=1e-14)
    assert err < 1e-2


def test_central_difference_polynomial():
    # exact for polynomials of degree order+1 (symmetric stencil)
    q = lambda t: -2 * t**2 + 5 * t
    assert central_difference(q, 0.3, 1, 0.1) == pytest.approx(-1.2 + 5, rel=1e-12)
    f = lambda t: t**4 - 2 * t**2 + 5 * t
    assert central_difference(f, 0.3, 3, 0.1) == pytest.approx(24 * 0.3, rel=1e-9)


def test_taylor_coefficient_exp():
    for m in range(6):
        c, _ = taylor_coefficient(cmath.exp, 0.0, m, h=0.5)
        assert c == pytest.approx(1 / math.factorial(m), rel=1e-8)
