import math

import mpmath as mp
import pytest
from hypothesis import given
from hypothesis import strategies as st

from bigamma._backend import kernels
from bigamma.gamma2 import (
    NORM_BASE,
    I_integral,
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
from bigamma.policy import DomainError, EvalOverflowError, PoleError, TruncationPolicy

from conftest import complexes, gamma2_ref, pole_dist, rel_err

SQRT_PI = math.sqrt(math.pi)


# classification

def test_classify_examples():
    c = classify(1, 5)
    assert c.x_ok and c.z_in_Sx and c.pole_index is None
    c = classify(1, 0)
    assert not c.z_in_Sx and c.pole_index == -1
    c = classify(2.5, -2.5)
    assert c.pole_index == 0
    c = classify(-2, 0.5)
    assert not c.x_ok and c.is_limit_zero_case


@given(complexes(6), complexes(6))
def test_classify_consistent(x, z):
    c = classify(x, z)
    assert (c.pole_index is None) == c.z_in_Sx


# definitional route

@pytest.mark.parametrize("x,z,expected", [
    (2.7, 1, 1.0),
    (0.5, 0, -2.0),
    (3, 4, 60.0),
])
def test_weierstrass_special_values(x, z, expected):
    assert gamma_weierstrass(x, z).value == pytest.approx(expected, rel=1e-13)


@given(complexes(6), complexes(6))
def test_weierstrass_against_reference(x, z):
    if pole_dist(x, z) < 0.1 or pole_dist(x, 0) < 0.1:
        return
    r = gamma_weierstrass(x, z)
    ref = gamma2_ref(x, z)
    assert abs(r.value - ref) <= max(1e-12, 4 * r.err_estimate) * abs(ref)


# Euler limit and Euler product

def test_euler_limit_examples():
    assert gamma_euler_limit(1, 5).value == pytest.approx(24, rel=1e-12)
    assert gamma_euler_limit(2, 0.5).value == pytest.approx(0.886226925452758, rel=1e-12)
    assert gamma_euler_limit(1.5, 1.5).value == pytest.approx(2 / SQRT_PI, rel=1e-12)


def test_euler_limit_without_acceleration_is_coarser():
    policy = TruncationPolicy(max_terms=2000, acceleration="none")
    r = gamma_euler_limit(2, 0.5, policy)
    err = abs(r.value - 0.5 * SQRT_PI)
    assert 1e-12 < err <= r.err_estimate * abs(r.value)


def test_euler_product_examples():
    assert gamma_euler_product(1, 3).value == pytest.approx(2, rel=1e-13)
    assert gamma_euler_product(2.7, 1).value == pytest.approx(1, rel=1e-13)
    a = gamma_euler_product(0.8, 2.2).value
    b = gamma_weierstrass(0.8, 2.2).value
    assert abs(a - b) <= 1e-9 * abs(b)


def test_euler_product_pole_at_x_plus_z_zero():
    with pytest.raises(PoleError):
        gamma_euler_product(1.5, -1.5)


@given(complexes(4), complexes(4))
def test_methods_agree(x, z):
    if pole_dist(x, z) < 0.1 or abs(x + z) < 0.1:
        return
    w = gamma_weierstrass(x, z)
    for method in (gamma_euler_limit, gamma_euler_product):
        r = method(x, z)
        tol = 2 * (r.err_estimate + w.err_estimate) + 1e-14
        assert rel_err(r.value, w.value) <= tol * max(1.0, abs(w.value)) / max(1.0, abs(w.value)) + tol


# Stirling-type formula

def binet_ref(z):
    """I(z) = -(log Gamma(z) - (z-1/2) log z + z - log(2 pi)/2)."""
    z = mp.mpf(z)
    return float(-(mp.loggamma(z) - (z - 0.5) * mp.log(z) + z - mp.log(2 * mp.pi) / 2))


def test_I_single_interval():
    # integral_0^1 P(t)/(1+t) dt = 1 - (3/2) log 2
    assert kernels.binet_term(1.0) == pytest.approx(1 - 1.5 * math.log(2), rel=1e-14)
    assert kernels.binet_term(1.0) == pytest.approx(-0.039720770839918, abs=1e-15)


def test_I_at_one_is_negative():
    # sign fixed by the quadrature oracle: I(1) = log(2 pi)/2 - 1
    assert I_integral(1.0) == pytest.approx(0.5 * math.log(2 * math.pi) - 1, abs=1e-14)
    assert I_integral(1.0) == pytest.approx(-0.081061466795327, abs=1e-14)


def test_I_vanishes_at_infinity():
    assert abs(I_integral(1e6)) <= 1e-7


@pytest.mark.parametrize("z", [0.01, 0.5, 1.7, 10.0, 123.4])
def test_I_against_binet(z):
    assert I_integral(z) == pytest.approx(binet_ref(z), abs=1e-14)


def test_I_domain():
    with pytest.raises(DomainError):
        I_integral(0.0)


def test_stirling_examples():
    assert abs(gamma_stirling_log(1, 1).log_value) <= 1e-10
    assert gamma_stirling_log(3, 4).log_value == pytest.approx(math.log(60), abs=1e-12)
    lw = math.log(gamma_weierstrass(7.3, 2.9).value.real)
    assert gamma_stirling_log(7.3, 2.9).log_value == pytest.approx(lw, abs=1e-9)


@given(st.floats(0.05, 30), st.floats(0.05, 30))
def test_stirling_exact_property(x, z):
    if z + x - 1 <= 0.1 or pole_dist(x, z) < 0.1:
        return
    parts = gamma_stirling_log(x, z)
    direct = math.log(abs(gamma_weierstrass(x, z).value))
    assert abs(parts.log_value - direct) <= 1e-9


def test_stirling_domain():
    for x, z in [(1 + 1j, 2), (-1, 3), (0.3, 0.5)]:
        with pytest.raises(DomainError):
            gamma_stirling(x, z)


def test_stirling_asymptotic_ratio_improves():
    devs = [abs(gamma_xz(x, 2.0).value.real / stirling_asymptotic(x, 2.0) - 1)
            for x in (10, 20, 40, 80)]
    assert all(b < a for a, b in zip(devs, devs[1:]))
    assert devs[0] <= 0.1 and devs[-1] <= 0.013
    for x, d in zip((10, 20, 40, 80), devs):
        assert d <= 1 / x


# dispatcher

def test_dispatcher_examples():
    assert gamma_xz(1, 0.5).value == pytest.approx(SQRT_PI, rel=1e-14)
    assert gamma_xz(4, 1).value == pytest.approx(1, rel=1e-14)
    expected = 1 / ((-1.5) * (-0.5) * 0.5 * 1.5)
    assert gamma_xz(2.5, -3).value == pytest.approx(expected, rel=1e-13)


def test_dispatcher_uses_stirling_for_large_real():
    r = gamma_xz(80.0, 60.5)
    assert r.method == "stirling"
    ref = gamma2_ref(80.0, 60.5)
    assert rel_err(r.value, ref) <= 1e-12 * abs(ref) / max(1, abs(ref)) + 1e-12


@given(complexes(6), complexes(6))
def test_dispatcher_against_reference(x, z):
    if pole_dist(x, z) < 0.1:
        return
    r = gamma_xz(x, z)
    ref = gamma2_ref(x, z)
    assert abs(r.value - ref) <= max(1e-12, 4 * r.err_estimate) * abs(ref)


def test_dispatcher_near_nonpositive_x():
    # Gamma(x, z) -> 0 linearly as x -> -n
    for n in (0, 1, 2):
        vals = [abs(gamma_xz(-n + eps, 0.37 + 0.2j).value) for eps in (1e-4, 1e-6, 1e-8)]
        assert vals[1] / vals[0] == pytest.approx(1e-2, rel=1e-3)
        assert vals[2] / vals[1] == pytest.approx(1e-2, rel=1e-3)


def test_dispatcher_pole_error_carries_residue():
    with pytest.raises(PoleError) as info:
        gamma_xz(2.5, -2.5)
    assert info.value.pole_index == 0
    assert info.value.residue == pytest.approx(residue_at(2.5, 0))


def test_dispatcher_domain_errors():
    with pytest.raises(DomainError):
        gamma_xz(-1, 0.5)
    with pytest.raises(ValueError):
        gamma_xz(1, 1, method="simpson")


def test_overflow_is_an_error():
    with pytest.raises(EvalOverflowError):
        gamma_xz(1.0, 200.0)


def test_err_estimate_honest_under_doubling():
    pts = [(0.3 + 1j, -2.2 + 0.5j), (4.5, 3.3), (-3.7 + 0.2j, 2 - 4j), (1.1, 0.05)]
    for method in ("weierstrass", "euler-limit", "euler-product", "auto"):
        policy = TruncationPolicy(max_terms=500)
        for x, z in pts:
            r1 = gamma_xz(x, z, policy, method)
            r2 = gamma_xz(x, z, policy.with_terms(1000), method)
            assert abs(r2.value - r1.value) <= 4 * r1.err_estimate * abs(r1.value), method


# residues

def test_residue_examples():
    assert residue_at(1, 0) == pytest.approx(-1)
    for x in (2.5, 0.3 + 0.4j, -1.5):
        assert residue_at(x, -1) == pytest.approx(1 / complex(mp.gamma(x)), rel=1e-13)
    # residue of Gamma(x+z-1)/Gamma(x) at z = -(x+1) is Res Gamma(w) at w = -2, over Gamma(x)
    assert residue_at(2.5, 1) == pytest.approx(0.5 / math.gamma(2.5), rel=1e-14)
    assert residue_at(2.5, 1) == pytest.approx(0.37612638903183754, rel=1e-14)


@pytest.mark.parametrize("m", range(-1, 5))
def test_residue_classical_limit(m):
    assert residue_at(1, m) == pytest.approx((-1) ** (m + 1) / math.factorial(m + 1), rel=1e-14)


def test_residue_domain():
    with pytest.raises(DomainError):
        residue_at(-2, 0)
    with pytest.raises(DomainError):
        residue_at(1.5, -2)


# half-integer lattice

def test_half_integer_examples():
    assert half_integer_value(1, 1) == pytest.approx(2 / SQRT_PI, rel=1e-15)
    assert half_integer_value(1, 0) == pytest.approx(2 / SQRT_PI, rel=1e-15)
    # k = 0: the factor 1/(2k-1) = -1 is compensated by the Pochhammer sign
    assert half_integer_value(0, 1) == pytest.approx(1 / SQRT_PI, rel=1e-15)


@pytest.mark.parametrize("k", range(5))
@pytest.mark.parametrize("l", range(5))
def test_half_integer_lattice(k, l):
    if k + l == 0:
        with pytest.raises(ValueError):
            half_integer_value(k, l)
        return
    direct = gamma_xz((2 * k + 1) / 2, (2 * l + 1) / 2).value
    assert rel_err(half_integer_value(k, l), direct) <= 1e-9


# norm on the diagonal

def test_norm_base():
    assert NORM_BASE == pytest.approx(4.31335e-3, rel=1e-5)
    direct = abs(gamma_weierstrass(1j, 1j).value) ** 2
    assert direct == pytest.approx(NORM_BASE, rel=1e-10)


@pytest.mark.parametrize("n", range(4))
def test_norm_recurrence_and_conjugate(n):
    rec = gaussian_norm(n)
    direct = abs(gamma_xz(complex(n, 1), complex(n, 1)).value) ** 2
    conj = abs(gamma_xz(complex(n, -1), complex(n, -1)).value) ** 2
    assert direct == pytest.approx(rec, rel=1e-9)
    assert conj == pytest.approx(direct, rel=1e-12)


def test_norm_closed_form_report():
    rows = gaussian_norm_report(3)
    assert rows[0]["ratio"] == pytest.approx(5.0)
    for row in rows[1:]:
        assert row["ratio"] == pytest.approx(1.0, rel=1e-12)
    assert gaussian_norm_closed_form(2) == pytest.approx(gaussian_norm(2), rel=1e-12)
