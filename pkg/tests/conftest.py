import mpmath as mp
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

mp.mp.dps = 30

settings.register_profile(
    "bigamma", deadline=None, max_examples=60, derandomize=True,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much])
settings.load_profile("bigamma")


def gamma2_ref(x, z):
    """Independent reference: Gamma(x, z) = Gamma(x+z-1) / Gamma(x).

    Follows from the product definition by the Weierstrass product of the
    classical gamma function; evaluated in 30-digit arithmetic.
    """
    x = mp.mpc(x)
    z = mp.mpc(z)
    return complex(mp.gamma(x + z - 1) / mp.gamma(x))


def rel_err(a, b):
    return abs(complex(a) - complex(b)) / max(1.0, abs(complex(b)))


def dist_int(v):
    v = complex(v)
    return abs(v - round(v.real))


def pole_dist(x, z):
    w = -(complex(z) + complex(x))
    m = max(-1, round(w.real))
    xn = min(0, round(complex(x).real))
    return min(abs(w - m), abs(complex(x) - xn))


def complexes(r=6.0):
    return st.builds(complex,
                     st.floats(-r, r, allow_nan=False, allow_infinity=False),
                     st.floats(-r, r, allow_nan=False, allow_infinity=False))


@pytest.fixture
def ref():
    return gamma2_ref


# acceptance lines are collected here and echoed in the terminal summary
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
