"""Identity registry and grid-based verification harness.

Every entry samples a deterministic grid (seeded per identity), computes a
residual at each point and compares the worst residual with a tolerance.
Residuals are relative to max(1, |lhs|, |rhs|) unless stated otherwise.

Entries with role ``"variant"`` evaluate an alternative reading of a
statement (differing in a sign or a factor). They are reported but do not
affect the aggregate exit status; their ``counterpart`` is the reading
that should hold.
"""
from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

from . import series
from .core import digamma, euler_gamma_x, gamma_classical, pochhammer, stieltjes_zeroth
from .gamma2 import (
    I_integral,
    NORM_BASE,
    gamma_euler_limit,
    gamma_euler_product,
    gamma_stirling_log,
    gamma_weierstrass,
    gamma_xz,
    gaussian_norm,
    gaussian_norm_closed_form,
    half_integer_value,
    residue_at,
    stirling_asymptotic,
)
from .policy import DomainError, resolve
from .product import (
    g_shift_x_residual,
    g_shift_z_residual,
    g_sin_residual,
    sin2_product_residual,
)

MARGIN = 0.1
BOX = 6.0


class UnknownIdentityError(KeyError):
    pass


@dataclass(frozen=True)
class IdentityDescriptor:
    id: str
    statement: str
    arity: str
    domain_constraints: str
    tolerance: float
    operations: Tuple[str, ...]
    role: str = "identity"            # "identity" or "variant"
    counterpart: Optional[str] = None
    default_points: int = 50
    note: str = ""


@dataclass
class IdentityReport:
    id: str
    grid_spec: dict
    residuals: List[Tuple[dict, float]]
    max_residual: float
    passed: bool
    variant_notes: str = ""
    tolerance: float = 0.0
    role: str = "identity"

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "grid_spec": dict(self.grid_spec),
            "residuals": [[p, _num_out(r)] for p, r in self.residuals],
            "max_residual": _num_out(self.max_residual),
            "pass": self.passed,
            "variant_notes": self.variant_notes,
            "tolerance": self.tolerance,
            "role": self.role,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "IdentityReport":
        return cls(
            id=d["id"],
            grid_spec=dict(d["grid_spec"]),
            residuals=[(p, _num_in(r)) for p, r in d["residuals"]],
            max_residual=_num_in(d["max_residual"]),
            passed=bool(d["pass"]),
            variant_notes=d.get("variant_notes", ""),
            tolerance=d.get("tolerance", 0.0),
            role=d.get("role", "identity"),
        )


def _num_out(v):
    # JSON has no infinity
    return v if math.isfinite(v) else "inf"


def _num_in(v):
    return math.inf if v == "inf" else float(v)


def _point_out(p: dict) -> dict:
    out = {}
    for k, v in p.items():
        if isinstance(v, complex):
            out[k] = [v.real, v.imag]
        else:
            out[k] = v
    return out


# --- grid hygiene ----------------------------------------------------------

def _dist_nonpos(v) -> float:
    v = complex(v)
    n = min(0, round(v.real))
    return abs(v - n)


def _dist_int(v) -> float:
    v = complex(v)
    return abs(v - round(v.real))


def _dist_pole(x, z) -> float:
    """Distance of (x, z) from the singular set of Gamma(x, .)."""
    w = -(complex(z) + complex(x))
    m = max(-1, round(w.real))
    return min(abs(w - m), _dist_nonpos(x))


def _clear(items, margin=MARGIN) -> bool:
    for item in items:
        kind = item[0]
        if kind == "gamma":
            d = _dist_pole(item[1], item[2])
        elif kind == "nonpos":
            d = _dist_nonpos(item[1])
        elif kind == "int":
            d = _dist_int(item[1])
        elif kind == "zero":
            d = abs(complex(item[1]))
        else:
            raise ValueError(kind)
        if d < margin:
            return False
    return True


def _c(rng, r=BOX):
    while True:
        w = complex(rng.uniform(-r, r), rng.uniform(-r, r))
        if abs(w) <= r:
            return w


def _c_right(rng, lo=0.1, hi=BOX, im=3.0):
    return complex(rng.uniform(lo, hi), rng.uniform(-im, im))


def _disc(rng, r):
    while True:
        w = complex(rng.uniform(-r, r), rng.uniform(-r, r))
        if abs(w) < r:
            return w


def _rel(lhs, rhs):
    return abs(lhs - rhs) / max(1.0, abs(lhs), abs(rhs))


# --- entries ---------------------------------------------------------------

@dataclass
class _Entry:
    desc: IdentityDescriptor
    residual: Callable
    draw: Optional[Callable] = None
    items: Optional[Callable] = None
    fixed: Optional[Callable] = None
    grid_note: str = ""


_REGISTRY: Dict[str, _Entry] = {}


def _register(desc, residual, draw=None, items=None, fixed=None, grid_note=""):
    if desc.id in _REGISTRY:
        raise ValueError(f"duplicate identity id {desc.id}")
    _REGISTRY[desc.id] = _Entry(desc, residual, draw, items, fixed, grid_note)


def _G(x, z, policy):
    return gamma_xz(x, z, policy).value


def _xz_draw(rng):
    return {"x": _c(rng), "z": _c(rng)}


# gamma(x)

def _res_gamma_rec(p, policy):
    x = p["x"]
    lhs = euler_gamma_x(x + 1, policy).value
    rhs = euler_gamma_x(x, policy).value - 1.0 / x
    return _rel(lhs, rhs)


_register(
    IdentityDescriptor("GAMMA-X-REC", "gamma(x+1) = gamma(x) - 1/x", "x",
                       "x, x+1 outside Z_0^-, |x| <= 20", 1e-10,
                       ("euler_gamma_x",), default_points=200),
    _res_gamma_rec,
    draw=lambda rng: {"x": _c(rng, 20.0)},
    items=lambda p: [("nonpos", p["x"]), ("nonpos", p["x"] + 1)],
)


def _res_gamma_digamma(p, policy):
    x = p["x"]
    return _rel(euler_gamma_x(x, policy).value, -digamma(x))


_register(
    IdentityDescriptor("GAMMA-X-DIGAMMA", "gamma(x) = -psi(x)", "x", "Re x > 0",
                       1e-9, ("euler_gamma_x", "digamma"), default_points=200),
    _res_gamma_digamma,
    draw=lambda rng: {"x": _c_right(rng)},
    items=lambda p: [],
)


def _res_stieltjes(p, policy):
    x = p["x"]
    return _rel(stieltjes_zeroth(x, policy).value, euler_gamma_x(x, policy).value)


_register(
    IdentityDescriptor("GAMMA-X-STIELTJES", "gamma_0(x) = gamma(x)", "x",
                       "x outside Z_0^-", 1e-9, ("stieltjes_zeroth", "euler_gamma_x")),
    _res_stieltjes,
    draw=lambda rng: {"x": _c(rng)},
    items=lambda p: [("nonpos", p["x"])],
)

# G(x, z)

_register(
    IdentityDescriptor("G-SHIFT-Z", "G(x,z-1) = (z+x-1) e^{gamma(x)} G(x,z)", "x,z",
                       "x outside Z_0^-", 1e-9, ("G", "euler_gamma_x"),
                       default_points=200),
    lambda p, policy: g_shift_z_residual(p["x"], p["z"], policy),
    draw=_xz_draw,
    items=lambda p: [("nonpos", p["x"])],
)

_register(
    IdentityDescriptor("G-SHIFT-X", "G(x-1,z) = (z+x-1)/(x-1) e^{-z/(x-1)} G(x,z)",
                       "x,z", "x, x-1 outside Z_0^-", 1e-9, ("G",),
                       default_points=200),
    lambda p, policy: g_shift_x_residual(p["x"], p["z"], policy),
    draw=_xz_draw,
    items=lambda p: [("nonpos", p["x"]), ("nonpos", p["x"] - 1)],
)

_SIN_DOMAIN = "x not an integer"

_register(
    IdentityDescriptor("G-SIN-proof",
                       "G(x,-z) G(-x,z) = (z-x) sin pi(z-x) / (x sin pi x) "
                       "e^{pi z cot(pi x) + z/x}",
                       "x,z", _SIN_DOMAIN, 1e-8, ("G",)),
    lambda p, policy: g_sin_residual(p["x"], p["z"], policy, "proof"),
    draw=lambda rng: {"x": _c(rng, 3.0), "z": _c(rng, 3.0)},
    items=lambda p: [("int", p["x"])],
)

_register(
    IdentityDescriptor("G-SIN-literal",
                       "G(x,-z) G(-x,z) = (z-x) sin pi(z-x) / (x sin pi x) "
                       "e^{z cot(pi x) + z/x}",
                       "x,z", _SIN_DOMAIN, 1e-8, ("G",), role="variant",
                       counterpart="G-SIN-proof",
                       note="exponent without the factor pi in front of the cotangent"),
    lambda p, policy: g_sin_residual(p["x"], p["z"], policy, "literal"),
    draw=lambda rng: {"x": _c(rng, 3.0), "z": _c(rng, 3.0)},
    items=lambda p: [("int", p["x"]), ("zero", p["z"])],
)

_register(
    IdentityDescriptor("SIN2-PRODUCT",
                       "prod (1-z^2/(n+x)^2)(1-z^2/(n-x)^2) = "
                       "(x/sin pi x)^2 (sin^2 pi z - sin^2 pi x)/(z^2-x^2)",
                       "x,z", "x not an integer, z != +-x", 1e-8, ("sin2_product",)),
    lambda p, policy: sin2_product_residual(p["x"], p["z"], policy),
    draw=lambda rng: {"x": _c(rng, 3.0), "z": _c(rng, 3.0)},
    items=lambda p: [("int", p["x"]), ("zero", p["z"] - p["x"]), ("zero", p["z"] + p["x"])],
)

# Gamma(x, z): reduction, functional equations, special values

_register(
    IdentityDescriptor("CLASSICAL", "Gamma(1,z) = Gamma(z)", "z", "z off Z_0^-", 1e-10,
                       ("gamma_xz", "gamma_classical")),
    lambda p, policy: _rel(_G(1.0, p["z"], policy), gamma_classical(p["z"])),
    draw=lambda rng: {"z": _c(rng)},
    items=lambda p: [("gamma", 1.0, p["z"])],
)

_register(
    IdentityDescriptor("FE-z", "Gamma(x,z+1) = (z+x-1) Gamma(x,z)", "x,z",
                       "clean at (x,z), (x,z+1)", 1e-9, ("gamma_xz",), default_points=200),
    lambda p, policy: _rel(_G(p["x"], p["z"] + 1, policy),
                           (p["z"] + p["x"] - 1) * _G(p["x"], p["z"], policy)),
    draw=_xz_draw,
    items=lambda p: [("gamma", p["x"], p["z"]), ("gamma", p["x"], p["z"] + 1)],
)

_register(
    IdentityDescriptor("FE-x", "Gamma(x+1,z) = (z+x-1)/x Gamma(x,z)", "x,z",
                       "clean at (x,z), (x+1,z)", 1e-9, ("gamma_xz",), default_points=200),
    lambda p, policy: _rel(_G(p["x"] + 1, p["z"], policy),
                           (p["z"] + p["x"] - 1) / p["x"] * _G(p["x"], p["z"], policy)),
    draw=_xz_draw,
    items=lambda p: [("gamma", p["x"], p["z"]), ("gamma", p["x"] + 1, p["z"])],
)

_register(
    IdentityDescriptor("FE-xz", "Gamma(x+1,z+1) = (z+x-1)(z+x)/x Gamma(x,z)", "x,z",
                       "clean at (x,z), (x+1,z+1)", 1e-9, ("gamma_xz",),
                       default_points=200),
    lambda p, policy: _rel(_G(p["x"] + 1, p["z"] + 1, policy),
                           (p["z"] + p["x"] - 1) * (p["z"] + p["x"]) / p["x"]
                           * _G(p["x"], p["z"], policy)),
    draw=_xz_draw,
    items=lambda p: [("gamma", p["x"], p["z"]), ("gamma", p["x"] + 1, p["z"] + 1)],
)


def _res_special(p, policy):
    x, n, z = p["x"], p["n"], p["z"]
    checks = [
        _rel(_G(x, 1.0, policy), 1.0),
        _rel(_G(x, 0.0, policy), 1.0 / (x - 1)),
        _rel(_G(x, float(n), policy), pochhammer(x, n - 1)),
        _rel(_G(x, float(-n), policy), 1.0 / pochhammer(x - n - 1, n + 1)),
        _rel(_G(float(n), z, policy),
             pochhammer(z, n - 1) / math.factorial(n - 1) * gamma_classical(z)),
    ]
    return max(checks)


def _draw_special(rng):
    return {"x": _c_right(rng), "n": rng.randint(2, 6), "z": _c(rng)}


_register(
    IdentityDescriptor("SPECIAL-INT",
                       "Gamma(x,1)=1; Gamma(x,0)=1/(x-1); Gamma(x,n)=(x)_{n-1}; "
                       "Gamma(x,-n)=1/(x-n-1)_{n+1}; Gamma(n,z)=(z)_{n-1}/(n-1)! Gamma(z)",
                       "x,n,z", "Re x > 0, x off the integers, n in 2..6", 1e-10,
                       ("gamma_xz", "pochhammer", "gamma_classical"), default_points=20),
    _res_special,
    draw=_draw_special,
    items=lambda p: [("int", p["x"]), ("gamma", float(p["n"]), p["z"])],
)


def _res_reflect_a(p, policy):
    x, z = p["x"], p["z"]
    lhs = (_G(x, 1 - z, policy) * _G(1 - x, z, policy)
           * (z - x) * cmath.sin(math.pi * (z - x)))
    rhs = -cmath.sin(math.pi * x)
    return _rel(lhs, rhs)


_register(
    IdentityDescriptor("REFLECT-A",
                       "Gamma(x,1-z) Gamma(1-x,z) = -sin pi x / ((z-x) sin pi(z-x))",
                       "x,z", "x not an integer", 1e-8, ("gamma_xz",), default_points=100),
    _res_reflect_a,
    draw=_xz_draw,
    items=lambda p: [("int", p["x"]), ("gamma", p["x"], 1 - p["z"]),
                     ("gamma", 1 - p["x"], p["z"])],
)


def _reflect_b(s, x, lhs):
    rhs = -x * cmath.sin(math.pi * x) / ((s**3 - s) * cmath.sin(math.pi * s))
    return _rel(lhs, rhs)


_register(
    IdentityDescriptor("REFLECT-B-proof",
                       "Gamma(-x,z) Gamma(x,-z) = -x sin pi x / "
                       "(((z-x)^3-(z-x)) sin pi(z-x))",
                       "x,z", "x and z-x not integers", 1e-8, ("gamma_xz",),
                       default_points=100),
    lambda p, policy: _reflect_b(p["z"] - p["x"], p["x"],
                                 _G(-p["x"], p["z"], policy) * _G(p["x"], -p["z"], policy)),
    draw=_xz_draw,
    items=lambda p: [("int", p["x"]), ("int", p["z"] - p["x"]),
                     ("gamma", -p["x"], p["z"]), ("gamma", p["x"], -p["z"])],
)

_register(
    IdentityDescriptor("REFLECT-B-literal",
                       "Gamma(x,z) Gamma(-x,-z) = -x sin pi x / "
                       "(((z+x)^3-(z+x)) sin pi(z+x))",
                       "x,z", "x and z+x not integers", 1e-8, ("gamma_xz",),
                       role="variant", counterpart="REFLECT-B-proof", default_points=100,
                       note="this reading is the other one with x -> -x, so both hold"),
    lambda p, policy: _reflect_b(p["z"] + p["x"], p["x"],
                                 _G(p["x"], p["z"], policy) * _G(-p["x"], -p["z"], policy)),
    draw=_xz_draw,
    items=lambda p: [("int", p["x"]), ("int", p["z"] + p["x"]),
                     ("gamma", p["x"], p["z"]), ("gamma", -p["x"], -p["z"])],
)


_LIMIT_RADII = (1e-5, 1e-6)
_DIRECTIONS = (1.0, 1j, -1.0, -1j)


def _res_limit_neg(p, policy):
    """Gamma(-n+eps, z)/eps must settle to a finite limit as eps -> 0."""
    n, z = p["n"], p["z"]
    worst = 0.0
    for d in _DIRECTIONS:
        q = [_G(-n + r * d, z, policy) / (r * d) for r in _LIMIT_RADII]
        worst = max(worst, abs(q[1] - q[0]) / max(1.0, abs(q[1])))
    return worst


_register(
    IdentityDescriptor("LIMIT-NEG", "Gamma(x,z) -> 0 linearly as x -> -n", "n,z",
                       "n in {0,1,2}, z off the integers", 1e-4, ("gamma_xz",),
                       default_points=12,
                       note="residual: relative change of Gamma(-n+eps,z)/eps between "
                            "|eps| = 1e-5 and 1e-6, four directions"),
    _res_limit_neg,
    draw=lambda rng: {"n": rng.randint(0, 2), "z": _c(rng, 4.0)},
    items=lambda p: [("int", p["z"])],
)


def _res_norm(p, policy):
    n = p["n"]
    direct = abs(_G(complex(n, 1), complex(n, 1), policy)) ** 2
    ref = NORM_BASE if n == 0 else gaussian_norm(n)
    return abs(direct - ref) / ref


_register(
    IdentityDescriptor("NORM", "|Gamma(n+i,n+i)|^2 from e^pi/(10(e^{2pi}+1)) by recurrence",
                       "n", "n in 0..3", 1e-10, ("gamma_xz", "gaussian_norm")),
    _res_norm,
    fixed=lambda: [{"n": n} for n in range(4)],
    grid_note="n = 0..3",
)


def _res_norm_closed(p, policy):
    n = p["n"]
    return abs(gaussian_norm_closed_form(n) / gaussian_norm(n) - 1.0)


_register(
    IdentityDescriptor("NORM-CLOSED",
                       "|Gamma(n+i,n+i)|^2 = 5 prod_{k<=2n-2}(4+k^2) / prod_{k<n}(1+k^2) "
                       "* e^pi/(10(e^{2pi}+1))",
                       "n", "n in 1..3", 1e-10, ("gaussian_norm_closed_form",),
                       role="variant", counterpart="NORM",
                       note="the closed product holds for n >= 1; at n = 0 it gives 5x "
                            "the base value, so the base case is excluded"),
    _res_norm_closed,
    fixed=lambda: [{"n": n} for n in range(1, 4)],
    grid_note="n = 1..3",
)


def _res_conj(p, policy):
    x, z = p["x"], p["z"]
    a = _G(x.conjugate(), z.conjugate(), policy)
    b = _G(x, z, policy).conjugate()
    return _rel(a, b)


_register(
    IdentityDescriptor("CONJ", "Gamma(conj x, conj z) = conj Gamma(x,z)", "x,z",
                       "clean at (x,z)", 1e-12, ("gamma_xz",), default_points=100),
    _res_conj,
    draw=_xz_draw,
    items=lambda p: [("gamma", p["x"], p["z"])],
)


def _cross(method_a, method_b):
    def res(p, policy):
        return _rel(method_a(p["x"], p["z"], policy).value,
                    method_b(p["x"], p["z"], policy).value)
    return res


def _draw_euler(rng):
    return {"x": _c(rng, 4.0), "z": _c(rng, 4.0)}


def _euler_items(p):
    return [("gamma", p["x"], p["z"]), ("zero", p["x"] + p["z"])]


_register(
    IdentityDescriptor("EULER-LIMIT",
                       "Gamma(x,z) = lim n^z (x)_n / (z+x-1)_{n+1}", "x,z",
                       "clean at (x,z)", 1e-8, ("gamma_euler_limit", "gamma_weierstrass")),
    _cross(gamma_euler_limit, gamma_weierstrass),
    draw=_draw_euler, items=_euler_items,
)

_register(
    IdentityDescriptor("EULER-PRODUCT",
                       "Gamma(x,z) = x/((z+x-1)(z+x)) prod (1+1/n)^z (1+z/(x+n))^{-1}",
                       "x,z", "clean at (x,z), z+x != 0", 1e-8,
                       ("gamma_euler_product", "gamma_weierstrass")),
    _cross(gamma_euler_product, gamma_weierstrass),
    draw=_draw_euler, items=_euler_items,
)

_register(
    IdentityDescriptor("EULER-AB", "limit form = product form", "x,z",
                       "clean at (x,z), z+x != 0", 1e-8,
                       ("gamma_euler_limit", "gamma_euler_product")),
    _cross(gamma_euler_limit, gamma_euler_product),
    draw=_draw_euler, items=_euler_items,
)


def _res_dup(p, policy):
    x, z = p["x"], p["z"]
    lhs = _G(x, z, policy) * _G(x + z, -z, policy) * (x - 1) * (z + x - 1)
    return _rel(lhs, 1.0)


_register(
    IdentityDescriptor("DUP", "Gamma(x,z) Gamma(x+z,-z) (x-1)(z+x-1) = 1", "x,z",
                       "clean at (x,z), (x+z,-z)", 1e-9, ("gamma_xz",), default_points=100),
    _res_dup,
    draw=_xz_draw,
    items=lambda p: [("gamma", p["x"], p["z"]), ("gamma", p["x"] + p["z"], -p["z"])],
)


def _res_half(p, policy):
    k, l = p["k"], p["l"]
    direct = _G((2 * k + 1) / 2, (2 * l + 1) / 2, policy)
    return _rel(direct, half_integer_value(k, l))


_register(
    IdentityDescriptor("HALF-INT", "closed form of Gamma((2k+1)/2, (2l+1)/2)", "k,l",
                       "0 <= k,l <= 4, k+l >= 1", 1e-9,
                       ("half_integer_value", "gamma_xz")),
    _res_half,
    fixed=lambda: [{"k": k, "l": l} for k in range(5) for l in range(5) if k + l >= 1],
    grid_note="0 <= k, l <= 4, k + l >= 1",
)

_RESIDUE_RADII = (1e-2, 1e-3, 1e-4, 1e-5)


def numerical_residue(x, m, r, policy=None):
    """Mean of eps Gamma(x, -(x+m)+eps) over eps = r, ir, -r, -ir.

    Averaging over the four directions cancels the eps, eps^2 and eps^3 terms
    of the Laurent expansion.
    """
    pole = -(complex(x) + m)
    vals = [r * d * gamma_xz(x, pole + r * d, policy).value for d in _DIRECTIONS]
    return sum(vals) / 4


def _res_residue(p, policy):
    x, m = p["x"], p["m"]
    ref = residue_at(x, m)
    worst = 0.0
    if complex(x) == 1:
        classical = (-1) ** (m + 1) / math.factorial(m + 1)
        worst = abs(ref - classical) / max(1.0, abs(classical))
    for r in _RESIDUE_RADII:
        est = numerical_residue(x, m, r, policy)
        worst = max(worst, abs(est - ref) / max(1.0, abs(ref)))
    return worst


_register(
    IdentityDescriptor("RESIDUE",
                       "Res_{z=-(x+m)} Gamma(x,z) = (-1)^{m+1} (x)_{2m+1} / "
                       "((m+1)! Gamma(x+2m+1)), m >= 0; 1/((x-1)Gamma(x-1)), m = -1",
                       "x,m", "x in {1, 1.3, 2.5, 0.7+0.2i}, m in -1..2", 1e-6,
                       ("residue_at", "gamma_xz")),
    _res_residue,
    fixed=lambda: [{"x": x, "m": m} for x in (1.0, 1.3, 2.5, 0.7 + 0.2j)
                   for m in range(-1, 3)],
    grid_note="x in {1, 1.3, 2.5, 0.7+0.2i}, m in -1..2, radii 1e-2..1e-5",
)

# multiplication formulas


def multiplication_constant(x, z, policy=None, n=2):
    """n^{nz} prod_k Gamma(x, z+k/n) / (n Gamma(n(x-1)+1, nz))."""
    num = complex(n) ** (n * complex(z))
    for k in range(n):
        num *= gamma_xz(x, z + k / n, policy).value
    return num / (n * gamma_xz(n * (x - 1) + 1, n * z, policy).value)


def mult_const_check(x, z1, z2, policy=None, n=2) -> float:
    """|f(x,z1) - f(x,z2)| / max(1, |f(x,z1)|) for the multiplication constant f."""
    f1 = multiplication_constant(x, z1, policy, n)
    f2 = multiplication_constant(x, z2, policy, n)
    return abs(f1 - f2) / max(1.0, abs(f1))


def _mult_items(x, z, n=2):
    out = [("gamma", x, z + k / n) for k in range(n)]
    out.append(("gamma", n * (x - 1) + 1, n * z))
    return out


_register(
    IdentityDescriptor("MULT-CONST",
                       "2^{2z} Gamma(x,z) Gamma(x,z+1/2) / (2 Gamma(2x-1,2z)) "
                       "does not depend on z",
                       "x,z1,z2", "all factors clean", 1e-8, ("gamma_xz",),
                       default_points=20),
    lambda p, policy: mult_const_check(p["x"], p["z1"], p["z2"], policy),
    draw=lambda rng: {"x": _c(rng, 4.0), "z1": _c(rng, 4.0), "z2": _c(rng, 4.0)},
    items=lambda p: _mult_items(p["x"], p["z1"]) + _mult_items(p["x"], p["z2"]),
)


def gauss2_sides(x, z, policy=None):
    x = complex(x)
    z = complex(z)
    lhs = (gamma_xz(x, z, policy).value * gamma_xz(x, z + 0.5, policy).value
           * gamma_xz(1 - x, z, policy).value * gamma_xz(1 - x, z + 0.5, policy).value)
    rhs = (2.0 ** (2 - 4 * z) * gamma_xz(2 * x - 1, 2 * z, policy).value
           * gamma_xz(1 - 2 * x, 2 * z, policy).value
           * cmath.tan(math.pi * x) / (x - 0.5))
    return lhs, rhs


def gauss2_check(x, z, policy=None) -> float:
    """Relative residual of the four-factor product against the two-factor side."""
    lhs, rhs = gauss2_sides(x, z, policy)
    return _rel(lhs, rhs)


def _gauss_items(p):
    x, z = p["x"], p["z"]
    return [("int", x), ("int", x - 0.5),
            ("gamma", x, z), ("gamma", x, z + 0.5), ("gamma", 1 - x, z),
            ("gamma", 1 - x, z + 0.5), ("gamma", 2 * x - 1, 2 * z),
            ("gamma", 1 - 2 * x, 2 * z)]


_register(
    IdentityDescriptor("GAUSS-2",
                       "Gamma(x,z)Gamma(x,z+1/2)Gamma(1-x,z)Gamma(1-x,z+1/2) = "
                       "2^{2-4z} Gamma(2x-1,2z) Gamma(1-2x,2z) tan(pi x)/(x-1/2)",
                       "x,z", "x off Z and Z+1/2, all six factors clean", 1e-8,
                       ("gamma_xz",)),
    lambda p, policy: gauss2_check(p["x"], p["z"], policy),
    draw=lambda rng: {"x": _c(rng, 3.0), "z": _c(rng, 3.0)},
    items=_gauss_items,
)

# Stirling-type formula


def _res_stirling_exact(p, policy):
    x, z = p["x"], p["z"]
    log_direct = math.log(abs(gamma_weierstrass(x, z, policy).value))
    return abs(log_direct - gamma_stirling_log(x, z, policy).log_value)


def _draw_real_pair(rng):
    while True:
        x = rng.uniform(0.05, 12.0)
        z = rng.uniform(0.05, 12.0)
        if z + x - 1 > 0.1:
            return {"x": x, "z": z}


_register(
    IdentityDescriptor("STIRLING-EXACT",
                       "log Gamma(x,z) = (z+x-3/2)log(z+x-1) - z + 1 - (x-1/2)log x "
                       "+ I(x) - I(z+x-1)",
                       "x,z", "x, z > 0, z+x-1 > 0.1 (absolute residual)", 1e-9,
                       ("gamma_stirling_log", "I_integral", "gamma_weierstrass")),
    _res_stirling_exact,
    draw=_draw_real_pair,
    items=lambda p: [("gamma", p["x"], p["z"])],
)

_ASYMPT_X = (10.0, 20.0, 40.0, 80.0)


def _scaled_deviation(devs, scales):
    """max dev*scale, or inf when dev does not decrease along the sequence."""
    for a, b in zip(devs, devs[1:]):
        if not b < a:
            return math.inf
    return max(d * s for d, s in zip(devs, scales))


def stirling_x_deviations(z=2.0, xs=_ASYMPT_X, policy=None):
    """|Gamma(x,z)/((z+x-1)^{z+x-3/2} e^{1-z} x^{1/2-x}) - 1| for each x."""
    return [abs(gamma_xz(x, z, policy).value.real / stirling_asymptotic(x, z) - 1.0)
            for x in xs]


_register(
    IdentityDescriptor("STIRLING-ASYMPT",
                       "Gamma(x,z) ~ (z+x-1)^{z+x-3/2} e^{1-z} x^{1/2-x} as x -> oo",
                       "x", "z = 2, x in {10,20,40,80}", 1.0, ("gamma_xz",),
                       note="residual: max x |ratio - 1|, infinite unless |ratio - 1| "
                            "decreases"),
    lambda p, policy: _scaled_deviation(stirling_x_deviations(p["z"], _ASYMPT_X, policy),
                                        _ASYMPT_X),
    fixed=lambda: [{"z": 2.0}],
    grid_note="z = 2, x in {10, 20, 40, 80}",
)

_ASYMPT_Z = (10.0, 20.0, 40.0, 80.0, 160.0)


def stirling_z_deviations(x, zs=_ASYMPT_Z, variant="multiplicative", policy=None):
    """Deviation from the large-z shape.

    multiplicative: Gamma / (shape * e^{I(x)}) - 1
    additive:       Gamma / (shape + I(x)) - 1 (the additive reading)
    """
    ix = I_integral(x, policy)
    out = []
    for z in zs:
        g = gamma_xz(x, z, policy).value.real
        shape = stirling_asymptotic(x, z)
        ref = shape * math.exp(ix) if variant == "multiplicative" else shape + ix
        out.append(abs(g / ref - 1.0))
    return out


_register(
    IdentityDescriptor("STIRLING-Z",
                       "Gamma(x,z) ~ (z+x-1)^{z+x-3/2} e^{1-z} x^{1/2-x} e^{I(x)} as z -> oo",
                       "x", "x in {0.5,1,2,3}, z in {10,...,160}", 1.0,
                       ("gamma_xz", "I_integral"),
                       note="residual: max z |ratio - 1|, infinite unless decreasing"),
    lambda p, policy: _scaled_deviation(
        stirling_z_deviations(p["x"], _ASYMPT_Z, "multiplicative", policy), _ASYMPT_Z),
    fixed=lambda: [{"x": x} for x in (0.5, 1.0, 2.0, 3.0)],
    grid_note="x in {0.5, 1, 2, 3}, z in {10, 20, 40, 80, 160}",
)

_register(
    IdentityDescriptor("STIRLING-Z-literal",
                       "Gamma(x,z) ~ (z+x-1)^{z+x-3/2} e^{1-z} x^{1/2-x} + I(x) as z -> oo",
                       "x", "x in {0.5,1,2,3}, z in {10,...,160}", 1.0,
                       ("gamma_xz", "I_integral"), role="variant", counterpart="STIRLING-Z",
                       note="I(x) added outside the exponential; the ratio tends to "
                            "e^{I(x)} instead of 1"),
    lambda p, policy: _scaled_deviation(
        stirling_z_deviations(p["x"], _ASYMPT_Z, "additive", policy), _ASYMPT_Z),
    fixed=lambda: [{"x": x} for x in (0.5, 1.0, 2.0, 3.0)],
    grid_note="x in {0.5, 1, 2, 3}, z in {10, 20, 40, 80, 160}",
)

# series


def _draw_series_z(rng):
    x = _c_right(rng, 0.2, 5.0, 2.0)
    r = min(1.0, abs(x))
    return {"x": x, "z": _disc(rng, r / 2)}


def _res_series_z(p, policy):
    x, z = p["x"], p["z"]
    lhs = cmath.exp(series.log_series_in_z(x, z, 32, policy))
    return _rel(lhs, _G(x, z + 1, policy))


_register(
    IdentityDescriptor("SERIES-Z",
                       "log Gamma(x,z+1) = -z gamma(x) - sum (-1)^{m-1}/m zeta(m,x) z^m",
                       "x,z", "Re x > 0, |z| < min(1,|x|)/2, order 32", 1e-10,
                       ("log_series_in_z", "gamma_xz")),
    _res_series_z,
    draw=_draw_series_z,
    items=lambda p: [],
)


def _coeff_residual(which, variant):
    build = series.coeffs_a if which == "a" else series.coeffs_b

    def res(p, policy):
        anchor = p["anchor"]
        coefs = build(anchor, 6, variant, policy).coefficients
        ref, _ = series.fd_coefficients(which, anchor, 6, policy)
        return max(abs(c - r) / max(1.0, abs(r)) for c, r in zip(coefs, ref))
    return res


def _draw_anchor_a(rng):
    return {"anchor": _c_right(rng, 2.0, 4.0, 1.0)}


def _draw_anchor_b(rng):
    return {"anchor": _c_right(rng, 1.0, 4.0, 1.0)}


_A_DOMAIN = "anchor x with Re x in [2,4]; m <= 6"
_B_DOMAIN = "anchor z with Re z in [1,4]; m <= 6"

_register(
    IdentityDescriptor("COEFF-A",
                       "m a_m = -gamma(x) a_{m-1} + sum_{k<=m-2} (-1)^{m-k} zeta(m-k,x) a_k",
                       "x", _A_DOMAIN, 1e-7, ("coeffs_a", "gamma_xz"), default_points=4),
    _coeff_residual("a", "derived"), draw=_draw_anchor_a, items=lambda p: [],
)

_register(
    IdentityDescriptor("COEFF-A-literal",
                       "m a_m = -gamma(x) a_{m-1} + sum_{k<=m-2} (-1)^m zeta(m-k,x) a_k",
                       "x", _A_DOMAIN, 1e-7, ("coeffs_a", "gamma_xz"), role="variant",
                       counterpart="COEFF-A", default_points=4,
                       note="sign (-1)^m instead of (-1)^{m-k}; first differs at m = 3"),
    _coeff_residual("a", "literal"), draw=_draw_anchor_a, items=lambda p: [],
)


def _draw_series_x(rng):
    z = _c_right(rng, 0.2, 4.0, 1.0)
    r = min(1.0, abs(z + 1))
    return {"x": 1 + _disc(rng, r / 2), "z": z}


def _series_x_residual(variant):
    def res(p, policy):
        x, z = p["x"], p["z"]
        lhs = cmath.exp(series.log_series_in_x(x, z, 32, variant, policy))
        return _rel(lhs, _G(x + 1, z, policy))
    return res


_register(
    IdentityDescriptor("SERIES-X",
                       "log Gamma(x+1,z) = log Gamma(1+z) + (psi(z+1)+gamma-1)(x-1) + "
                       "sum_{m>=2} (-1)^m/m d_m(z) (x-1)^m",
                       "x,z", "Re z > 0, |x-1| < min(1,|z+1|)/2, order 32", 1e-8,
                       ("log_series_in_x", "gamma_xz")),
    _series_x_residual("derived"), draw=_draw_series_x, items=lambda p: [],
)

_register(
    IdentityDescriptor("SERIES-X-literal",
                       "linear coefficient sum_{n>=2} z/(n(n+z)) in place of "
                       "psi(z+1)+gamma-1",
                       "x,z", "Re z > 0, |x-1| < min(1,|z+1|)/2, order 32", 1e-8,
                       ("log_series_in_x", "gamma_xz"), role="variant",
                       counterpart="SERIES-X",
                       note="the linear term c(z) omits -(x-1)/(z+1) coming from "
                            "log(z+x)"),
    _series_x_residual("literal"), draw=_draw_series_x, items=lambda p: [],
)

_register(
    IdentityDescriptor("COEFF-B",
                       "m b_m = (psi(z+1)+gamma-1) b_{m-1} + sum_{k<=m-2} (-1)^{m-k} "
                       "d_{m-k}(z) b_k",
                       "z", _B_DOMAIN, 1e-7, ("coeffs_b", "gamma_xz"), default_points=4),
    _coeff_residual("b", "derived"), draw=_draw_anchor_b, items=lambda p: [],
)

_register(
    IdentityDescriptor("COEFF-B-proof",
                       "m b_m = c(z) b_{m-1} + sum_{k<=m-2} (-1)^{m-k} d_{m-k}(z) b_k, "
                       "c(z) = sum_{n>=2} z/(n(n+z))",
                       "z", _B_DOMAIN, 1e-7, ("coeffs_b", "gamma_xz"), role="variant",
                       counterpart="COEFF-B", default_points=4,
                       note="inherits the missing -1/(z+1) in the linear coefficient"),
    _coeff_residual("b", "proof"), draw=_draw_anchor_b, items=lambda p: [],
)

_register(
    IdentityDescriptor("COEFF-B-literal",
                       "b_m = b_{m-1}/m + c(z) + (1/m) sum_{k<=m-2} (-1)^{m-k} "
                       "d_{m-k}(z) b_k",
                       "z", _B_DOMAIN, 1e-7, ("coeffs_b", "gamma_xz"), role="variant",
                       counterpart="COEFF-B", default_points=4,
                       note="c(z) added instead of multiplying b_{m-1}"),
    _coeff_residual("b", "literal"), draw=_draw_anchor_b, items=lambda p: [],
)


# --- harness ---------------------------------------------------------------

def registry() -> List[IdentityDescriptor]:
    """All identity descriptors in fixed order."""
    return [e.desc for e in _REGISTRY.values()]


def _entry(identity_id) -> _Entry:
    try:
        return _REGISTRY[identity_id]
    except KeyError:
        raise UnknownIdentityError(identity_id) from None


def sample_grid(identity_id, seed: int = 42, n_points: Optional[int] = None) -> List[dict]:
    """Deterministic sample points for one identity.

    Random grids draw from a generator seeded by (seed, id) and reject points
    within MARGIN of a pole of any factor. Fixed lattices ignore both
    ``seed`` and ``n_points``.
    """
    e = _entry(identity_id)
    if e.fixed is not None:
        return e.fixed()
    n = e.desc.default_points if n_points is None else int(n_points)
    rng = random.Random(f"{seed}:{identity_id}")
    points = []
    attempts = 0
    while len(points) < n:
        attempts += 1
        if attempts > 1000 * max(n, 1):
            raise RuntimeError(f"could not place {n} clean points for {identity_id}")
        p = e.draw(rng)
        if _clear(e.items(p)):
            points.append(p)
    return points


def verify_identity(identity_id, grid_seed: int = 42, n_points: Optional[int] = None,
                    policy=None, _with_counterpart=True) -> IdentityReport:
    """Evaluate one identity on its grid and compare with its tolerance."""
    e = _entry(identity_id)
    policy = resolve(policy)
    points = sample_grid(identity_id, grid_seed, n_points)
    residuals = []
    failures = 0
    for p in points:
        try:
            r = float(e.residual(p, policy))
        except (DomainError, OverflowError, ZeroDivisionError):
            r = math.inf
            failures += 1
        if math.isnan(r):
            r = math.inf
        residuals.append((_point_out(p), r))
    max_res = max((r for _, r in residuals), default=0.0)
    d = e.desc
    notes = []
    if d.note:
        notes.append(d.note)
    if failures:
        notes.append(f"{failures} point(s) raised during evaluation")
    if d.counterpart and _with_counterpart:
        other = verify_identity(d.counterpart, grid_seed, n_points, policy, False)
        notes.append(f"{d.counterpart}: {'pass' if other.passed else 'FAIL'} "
                     f"(max residual {other.max_residual:.3g})")
    grid_spec = {"seed": grid_seed, "n_points": len(points),
                 "kind": "fixed" if e.fixed is not None else "random",
                 "margin": MARGIN}
    if e.grid_note:
        grid_spec["lattice"] = e.grid_note
    return IdentityReport(
        id=d.id,
        grid_spec=grid_spec,
        residuals=residuals,
        max_residual=max_res,
        passed=max_res <= d.tolerance,
        variant_notes="; ".join(notes),
        tolerance=d.tolerance,
        role=d.role,
    )


def run_all(seed: int = 42, policy=None, ids=None, n_points=None) -> List[IdentityReport]:
    """Verify every registry entry (or ``ids``) in registry order."""
    wanted = None if ids is None else set(ids)
    if wanted is not None:
        for i in wanted:
            _entry(i)
    reports = []
    for d in registry():
        if wanted is None or d.id in wanted:
            reports.append(verify_identity(d.id, seed, n_points, policy))
    return reports


def overall_pass(reports) -> bool:
    """True when every non-variant report passes."""
    return all(r.passed for r in reports if r.role != "variant")
