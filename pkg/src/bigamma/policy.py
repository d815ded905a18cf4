"""Shared value types and exceptions."""
from __future__ import annotations

import os
from dataclasses import dataclass, field, replace

EPS = 2.220446049250313e-16
OVERFLOW_LIMIT = 1e300
ZERO_TOL = 1e-12


class DomainError(ValueError):
    """Argument outside the domain of the requested function."""


class PoleError(DomainError):
    """Evaluation point is a pole.

    ``pole_index`` is m with z = -(x + m); ``residue`` is the residue there
    when known.
    """

    def __init__(self, message, pole_index=None, residue=None):
        super().__init__(message)
        self.pole_index = pole_index
        self.residue = residue


class EvalOverflowError(OverflowError):
    """Result magnitude exceeds the representable range (|value| > 1e300)."""


ACCELERATIONS = ("none", "richardson")


@dataclass(frozen=True)
class TruncationPolicy:
    """How infinite products and series are cut off.

    ``tail_order`` is the number of Hurwitz-zeta tail-correction terms added
    after ``max_terms`` explicit terms.
    """

    max_terms: int = 10_000
    tail_order: int = 6
    target_rel_tol: float = 1e-12
    acceleration: str = "richardson"

    def __post_init__(self):
        if int(self.max_terms) != self.max_terms or self.max_terms < 8:
            raise ValueError(f"max_terms must be an integer >= 8, got {self.max_terms!r}")
        if int(self.tail_order) != self.tail_order or self.tail_order < 0:
            raise ValueError(f"tail_order must be an integer >= 0, got {self.tail_order!r}")
        if not self.target_rel_tol >= 1e-15:
            raise ValueError(f"target_rel_tol must be >= 1e-15, got {self.target_rel_tol!r}")
        if self.acceleration not in ACCELERATIONS:
            raise ValueError(f"acceleration must be one of {ACCELERATIONS}")

    def with_terms(self, max_terms):
        return replace(self, max_terms=int(max_terms))


def default_policy() -> TruncationPolicy:
    """Default policy; ``BIGAMMA_MAX_TERMS`` overrides the term count."""
    env = os.environ.get("BIGAMMA_MAX_TERMS")
    if env:
        return TruncationPolicy(max_terms=int(env))
    return TruncationPolicy()


def resolve(policy):
    return default_policy() if policy is None else policy


@dataclass(frozen=True)
class EvalResult:
    """A computed value with an a posteriori relative error bound."""

    value: complex
    err_estimate: float
    method: str
    terms_used: int = 0
    extra: dict = field(default_factory=dict, compare=False, repr=False)


def check_overflow(value, what="value"):
    if abs(value) > OVERFLOW_LIMIT:
        raise EvalOverflowError(f"{what} overflows: |{what}| > {OVERFLOW_LIMIT:g}")
    return value


def nearest_int(w, tol=ZERO_TOL):
    """Return the integer within ``tol`` (scaled) of ``w``, else None."""
    w = complex(w)
    n = round(w.real)
    if abs(w - n) <= tol * max(1.0, abs(w)):
        return int(n)
    return None


def is_nonpositive_integer(x, tol=ZERO_TOL):
    n = nearest_int(x, tol)
    return n is not None and n <= 0
