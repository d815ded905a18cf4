"""Richardson extrapolation and finite-difference derivatives."""
from __future__ import annotations

from math import comb, factorial


def richardson(values, ratio=2.0, power=1):
    """Extrapolate a sequence computed at steps h, h/ratio, h/ratio**2, ...

    The error is assumed to expand in powers of h**power. Returns
    ``(estimate, error)`` where ``error`` is the change made by the last
    elimination, a conservative bound for the estimate's error.
    """
    row = list(values)
    if not row:
        raise ValueError("need at least one value")
    if len(row) == 1:
        return row[0], float("inf")
    prev_best = row[-1]
    k = 0
    while len(row) > 1:
        k += 1
        f = ratio ** (power * k)
        prev_best = row[-1]
        row = [(f * row[i + 1] - row[i]) / (f - 1.0) for i in range(len(row) - 1)]
    return row[0], abs(row[0] - prev_best)


def central_difference(f, x0, order, h):
    """m-th derivative of ``f`` at ``x0`` by the central m-th difference.

    Odd orders use half-integer offsets, so the stencil is always symmetric
    and the error expands in even powers of ``h``.
    """
    total = 0.0
    for j in range(order + 1):
        total += (-1) ** j * comb(order, j) * f(x0 + (order / 2 - j) * h)
    return total / h**order


def taylor_coefficient(f, x0, order, h=0.2, levels=4):
    """f^(m)(x0)/m! from step-halved central differences + Richardson."""
    if order == 0:
        return f(x0), 0.0
    vals = [central_difference(f, x0, order, h / 2**i) for i in range(levels)]
    est, err = richardson(vals, ratio=2.0, power=2)
    return est / factorial(order), err / factorial(order)
