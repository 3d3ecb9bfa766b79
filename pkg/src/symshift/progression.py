"""Progression coefficients of distance vectors and the integer combiner."""

from __future__ import annotations

from math import gcd
from typing import NamedTuple

from .errors import NotADivisor

__all__ = [
    "LeastProgressionParams",
    "is_progression_coefficient",
    "least_progression_parameters",
    "least_positive_solution",
    "omega",
]


class LeastProgressionParams(NamedTuple):
    m_star: int
    alpha_star: int
    gamma_star: int


def _check_distance(d, alpha: int) -> tuple[int, ...]:
    d = tuple(d)
    if alpha <= 0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    if d and not (0 < d[0] and all(a <= b for a, b in zip(d, d[1:])) and d[-1] <= alpha):
        raise ValueError(f"need 0 < d_1 <= ... <= d_gamma <= alpha, got {d} with alpha={alpha}")
    return d


def is_progression_coefficient(d, alpha: int, m: int) -> bool:
    """True iff shifting ``E = (D, D + alpha)`` by gamma/m places adds alpha/m."""
    d = _check_distance(d, alpha)
    gamma = len(d)
    if m <= 0 or gcd(alpha, gamma) % m:
        raise NotADivisor(f"m={m} does not divide gcd({alpha}, {gamma})")
    beta, r = alpha // m, gamma // m
    e = d + tuple(x + alpha for x in d)
    return all(e[r + i] == d[i] + beta for i in range(gamma))


def least_progression_parameters(d, alpha: int) -> LeastProgressionParams:
    """Largest progression coefficient m*, with alpha/m* and gamma/m*.

    Divisors of gcd(alpha, gamma) are tried from the largest down; m = 1
    always qualifies.

    >>> least_progression_parameters((1, 6, 11), 15)
    LeastProgressionParams(m_star=3, alpha_star=5, gamma_star=1)
    """
    d = _check_distance(d, alpha)
    if not d:
        raise ValueError("distance vector must be non-empty")
    g = gcd(alpha, len(d))
    for m in range(g, 0, -1):
        if g % m == 0 and is_progression_coefficient(d, alpha, m):
            return LeastProgressionParams(m, alpha // m, len(d) // m)
    raise AssertionError("m = 1 is always a progression coefficient")  # pragma: no cover


def least_positive_solution(alpha: int, beta: int) -> tuple[int, int]:
    """Least positive ``(x, y)`` with ``x * alpha == y * beta``."""
    if alpha <= 0 or beta <= 0:
        raise ValueError("alpha and beta must be positive")
    g = gcd(alpha, beta)
    return beta // g, alpha // g


def omega(alpha_star: int, gamma_star: int, j_star: int, zeta_star: int) -> tuple[int, int]:
    """Lift (least even vector period, period) one level up.

    With (x, y) the least positive solution of ``x*alpha_star = y*zeta_star``,
    returns ``r = 2*x*gamma_star + y*j_star`` and ``zeta = y*zeta_star + r``.
    """
    if min(alpha_star, gamma_star, j_star, zeta_star) <= 0:
        raise ValueError("omega arguments must be positive")
    x, y = least_positive_solution(alpha_star, zeta_star)
    r = 2 * x * gamma_star + y * j_star
    return r, y * zeta_star + r
