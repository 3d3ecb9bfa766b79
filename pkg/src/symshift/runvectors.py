"""Calculus on run vectors.

A run vector ``(v_1, ..., v_J, v_{J+1})`` has odd ``J``, ``v_i >= 1`` for
``i <= J`` and ``v_{J+1} >= 0``.  Positions are 1-based in every docstring
and in every index argument (``tau(V, r)`` with ``0 <= r <= J+1``).
"""

from __future__ import annotations

from typing import NamedTuple

from .bitstrings import format_vector
from .errors import IndexOutOfRange, NotInM, NotInMStar, OddLength

__all__ = [
    "CyclicParams",
    "is_in_M",
    "is_in_M_star",
    "check_in_M",
    "check_in_M_star",
    "delta",
    "tau",
    "extension",
    "alternating_params",
    "least_admissible_index",
    "in_M_p_plus",
    "in_M_p",
    "psi",
    "cyclic_parameters",
]


class CyclicParams(NamedTuple):
    j: int
    zeta: int


def is_in_M(vector) -> bool:
    v = tuple(vector)
    return (
        len(v) >= 2
        and len(v) % 2 == 0
        and all(isinstance(x, int) for x in v)
        and min(v[:-1]) >= 1
        and v[-1] >= 0
    )


def is_in_M_star(vector) -> bool:
    return is_in_M(vector) and vector[0] > 1


def check_in_M(vector) -> tuple[int, ...]:
    v = tuple(vector)
    if not is_in_M(v):
        raise NotInM(f"{format_vector(v)} is not in M")
    return v


def check_in_M_star(vector) -> tuple[int, ...]:
    v = check_in_M(vector)
    if v[0] <= 1:
        raise NotInMStar(f"{format_vector(v)} is not in M* (first entry must exceed 1)")
    return v


def delta(vector) -> int:
    """Sum of the entries minus their number; 0 for the empty vector."""
    return sum(vector) - len(vector)


def tau(vector, r: int) -> int:
    """Distance function: ``delta`` of the length-``r`` prefix."""
    if not 0 <= r <= len(vector):
        raise IndexOutOfRange(f"r={r} outside 0..{len(vector)}")
    return sum(vector[:r]) - r


def extension(vector) -> tuple[int, ...]:
    """The vector with its last entry incremented."""
    v = check_in_M(vector)
    return v[:-1] + (v[-1] + 1,)


def alternating_params(vector) -> tuple[int, ...]:
    """Signed prefix sums ``rho_0 .. rho_{J+1}``: add odd positions, subtract even."""
    v = check_in_M(vector)
    rho = [0]
    for i, x in enumerate(v):
        rho.append(rho[-1] + x if i % 2 == 0 else rho[-1] - x)
    return tuple(rho)


def least_admissible_index(vector, p: int) -> int | None:
    """Least odd ``t <= J`` with ``rho_1..rho_t > 0`` and ``rho_t >= p+1``.

    ``(v_1, ..., v_t)`` is then the admissible start vector.  Returns None
    when ``p`` is not admissible for the vector.
    """
    rho = alternating_params(vector)
    J = len(rho) - 2
    for t in range(1, J + 1):
        if rho[t] <= 0:
            return None
        if t % 2 == 1 and rho[t] >= p + 1:
            return t
    return None


def in_M_p_plus(vector, p: int) -> bool:
    return least_admissible_index(vector, p) is not None


def in_M_p(vector, p: int) -> bool:
    v = check_in_M(vector)
    return sum(v[0:-1:2]) >= p + 1


def psi(vector, j: int = 1) -> tuple[int, ...]:
    """Rotate left by ``j`` places."""
    v = tuple(vector)
    j %= len(v)
    return v[j:] + v[:j]


def cyclic_parameters(vector) -> CyclicParams:
    """Least even ``j`` with ``psi^j(V) = V``, and ``v_1 + ... + v_j``.

    >>> cyclic_parameters((2, 1, 1, 4, 2, 1, 1, 4))
    CyclicParams(j=4, zeta=8)
    """
    v = tuple(vector)
    r = len(v)
    if r == 0 or r % 2:
        raise OddLength(f"cyclic parameters need a positive even length, got {r}")
    for j in range(2, r + 1, 2):
        if r % j == 0 and psi(v, j) == v:
            return CyclicParams(j, sum(v[:j]))
    raise AssertionError("psi^r is the identity")  # pragma: no cover
