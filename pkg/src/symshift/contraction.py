"""Component decomposition, contraction and distance vectors of vectors in M*."""

from __future__ import annotations

from dataclasses import dataclass

from .bitstrings import format_vector
from .errors import IndexOutOfRange
from .runvectors import check_in_M_star, delta, tau

__all__ = [
    "ComponentDecomposition",
    "DistanceVectorWithAlpha",
    "next_index",
    "r_indexes",
    "component_decomposition",
    "contract",
    "contract_via_tau",
    "distance_vector",
]


@dataclass(frozen=True)
class ComponentDecomposition:
    """Proper odd components of V; ``r_indexes`` are the authoritative cut points.

    Component ``m`` (0-based) spans positions ``r_indexes[m]+1 .. r_indexes[m+1]``.
    """

    vector: tuple[int, ...]
    r_indexes: tuple[int, ...]

    @property
    def components(self) -> tuple[tuple[int, ...], ...]:
        r = self.r_indexes
        return tuple(self.vector[r[m] : r[m + 1]] for m in range(len(r) - 1))

    def __str__(self) -> str:
        return "(" + ",".join(format_vector(g) for g in self.components) + ")"


@dataclass(frozen=True)
class DistanceVectorWithAlpha:
    d: tuple[int, ...]
    alpha: int
    c_indexes: tuple[int, ...]  # c_1..c_gamma; c_0 = 0 is implicit

    @property
    def gamma(self) -> int:
        return len(self.d)

    @property
    def is_empty(self) -> bool:
        return not self.d


def _next_index(v: tuple[int, ...], r: int) -> int:
    J = len(v) - 1
    t = 0
    while r + 2 * (t + 1) <= J and v[r + 2 * (t + 1) - 1] == 1:
        t += 1
    return r + 2 * t + 1


def next_index(vector, r: int) -> int:
    """End position of the unique proper odd component starting at ``v_{r+1}``."""
    v = check_in_M_star(vector)
    if not 0 <= r <= len(v) - 1:
        raise IndexOutOfRange(f"r={r} outside 0..{len(v) - 1}")
    return _next_index(v, r)


def r_indexes(vector) -> tuple[int, ...]:
    v = check_in_M_star(vector)
    r = [0]
    while r[-1] < len(v):
        r.append(_next_index(v, r[-1]))
    return tuple(r)


def component_decomposition(vector) -> ComponentDecomposition:
    v = check_in_M_star(vector)
    return ComponentDecomposition(v, r_indexes(v))


def contract(vector) -> tuple[int, ...]:
    """pi(V) = (delta(G_1), ..., delta(G_I), delta(G_{I+1}) + 1).

    >>> contract((3, 4, 2, 4, 1, 0))
    (2, 3, 1, 3)
    """
    comps = component_decomposition(vector).components
    out = [delta(g) for g in comps]
    out[-1] += 1
    return tuple(out)


def contract_via_tau(vector) -> tuple[int, ...]:
    """pi(V) from the r-indexes and the distance function directly."""
    v = check_in_M_star(vector)
    r = r_indexes(v)
    out = [tau(v, r[j + 1]) - tau(v, r[j]) for j in range(len(r) - 1)]
    out[-1] += 1
    return tuple(out)


def distance_vector(vector) -> DistanceVectorWithAlpha:
    """D(V) = (tau(c_1), ..., tau(c_gamma)) together with alpha = delta(V) + 1.

    c_{i+1} is the least position > c_i + 1 (and <= J) holding a 1.  D(V) is
    empty when no entry ``v_i`` with ``1 < i <= J`` equals 1.
    """
    v = check_in_M_star(vector)
    J = len(v) - 1
    alpha = delta(v) + 1
    if all(x > 1 for x in v[1:J]):
        return DistanceVectorWithAlpha((), alpha, ())
    cs = []
    c = 0
    while True:
        nxt = next((i for i in range(c + 2, J + 1) if v[i - 1] == 1), None)
        if nxt is None:
            break
        cs.append(nxt)
        c = nxt
    return DistanceVectorWithAlpha(tuple(tau(v, c) for c in cs), alpha, tuple(cs))
