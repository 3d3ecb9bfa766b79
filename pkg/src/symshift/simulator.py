"""Brute-force oracle: the register map theta and everything built on iterating it.

theta(a_1 ... a_n) = a_2 ... a_{n+1}, where a_{n+1} is the complement of a_1
when k <= a_2 + ... + a_n <= k+p and a_1 itself otherwise.

The inner loops live in a compiled module when it was built, and in
``_pykernels`` otherwise; ``KERNEL`` names the one in use.
"""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass

from .bitstrings import parse_bits
from .errors import (
    InvalidParams,
    IterationBudgetExceeded,
    LengthMismatch,
    StateSpaceTooLarge,
)

if os.environ.get("SYMSHIFT_PURE_PYTHON"):
    from . import _pykernels as _k
else:
    try:
        from . import _ckernels as _k
    except ImportError:
        from . import _pykernels as _k

KERNEL = _k.IMPLEMENTATION

__all__ = [
    "KERNEL",
    "RegisterParams",
    "WeightTrace",
    "step",
    "generate",
    "orbit_period",
    "weight_trace",
    "cycle_structure",
    "state_periods",
]

_TO01 = bytes.maketrans(b"01", b"\x00\x01")
_FROM01 = bytes.maketrans(b"\x00\x01", b"01")
_MAX_BUDGET = 2**62


def _raw(bits: str) -> bytes:
    return bits.encode("ascii").translate(_TO01)


def _text(raw: bytes) -> str:
    return raw.translate(_FROM01).decode("ascii")


@dataclass(frozen=True)
class RegisterParams:
    k: int
    p: int
    n: int

    def __post_init__(self):
        if not all(isinstance(x, int) for x in (self.k, self.p, self.n)):
            raise InvalidParams("k, p and n must be integers")
        if not 0 <= self.k <= self.k + self.p < self.n:
            raise InvalidParams(f"need 0 <= k <= k+p < n, got k={self.k}, p={self.p}, n={self.n}")

    @property
    def upper(self) -> int:
        return self.k + self.p


@dataclass(frozen=True)
class WeightTrace:
    """``w[r] = w(A_r) - k`` and ``w_mod[r] = p + 1 - w[r]`` for r = 0..length."""

    w: tuple[int, ...]
    w_mod: tuple[int, ...]
    n: int

    def b(self, r: int) -> int:
        """w_r + w_{r+n}."""
        return self.w[r] + self.w[r + self.n]


def _check(bits, params: RegisterParams) -> str:
    bits = parse_bits(bits)
    if len(bits) != params.n:
        raise LengthMismatch(f"bit string has length {len(bits)}, params say n={params.n}")
    return bits


def step(bits, params: RegisterParams) -> str:
    bits = _check(bits, params)
    w = bits.count("1", 1)
    flip = params.k <= w <= params.upper
    new = "1" if (bits[0] == "1") != flip else "0"
    return bits[1:] + new


def generate(bits, params: RegisterParams, length: int) -> str:
    """Prefix a_1 .. a_length of the sequence generated from A."""
    bits = _check(bits, params)
    if length < params.n:
        raise LengthMismatch(f"length {length} is shorter than n={params.n}")
    return _text(_k.generate(_raw(bits), params.k, params.p, length))


def orbit_period(bits, params: RegisterParams, budget: int | None = None) -> int:
    """Least r >= 1 with theta^r(A) == A.

    ``budget`` caps the number of steps (default 2^n, which is always enough).
    """
    bits = _check(bits, params)
    if budget is None:
        budget = 2**params.n
    budget = min(budget, _MAX_BUDGET)
    r = _k.orbit_period(_raw(bits), params.k, params.p, budget)
    if r < 0:
        raise IterationBudgetExceeded(f"no return to the start state within {budget} steps")
    return r


def weight_trace(bits, params: RegisterParams, length: int) -> WeightTrace:
    bits = _check(bits, params)
    if length < 0:
        raise LengthMismatch("length must be non-negative")
    w = tuple(_k.weight_trace(_raw(bits), params.k, params.p, length))
    return WeightTrace(w, tuple(params.p + 1 - x for x in w), params.n)


def state_periods(params: RegisterParams, max_n: int = 20):
    """Cycle length of every state, indexed by the state read as a binary number."""
    if params.n > max_n:
        raise StateSpaceTooLarge(f"n={params.n} exceeds the enumeration bound {max_n}")
    return _k.cycle_lengths(params.n, params.k, params.p)


def cycle_structure(params: RegisterParams, max_n: int = 20) -> Counter:
    """Map cycle length -> number of theta-cycles of that length."""
    per_state = Counter(state_periods(params, max_n))
    return Counter({length: count // length for length, count in per_state.items()})
