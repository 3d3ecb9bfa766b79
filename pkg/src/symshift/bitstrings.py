"""Finite binary strings and their run-length vectors.

A bit string is a plain ``str`` over ``'0'`` and ``'1'`` with ``a_1`` first.
Run vectors are tuples of ints; see :mod:`symshift.runvectors` for the
membership rules.
"""

from __future__ import annotations

from itertools import groupby

from .errors import InvalidBits, NotInM, StartsWithZero

__all__ = [
    "parse_bits",
    "weight",
    "positive_weight",
    "complement",
    "run_vector",
    "from_run_vector",
    "minimal_rotation_period",
    "parse_vector",
    "format_vector",
]

_FLIP = str.maketrans("01", "10")


def parse_bits(text: str) -> str:
    """Validate a bit string, dropping any whitespace inside it."""
    bits = "".join(text.split())
    if not bits:
        raise InvalidBits("bit string must be non-empty")
    if bits.strip("01"):
        raise InvalidBits(f"bit string may only contain 0 and 1: {text!r}")
    return bits


def weight(bits: str) -> int:
    return bits.count("1")


def positive_weight(bits: str) -> int:
    """Number of ones minus number of zeros."""
    return 2 * bits.count("1") - len(bits)


def complement(bits: str) -> str:
    return bits.translate(_FLIP)


def run_vector(bits: str) -> tuple[int, ...]:
    """Even run-length representation of a string that starts with 1.

    The runs alternate ones, zeros, ones, ...; when the string ends in a
    run of ones a trailing 0 is appended so the vector has even length.

    >>> run_vector("110011100")
    (2, 2, 3, 2)
    >>> run_vector("111100111")
    (4, 2, 3, 0)
    """
    if not bits:
        raise InvalidBits("bit string must be non-empty")
    if bits[0] != "1":
        raise StartsWithZero(f"string must start with 1: {bits!r}")
    runs = [len(list(g)) for _, g in groupby(bits)]
    if len(runs) % 2:
        runs.append(0)
    return tuple(runs)


def from_run_vector(vector) -> str:
    """Inverse of :func:`run_vector`: ``1_{v1} 0_{v2} ... 1_{vJ} 0_{vJ+1}``."""
    v = tuple(vector)
    if len(v) < 2 or len(v) % 2 or min(v[:-1]) < 1 or v[-1] < 0:
        raise NotInM(f"not a run vector: {format_vector(v)}")
    return "".join(("1" if i % 2 == 0 else "0") * q for i, q in enumerate(v))


def minimal_rotation_period(bits: str) -> int:
    """Least divisor r of len(bits) such that rotating by r is the identity."""
    n = len(bits)
    for r in range(1, n + 1):
        if n % r == 0 and bits[r:] + bits[:r] == bits:
            return r
    return n  # unreachable for n >= 1


def parse_vector(text: str) -> tuple[int, ...]:
    """Parse ``"(2,2,3,2)"`` or the bare form ``"2,2,3,2"``."""
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    if not body.strip():
        return ()
    try:
        return tuple(int(part) for part in body.split(","))
    except ValueError:
        raise ValueError(f"cannot parse vector: {text!r}") from None


def format_vector(vector) -> str:
    return "(" + ",".join(str(v) for v in vector) + ")"
