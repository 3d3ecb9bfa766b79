import pytest

from symshift.bitstrings import (
    complement,
    format_vector,
    from_run_vector,
    minimal_rotation_period,
    parse_bits,
    parse_vector,
    positive_weight,
    run_vector,
    weight,
)
from symshift.errors import InvalidBits, NotInM, StartsWithZero


def test_parse_bits_strips_spacing():
    assert parse_bits(" 1110 0001\n1 ") == "111000011"


@pytest.mark.parametrize("bad", ["", "   ", "10201", "1a"])
def test_parse_bits_rejects(bad):
    with pytest.raises(InvalidBits):
        parse_bits(bad)


def test_weights():
    assert weight("110011100") == 5
    assert positive_weight("110011100") == 1
    assert complement("1100") == "0011"


@pytest.mark.parametrize(
    "bits, vec",
    [("110011100", (2, 2, 3, 2)), ("111100111", (4, 2, 3, 0)), ("1", (1, 0)), ("10", (1, 1))],
)
def test_run_vector(bits, vec):
    assert run_vector(bits) == vec
    assert from_run_vector(vec) == bits


def test_from_run_vector_examples():
    assert from_run_vector((3, 4, 2, 0)) == "111000011"
    assert from_run_vector((2, 3, 1, 3)) == "110001000"


def test_run_vector_needs_leading_one():
    with pytest.raises(StartsWithZero):
        run_vector("0110")


@pytest.mark.parametrize("vec", [(), (1,), (0, 3), (1, 2, 3), (2, 0, 1, 1), (2, -1)])
def test_from_run_vector_rejects(vec):
    with pytest.raises(NotInM):
        from_run_vector(vec)


@pytest.mark.parametrize("bits, r", [("1010", 2), ("111", 1), ("110110", 3), ("1000", 4)])
def test_minimal_rotation_period(bits, r):
    assert minimal_rotation_period(bits) == r


def test_vector_text_forms():
    assert parse_vector("(3,4,2,4,1,0)") == (3, 4, 2, 4, 1, 0)
    assert parse_vector(" 3, 4,2 ") == (3, 4, 2)
    assert format_vector((1, 5)) == "(1,5)"
    with pytest.raises(ValueError):
        parse_vector("(1,x)")
