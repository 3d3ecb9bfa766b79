import pytest

from symshift.errors import NotADivisor
from symshift.progression import (
    is_progression_coefficient,
    least_positive_solution,
    least_progression_parameters,
    omega,
)


def test_example_six_term():
    d = (2, 4, 8, 10, 14, 16)
    assert not is_progression_coefficient(d, 18, 6)
    assert is_progression_coefficient(d, 18, 3)
    assert least_progression_parameters(d, 18) == (3, 6, 2)


def test_example_three_term():
    assert is_progression_coefficient((1, 6, 11), 15, 3)
    assert least_progression_parameters((1, 6, 11), 15) == (3, 5, 1)


@pytest.mark.parametrize("d, alpha", [((10,), 1008), ((4,), 1003), ((9,), 9), ((3,), 6)])
def test_single_entry_is_trivial(d, alpha):
    assert least_progression_parameters(d, alpha) == (1, alpha, 1)


def test_not_a_divisor():
    with pytest.raises(NotADivisor):
        is_progression_coefficient((1, 6, 11), 15, 5)


def test_bad_distance_vector():
    with pytest.raises(ValueError):
        least_progression_parameters((), 5)
    with pytest.raises(ValueError):
        least_progression_parameters((3, 2), 5)


def test_least_positive_solution():
    assert least_positive_solution(1008, 1013032) == (126629, 126)
    assert least_positive_solution(6, 7) == (7, 6)
    assert least_positive_solution(5, 8) == (8, 5)


def test_omega():
    assert omega(6, 1, 2, 7) == (26, 68)
    assert omega(9, 1, 26, 68) == (370, 982)
    assert omega(1003, 1, 4, 1004) == (6020, 1013032)
    assert omega(1008, 1, 6020, 1013032) == (1011778, 128653810)
    assert omega(5, 1, 4, 8) == (36, 76)
