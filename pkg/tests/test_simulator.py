import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strategies import register
from symshift.errors import InvalidParams, IterationBudgetExceeded, LengthMismatch, StateSpaceTooLarge
from symshift.simulator import (
    RegisterParams,
    cycle_structure,
    generate,
    orbit_period,
    state_periods,
    step,
    weight_trace,
)


def naive_step(bits, k, p):
    w = bits[1:].count("1")
    new = bits[0] if not k <= w <= k + p else "01"[bits[0] == "0"]
    return bits[1:] + new


@pytest.mark.parametrize("k, p, n", [(-1, 0, 3), (0, -1, 3), (2, 1, 3), (0, 3, 3), (1, 5, 4)])
def test_params_validated(k, p, n):
    with pytest.raises(InvalidParams):
        RegisterParams(k, p, n)


def test_step_examples():
    assert step("100000", RegisterParams(0, 0, 6)) == "000000"
    assert step("111", RegisterParams(0, 2, 3)) == "110"
    # window weight 3 > k+p: plain rotation
    assert step("0111", RegisterParams(0, 1, 4)) == "1110"
    with pytest.raises(LengthMismatch):
        step("11", RegisterParams(0, 1, 3))


def test_generate_examples():
    assert generate("100000", RegisterParams(0, 0, 6), 14) == "10000001000000"
    assert generate("110", RegisterParams(0, 2, 3), 12) == "110001110001"
    assert generate("110", RegisterParams(0, 2, 3), 3) == "110"
    with pytest.raises(LengthMismatch):
        generate("110", RegisterParams(0, 2, 3), 2)


@pytest.mark.parametrize(
    "bits, k, p, period",
    [("100000", 0, 0, 7), ("110100001101000", 5, 0, 8), ("111000011000", 2, 2, 94), ("110001000", 1, 1, 68)],
)
def test_orbit_period(bits, k, p, period):
    assert orbit_period(bits, RegisterParams(k, p, len(bits))) == period


def test_orbit_budget():
    with pytest.raises(IterationBudgetExceeded):
        orbit_period("111000011000", RegisterParams(2, 2, 12), budget=93)
    assert orbit_period("111000011000", RegisterParams(2, 2, 12), budget=94) == 94


def test_weight_trace_example():
    tr = weight_trace("110", RegisterParams(0, 2, 3), 6)
    assert tr.w == (2, 1, 0, 1, 2, 3, 2)
    assert tr.w_mod == (1, 2, 3, 2, 1, 0, 1)
    assert tr.b(0) == 2 + 1
    assert weight_trace("110", RegisterParams(0, 2, 3), 0).w == (2,)


def test_cycle_structure_small():
    hist = cycle_structure(RegisterParams(0, 0, 6))
    assert sum(length * c for length, c in hist.items()) == 64
    assert state_periods(RegisterParams(0, 0, 6))[0b100000] == 7
    with pytest.raises(StateSpaceTooLarge):
        cycle_structure(RegisterParams(0, 0, 21))


@given(register(max_n=14), st.integers(0, 60))
def test_generate_matches_naive_steps(case, extra):
    bits, prm = case
    out = generate(bits, prm, prm.n + extra)
    state = bits
    for i in range(extra):
        state = naive_step(state, prm.k, prm.p)
        assert out[i + 1 : i + 1 + prm.n] == state


@given(register(max_n=12, in_band=True), st.integers(1, 40))
def test_weight_trace_matches_recount(case, length):
    bits, prm = case
    tr = weight_trace(bits, prm, length)
    seq = generate(bits, prm, length + prm.n)
    assert tr.w == tuple(seq[r : r + prm.n].count("1") - prm.k for r in range(length + 1))
    # in band the shifted weight stays in [0, p+1]
    assert all(0 <= w <= prm.p + 1 for w in tr.w)


@given(register(max_n=12, in_band=True), st.data())
def test_run_block_behaviour(case, data):
    bits, prm = case
    n, p = prm.n, prm.p
    seq = generate(bits, prm, 6 * n)
    w = weight_trace(bits, prm, 5 * n).w
    r = data.draw(st.integers(0, 3 * n))
    c = seq[r]
    q = 1
    while r + q < 4 * n and seq[r + q] == c:
        q += 1
    out = seq[r + n : r + n + q]
    if c == "1":
        s = min(q, w[r])
        assert out == "0" * s + "1" * (q - s)
        assert w[r + q] == w[r] - s
    else:
        s = min(q, p + 1 - w[r])
        assert out == "1" * s + "0" * (q - s)
        assert w[r + q] == w[r] + s


@pytest.mark.parametrize("n", range(1, 9))
def test_theta_bijective(n):
    for k in range(n):
        for p in range(n - k):
            prm = RegisterParams(k, p, n)
            images = {step(format(s, f"0{n}b"), prm) for s in range(1 << n)}
            assert len(images) == 1 << n
            hist = cycle_structure(prm)
            assert sum(length * c for length, c in hist.items()) == 1 << n


def test_state_periods_agree_with_orbit_period():
    prm = RegisterParams(1, 2, 7)
    per = state_periods(prm)
    for s in range(128):
        assert per[s] == orbit_period(format(s, "07b"), prm)


def test_period_start_conditions():
    # at a period r of a main-case sequence: a_r = 0, a_{r+1} = 1, w(A_r) = k+p+1
    bits, prm = "11100001100001", RegisterParams(3, 2, 14)
    seq = generate(bits, prm, 982 + 14)
    assert seq[981] == "0" and seq[982] == "1"
    assert seq[982 : 982 + 14].count("1") == prm.k + prm.p + 1
    assert seq[982:] == bits
