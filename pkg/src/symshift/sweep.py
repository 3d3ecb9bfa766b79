"""Exhaustive comparison of analytic periods against simulated cycle lengths."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .engine import minimal_period
from .simulator import RegisterParams, state_periods


@dataclass
class SweepResult:
    n_max: int
    cases: int = 0
    mismatches: list = field(default_factory=list)  # (bits, k, p, analytic, simulated)
    by_case: dict = field(default_factory=dict)
    max_ratio: float = 0.0  # max period / n^3, descriptive only
    max_ratio_at: tuple | None = None
    max_period_by_n: dict = field(default_factory=dict)  # n -> largest simulated period

    def merge(self, other: "SweepResult"):
        self.cases += other.cases
        self.mismatches.extend(other.mismatches)
        for key, v in other.by_case.items():
            self.by_case[key] = self.by_case.get(key, 0) + v
        for n, v in other.max_period_by_n.items():
            self.max_period_by_n[n] = max(v, self.max_period_by_n.get(n, 0))
        if other.max_ratio > self.max_ratio:
            self.max_ratio, self.max_ratio_at = other.max_ratio, other.max_ratio_at


def sweep_params(k: int, p: int, n: int) -> SweepResult:
    params = RegisterParams(k, p, n)
    periods = state_periods(params)
    res = SweepResult(n)
    for state in range(1 << n):
        bits = format(state, f"0{n}b")
        w = bits.count("1")
        if not k <= w <= k + p + 1:
            continue
        rep = minimal_period(bits, params)
        res.cases += 1
        res.by_case[rep.case] = res.by_case.get(rep.case, 0) + 1
        sim = periods[state]
        if rep.minimal_period != sim:
            res.mismatches.append((bits, k, p, rep.minimal_period, sim))
        if sim > res.max_period_by_n.get(n, 0):
            res.max_period_by_n[n] = sim
        ratio = sim / n**3
        if ratio > res.max_ratio:
            res.max_ratio, res.max_ratio_at = ratio, (bits, k, p, sim)
    return res


def _task(args):
    return sweep_params(*args)


def sweep(n_max: int, n_min: int = 1, workers: int = 1) -> SweepResult:
    """Every n in [n_min, n_max], every valid (k, p) and every in-band A."""
    tasks = [(k, p, n) for n in range(max(n_min, 1), n_max + 1) for k in range(n) for p in range(n - k)]
    total = SweepResult(n_max)
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            for res in pool.map(_task, tasks):
                total.merge(res)
    else:
        for t in tasks:
            total.merge(_task(t))
    return total
