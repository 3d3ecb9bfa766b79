"""Analytic period machinery.

A vector ``Q`` in M_p^+ is contracted p times down to ``Q_0``; the cyclic
parameters of ``Q_0`` are then lifted level by level to the dynamical
parameters ``(j_i, zeta_i)``.  ``zeta_p`` is the minimal period of the
sequence generated by ``A(Q)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitstrings import minimal_rotation_period, parse_bits, run_vector, weight
from .contraction import component_decomposition, contract, distance_vector
from .errors import (
    ConstantWeight,
    InvariantViolation,
    NotInMpPlus,
    NotNormalized,
    WeightOutOfBand,
)
from .progression import least_positive_solution, least_progression_parameters, omega
from .runvectors import check_in_M, cyclic_parameters, extension, in_M_p_plus
from . import simulator
from .simulator import RegisterParams

__all__ = [
    "ReductionChain",
    "LevelDetail",
    "DynamicalParams",
    "PeriodReport",
    "reduction_chain",
    "dynamical_parameters",
    "shift_symmetric_state",
    "shift_symmetric_prefix",
    "normalize_parameters",
    "find_main_case_start",
    "minimal_period",
    "analyze_vector",
]


@dataclass(frozen=True)
class ReductionChain:
    """``vectors[0]`` is Q_p and ``vectors[-1]`` is Q_0."""

    vectors: tuple[tuple[int, ...], ...]

    @property
    def p(self) -> int:
        return len(self.vectors) - 1

    def level(self, i: int) -> tuple[int, ...]:
        """Q_i."""
        if not 0 <= i <= self.p:
            raise IndexError(f"level {i} outside 0..{self.p}")
        return self.vectors[self.p - i]


@dataclass(frozen=True)
class LevelDetail:
    """Everything computed at one level; progression fields are None when D(Q_i) is empty or i = 0."""

    level: int
    vector: tuple[int, ...]
    decomposition: str | None
    d: tuple[int, ...] | None
    alpha: int | None
    m_star: int | None
    alpha_star: int | None
    gamma_star: int | None
    x: int | None
    y: int | None
    j: int
    zeta: int


@dataclass(frozen=True)
class DynamicalParams:
    levels: tuple[LevelDetail, ...]  # level 0 first

    @property
    def j(self) -> tuple[int, ...]:
        return tuple(lv.j for lv in self.levels)

    @property
    def zeta(self) -> tuple[int, ...]:
        return tuple(lv.zeta for lv in self.levels)


@dataclass(frozen=True)
class PeriodReport:
    bits: str
    k: int
    p: int
    case: str  # "main", "out-of-band" or "constant-weight"
    minimal_period: int
    k_star: int | None = None
    p_star: int | None = None
    start_shift: int | None = None
    start_bits: str | None = None
    chain: ReductionChain | None = None
    dynamics: DynamicalParams | None = None

    @property
    def n(self) -> int:
        return len(self.bits)

    @property
    def least_even_vector_period(self) -> int | None:
        return self.dynamics.j[-1] if self.dynamics else None


def reduction_chain(vector, p: int) -> ReductionChain:
    q = check_in_M(vector)
    if p < 0 or not in_M_p_plus(q, p):
        raise NotInMpPlus(f"{q} is not in M_{p}^+")
    chain = [q]
    for i in range(p, 0, -1):
        q = contract(q)
        if not in_M_p_plus(q, i - 1):
            raise InvariantViolation(f"contraction left M_{i - 1}^+ at {q}")
        chain.append(q)
    return ReductionChain(tuple(chain))


def dynamical_parameters(chain: ReductionChain) -> DynamicalParams:
    q0 = chain.level(0)
    j, zeta = cyclic_parameters(extension(q0))
    decomp0 = str(component_decomposition(q0)) if q0[0] > 1 else None
    levels = [LevelDetail(0, q0, decomp0, None, None, None, None, None, None, None, j, zeta)]
    for i in range(1, chain.p + 1):
        q = chain.level(i)
        dv = distance_vector(q)
        decomp = str(component_decomposition(q))
        if dv.is_empty:
            zeta += j
            levels.append(LevelDetail(i, q, decomp, (), dv.alpha, None, None, None, None, None, j, zeta))
            continue
        lp = least_progression_parameters(dv.d, dv.alpha)
        x, y = least_positive_solution(lp.alpha_star, zeta)
        j, zeta = omega(lp.alpha_star, lp.gamma_star, j, zeta)
        levels.append(
            LevelDetail(i, q, decomp, dv.d, dv.alpha, lp.m_star, lp.alpha_star, lp.gamma_star, x, y, j, zeta)
        )
    return DynamicalParams(tuple(levels))


@dataclass
class GeneratorState:
    q: list
    s: list
    e: list
    lam: list
    p: int
    J: int


def shift_symmetric_state(vector, p: int, length: int) -> GeneratorState:
    """Run the generator until ``q`` has at least ``length`` entries.

    Bounds on lambda, q, s and e are checked at every index.
    """
    v = check_in_M(vector)
    if p < 0:
        raise ValueError("p must be non-negative")
    J = len(v) - 1
    q = list(v[:J])
    e = [v[J]]
    s = [None]  # s is 1-based
    lam = [p + 1]
    j = 0
    while len(q) < length:
        qj, lj = q[j], lam[j]
        if j % 2 == 0:
            if not 1 <= lj <= p + 1:
                raise InvariantViolation(f"lambda_{j}={lj} outside [1, {p + 1}]")
            sj = min(qj, lj)
            lam.append(lj - sj)
        else:
            if not 0 <= lj <= p:
                raise InvariantViolation(f"lambda_{j}={lj} outside [0, {p}]")
            sj = min(qj, p + 1 - lj)
            lam.append(lj + sj)
        ej = qj - sj
        if qj <= 0 or sj <= 0 or ej < 0:
            raise InvariantViolation(f"non-positive run at index {j + 1}: q={qj}, s={sj}, e={ej}")
        s.append(sj)
        q.append(e[j] + sj)
        e.append(ej)
        j += 1
    return GeneratorState(q, s, e, lam, p, J)


def shift_symmetric_prefix(vector, p: int, length: int) -> tuple[int, ...]:
    """First ``length`` entries of the shift symmetric vector generated by Q.

    >>> shift_symmetric_prefix((1, 5), 0, 4)
    (1, 6, 1, 6)
    """
    return tuple(shift_symmetric_state(vector, p, length).q[:length])


def _band_check(bits: str, params: RegisterParams):
    w = weight(bits)
    if not params.k <= w <= params.upper + 1:
        raise WeightOutOfBand(f"w(A)={w} outside [{params.k}, {params.upper + 1}]")


def normalize_parameters(bits, params: RegisterParams) -> tuple[int, int]:
    """(k*, p*) such that the weights w(A_i) range exactly over [k*, k*+p*+1]."""
    bits = parse_bits(bits)
    _band_check(bits, params)
    w = simulator.weight_trace(bits, params, 2 * params.n).w
    x, y = min(w), max(w)
    if x == y:
        raise ConstantWeight(f"window weight stays at {params.k + x}")
    return params.k + x, y - x - 1


def find_main_case_start(bits, params: RegisterParams) -> int:
    """The shift r chosen by the main-case search; A_r then starts the analysis.

    Assumes (k, p) is already normalized.
    """
    bits = parse_bits(bits)
    n, top = params.n, params.p + 1
    w = simulator.weight_trace(bits, params, 3 * n).w
    s = next((i for i in range(2 * n + 1) if w[i] == top), None)
    if s is None:
        raise NotNormalized(f"w never reaches p+1={top} within 2n steps")
    t = next((i for i in range(s + 1, s + n + 1) if w[i] == 0), None)
    if t is None:
        raise NotNormalized("w never returns to 0 within n steps of its first peak")
    r = max(i for i in range(s, t) if w[i] == top)
    if not all(0 < w[i] < top for i in range(r + 1, t)):
        raise InvariantViolation(f"weights between r={r} and t={t} leave the open band")
    a_r = simulator.generate(bits, params, r + n)[r:]
    if weight(a_r) != params.upper + 1 or a_r[0] != "1" or not in_M_p_plus(run_vector(a_r), params.p):
        raise InvariantViolation(f"A_{r}={a_r} is not a main-case start")
    return r


def minimal_period(bits, params: RegisterParams) -> PeriodReport:
    bits = parse_bits(bits)
    if len(bits) != params.n:
        raise simulator.LengthMismatch(f"bit string has length {len(bits)}, params say n={params.n}")
    k, p = params.k, params.p
    w = weight(bits)
    if w < k or w > k + p + 1:
        # feedback never fires: the orbit is the plain rotation
        return PeriodReport(bits, k, p, "out-of-band", minimal_rotation_period(bits))
    try:
        k_star, p_star = normalize_parameters(bits, params)
    except ConstantWeight:
        period = simulator.orbit_period(bits, params, budget=2 * params.n)
        return PeriodReport(bits, k, p, "constant-weight", period)
    norm = RegisterParams(k_star, p_star, params.n)
    r = find_main_case_start(bits, norm)
    a_r = simulator.generate(bits, norm, r + params.n)[r:]
    chain = reduction_chain(run_vector(a_r), p_star)
    dyn = dynamical_parameters(chain)
    return PeriodReport(bits, k, p, "main", dyn.zeta[-1], k_star, p_star, r, a_r, chain, dyn)


def analyze_vector(vector, p: int) -> tuple[ReductionChain, DynamicalParams]:
    chain = reduction_chain(vector, p)
    return chain, dynamical_parameters(chain)
