"""Text and JSON rendering of period reports and reduction chains."""

from __future__ import annotations

import json

from .bitstrings import format_vector
from .engine import DynamicalParams, LevelDetail, PeriodReport, ReductionChain

__all__ = ["level_to_dict", "report_to_dict", "report_from_dict", "report_to_json", "report_from_json", "render_text", "render_chain"]

SCHEMA = "symshift.period-report/1"


def level_to_dict(lv: LevelDetail) -> dict:
    return {
        "level": lv.level,
        "vector": list(lv.vector),
        "decomposition": lv.decomposition,
        "d": None if lv.d is None else list(lv.d),
        "alpha": lv.alpha,
        "m_star": lv.m_star,
        "alpha_star": lv.alpha_star,
        "gamma_star": lv.gamma_star,
        "x": lv.x,
        "y": lv.y,
        "j": lv.j,
        "zeta": lv.zeta,
    }


def level_from_dict(d: dict) -> LevelDetail:
    return LevelDetail(
        d["level"],
        tuple(d["vector"]),
        d["decomposition"],
        None if d["d"] is None else tuple(d["d"]),
        d["alpha"],
        d["m_star"],
        d["alpha_star"],
        d["gamma_star"],
        d["x"],
        d["y"],
        d["j"],
        d["zeta"],
    )


def report_to_dict(rep: PeriodReport) -> dict:
    out = {
        "schema": SCHEMA,
        "input": {"bits": rep.bits, "k": rep.k, "p": rep.p, "n": rep.n},
        "case": rep.case,
        "normalized": None if rep.k_star is None else {"k": rep.k_star, "p": rep.p_star},
        "start_shift": rep.start_shift,
        "start_bits": rep.start_bits,
        "chain": None if rep.chain is None else [list(v) for v in rep.chain.vectors],
        "levels": None if rep.dynamics is None else [level_to_dict(lv) for lv in rep.dynamics.levels],
        "least_even_vector_period": rep.least_even_vector_period,
        "minimal_period": rep.minimal_period,
    }
    return out


def report_from_dict(d: dict) -> PeriodReport:
    if d.get("schema") != SCHEMA:
        raise ValueError(f"unknown report schema {d.get('schema')!r}")
    norm = d["normalized"]
    chain = None if d["chain"] is None else ReductionChain(tuple(tuple(v) for v in d["chain"]))
    dyn = None if d["levels"] is None else DynamicalParams(tuple(level_from_dict(x) for x in d["levels"]))
    inp = d["input"]
    return PeriodReport(
        inp["bits"],
        inp["k"],
        inp["p"],
        d["case"],
        d["minimal_period"],
        None if norm is None else norm["k"],
        None if norm is None else norm["p"],
        d["start_shift"],
        d["start_bits"],
        chain,
        dyn,
    )


def report_to_json(rep: PeriodReport) -> str:
    return json.dumps(report_to_dict(rep), indent=2) + "\n"


def report_from_json(text: str) -> PeriodReport:
    return report_from_dict(json.loads(text))


def _level_lines(lv: LevelDetail) -> list[str]:
    i = lv.level
    lines = [f"Q_{i} = {format_vector(lv.vector)}"]
    if lv.decomposition is not None:
        lines.append(f"  components: {lv.decomposition}")
    if i == 0:
        lines.append(f"  cyclic parameters of the extension: j_0 = {lv.j}, zeta_0 = {lv.zeta}")
        return lines
    if not lv.d:
        lines.append(f"  D(Q_{i}) is empty, alpha_{i} = {lv.alpha}")
        lines.append(f"  j_{i} = j_{i - 1} = {lv.j}, zeta_{i} = zeta_{i - 1} + j_{i} = {lv.zeta}")
        return lines
    lines.append(f"  D(Q_{i}) = {format_vector(lv.d)}, alpha_{i} = {lv.alpha}")
    lines.append(f"  m* = {lv.m_star}, alpha_{i}* = {lv.alpha_star}, gamma_{i}* = {lv.gamma_star}")
    lines.append(f"  least solution of x*{lv.alpha_star} = y*zeta_{i - 1}: x = {lv.x}, y = {lv.y}")
    lines.append(f"  j_{i} = {lv.j}, zeta_{i} = {lv.zeta}")
    return lines


def render_chain(chain: ReductionChain, dyn: DynamicalParams) -> str:
    lines = []
    for lv in reversed(dyn.levels):
        lines.extend(_level_lines(lv))
    lines.append(f"j = {format_vector(dyn.j)}")
    lines.append(f"zeta = {format_vector(dyn.zeta)}")
    return "\n".join(lines) + "\n"


def render_text(rep: PeriodReport) -> str:
    lines = [f"A = {rep.bits}  (n={rep.n}, k={rep.k}, p={rep.p})"]
    if rep.case == "out-of-band":
        lines.append("weight outside [k, k+p+1]: feedback never fires, period is the rotation period")
    elif rep.case == "constant-weight":
        lines.append("window weight is constant: period taken from direct simulation")
    else:
        lines.append(f"normalized parameters: k* = {rep.k_star}, p* = {rep.p_star}")
        lines.append(f"start shift r = {rep.start_shift}, A_r = {rep.start_bits}")
        text = render_chain(rep.chain, rep.dynamics)
        lines.extend(text.rstrip("\n").split("\n"))
        lines.append(f"least even vector period: {rep.least_even_vector_period}")
    lines.append(f"minimal period: {rep.minimal_period}")
    return "\n".join(lines) + "\n"
