"""Command-line front end: ``symshift <command> ...``."""

from __future__ import annotations

import argparse
import json
import sys

from . import simulator
from .bitstrings import parse_bits, parse_vector, run_vector
from .engine import analyze_vector, minimal_period
from .errors import SymShiftError
from .plot import weights_svg, weights_text
from .report import level_to_dict, render_chain, render_text, report_to_json
from .simulator import RegisterParams
from .sweep import sweep


def _params(bits: str, args) -> RegisterParams:
    return RegisterParams(args.k, args.p, len(bits))


def cmd_period(args, out) -> int:
    bits = parse_bits(args.bits)
    params = _params(bits, args)
    rep = minimal_period(bits, params)
    status = 0
    sim = None
    if args.verify:
        sim = simulator.orbit_period(bits, params, budget=args.budget)
        status = 0 if sim == rep.minimal_period else 1
    if args.format == "json":
        text = report_to_json(rep)
        if args.verify:
            d = json.loads(text)
            d["verification"] = {"simulated_period": sim, "agrees": sim == rep.minimal_period}
            text = json.dumps(d, indent=2) + "\n"
        out.write(text)
    else:
        out.write(render_text(rep))
        if args.verify:
            verdict = "verified" if status == 0 else "MISMATCH"
            out.write(f"simulated period: {sim} ({verdict})\n")
    return status


def cmd_simulate(args, out) -> int:
    bits = parse_bits(args.bits)
    params = _params(bits, args)
    if args.orbit:
        out.write(f"{simulator.orbit_period(bits, params, budget=args.budget)}\n")
    else:
        out.write(simulator.generate(bits, params, args.length or 4 * params.n) + "\n")
    return 0


def cmd_reduce(args, out) -> int:
    if (args.vector is None) == (args.bits is None):
        raise SystemExit("reduce: give exactly one of --vector or --bits")
    q = parse_vector(args.vector) if args.vector is not None else run_vector(parse_bits(args.bits))
    chain, dyn = analyze_vector(q, args.p)
    if args.format == "json":
        d = {"chain": [list(v) for v in chain.vectors], "levels": [level_to_dict(lv) for lv in dyn.levels]}
        out.write(json.dumps(d, indent=2) + "\n")
    else:
        out.write(render_chain(chain, dyn))
    return 0


def cmd_plot_weights(args, out) -> int:
    bits = parse_bits(args.bits)
    params = _params(bits, args)
    trace = simulator.weight_trace(bits, params, args.length)
    if args.format == "svg":
        text = weights_svg(trace.w_mod, title=f"w* for A={bits}, k={args.k}, p={args.p}")
    else:
        text = weights_text(trace.w_mod)
    if args.output:
        with open(args.output, "w") as f:
            f.write(text)
    else:
        out.write(text)
    return 0


def cmd_cycles(args, out) -> int:
    hist = simulator.cycle_structure(RegisterParams(args.k, args.p, args.n), max_n=args.max_n)
    if args.format == "json":
        out.write(json.dumps({str(length): c for length, c in sorted(hist.items())}, indent=2) + "\n")
        return 0
    out.write("length  cycles\n")
    for length, c in sorted(hist.items()):
        out.write(f"{length:6d}  {c}\n")
    out.write(f"states: {sum(length * c for length, c in hist.items())}\n")
    return 0


def cmd_sweep(args, out) -> int:
    res = sweep(args.n_max, n_min=args.n_min, workers=args.workers)
    for m in res.mismatches[:20]:
        out.write("mismatch: A={} k={} p={} analytic={} simulated={}\n".format(*m))
    out.write(f"cases: {res.cases}\n")
    for case, c in sorted(res.by_case.items()):
        out.write(f"  {case}: {c}\n")
    if res.max_ratio_at:
        bits, k, p, period = res.max_ratio_at
        out.write(f"max period/n^3: {res.max_ratio:.4f} (A={bits}, k={k}, p={p}, period={period})\n")
    for n, period in sorted(res.max_period_by_n.items()):
        out.write(f"  n={n}: max period {period}, /n^3 = {period / n**3:.4f}\n")
    out.write(f"{len(res.mismatches)} mismatches\n")
    return 1 if res.mismatches else 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="symshift", description="Minimal periods of symmetric shift register sequences.")
    sub = ap.add_subparsers(dest="command", required=True)

    def reg(sp, bits=True):
        if bits:
            sp.add_argument("--bits", required=True, help="start state a_1..a_n, e.g. 11100001100001")
        sp.add_argument("--k", type=int, required=True)
        sp.add_argument("--p", type=int, required=True)

    sp = sub.add_parser("period", help="analytic minimal period with the full reduction narrative")
    reg(sp)
    sp.add_argument("--verify", action="store_true", help="also simulate and compare")
    sp.add_argument("--budget", type=int, default=None, help="step cap for --verify (default 2^n)")
    sp.add_argument("--format", choices=["text", "json"], default="text")
    sp.set_defaults(func=cmd_period)

    sp = sub.add_parser("simulate", help="generate a prefix or measure the orbit length by iteration")
    reg(sp)
    sp.add_argument("--length", type=int, default=None)
    sp.add_argument("--orbit", action="store_true", help="print the orbit length instead of a prefix")
    sp.add_argument("--budget", type=int, default=None)
    sp.set_defaults(func=cmd_simulate)

    sp = sub.add_parser("reduce", help="reduction chain and dynamical parameters of a run vector")
    sp.add_argument("--vector", help='run vector, "(3,4,2,4,1,0)" or "3,4,2,4,1,0"')
    sp.add_argument("--bits", help="bit string whose run vector is used")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--format", choices=["text", "json"], default="text")
    sp.set_defaults(func=cmd_reduce)

    sp = sub.add_parser("plot-weights", help="modified weight parameters as text or SVG")
    reg(sp)
    sp.add_argument("--length", type=int, default=80)
    sp.add_argument("--format", choices=["text", "svg"], default="text")
    sp.add_argument("--output", "-o", default=None)
    sp.set_defaults(func=cmd_plot_weights)

    sp = sub.add_parser("cycles", help="cycle-length histogram of the whole state space")
    reg(sp, bits=False)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--max-n", type=int, default=20)
    sp.add_argument("--format", choices=["text", "json"], default="text")
    sp.set_defaults(func=cmd_cycles)

    sp = sub.add_parser("sweep", help="exhaustive analytic-vs-simulated comparison")
    sp.add_argument("--n-max", type=int, required=True)
    sp.add_argument("--n-min", type=int, default=1)
    sp.add_argument("--workers", type=int, default=1)
    sp.set_defaults(func=cmd_sweep)
    return ap


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except SymShiftError as exc:
        print(f"symshift {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"symshift {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
