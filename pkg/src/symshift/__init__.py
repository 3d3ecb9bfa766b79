"""Exact minimal periods of sequences from symmetric shift registers over GF(2)."""

from .bitstrings import from_run_vector, minimal_rotation_period, parse_bits, parse_vector, run_vector, weight
from .contraction import component_decomposition, contract, distance_vector
from .engine import (
    analyze_vector,
    dynamical_parameters,
    find_main_case_start,
    minimal_period,
    normalize_parameters,
    reduction_chain,
    shift_symmetric_prefix,
)
from .errors import SymShiftError
from .progression import least_progression_parameters, omega
from .runvectors import cyclic_parameters, delta, in_M_p_plus, tau
from .simulator import KERNEL, RegisterParams, cycle_structure, generate, orbit_period, step, weight_trace

__version__ = "0.1.0"
