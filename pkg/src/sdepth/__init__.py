"""Exact Stanley depth and depth of monomial ideals and their quotients."""

from .core import (
    ContextMismatchError,
    GeneratorCapError,
    Monomial,
    MonomialIdeal,
    QuotientModule,
    RingContext,
    is_complete_intersection,
    krull_dim_quotient,
    make_context,
    tensor_join,
)
from .lattice import (
    LcmLattice,
    build_lcm_lattice,
    ci_power_atom_map,
    lattice_iso_check,
    sdepth_transfer,
)
from .parsing import ParseError, format_ideal, parse_ideal, parse_module_expr
from .poset import (
    Budget,
    CharPoset,
    Decision,
    Interval,
    IntervalPartition,
    ResourceCapError,
    SdepthResult,
    StanleyDecomposition,
    build_poset,
    degree_bound_g,
    partition_to_decomposition,
    sdepth_decision,
    sdepth_exact,
    verify_decomposition,
)
from .taylor import BettiTable, DepthReport, depth_ideal, depth_quotient, taylor_tor_ranks

__version__ = "0.1.0"

__all__ = [
    "Budget",
    "BettiTable",
    "CharPoset",
    "ContextMismatchError",
    "Decision",
    "DepthReport",
    "GeneratorCapError",
    "Interval",
    "IntervalPartition",
    "LcmLattice",
    "Monomial",
    "MonomialIdeal",
    "ParseError",
    "QuotientModule",
    "ResourceCapError",
    "RingContext",
    "SdepthResult",
    "StanleyDecomposition",
    "build_lcm_lattice",
    "build_poset",
    "ci_power_atom_map",
    "degree_bound_g",
    "depth_ideal",
    "depth_quotient",
    "format_ideal",
    "is_complete_intersection",
    "krull_dim_quotient",
    "lattice_iso_check",
    "make_context",
    "parse_ideal",
    "parse_module_expr",
    "partition_to_decomposition",
    "sdepth_decision",
    "sdepth_exact",
    "sdepth_transfer",
    "taylor_tor_ranks",
    "tensor_join",
    "verify_decomposition",
]
