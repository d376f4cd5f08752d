"""Sorting genomes by prefix double-cut-and-join operations."""

__version__ = "0.1.0"

from ._core import COMPILED
from .breakpoint_graph import (
    BoundReport,
    CycleDecomposition,
    build_signed_bg,
    build_unsigned_bg,
    enumerate_decompositions,
    lb_signed_prefix_dcj,
    lb_unsigned_prefix_dcj,
    optimal_decomposition,
    prefix_exchange_distance,
    signed_report,
    unsigned_report,
)
from .generators import gen_gap_family, gen_random, gen_tight_family
from .genome import (
    InvalidGenomeError,
    InvalidMoveError,
    PrefixDcj,
    Scenario,
    SignedGenome,
    SignedPermutation,
    UnsignedGenome,
    UnsignedPermutation,
    apply_prefix_dcj,
    breakpoint_count,
    genome_from_unsigned_perm,
    identity_signed,
    identity_unsigned,
    signed_genome_from_perm,
    strips,
)
from .oracle import OracleCapExceeded, oracle_distance, oracle_scenario, oracle_table
from .solvers import (
    BudgetExceeded,
    sort_signed_exact,
    sort_unsigned_approx,
    sort_unsigned_fpt,
    verify_scenario,
)
