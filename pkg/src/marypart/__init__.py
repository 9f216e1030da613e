"""Enumerate, count and stratify m-ary partitions, and check congruences on them."""

from .congruence import (
    VerificationOutcome,
    afs_residue,
    digit_criterion,
    n_mc_members,
    verify_afs,
    verify_digit_criterion,
    verify_equidistribution_S,
    verify_nmc_congruence,
    verify_nonsimple,
)
from .digits import BaseMDigits, digit_product, dominated_list, dominates, from_digits, to_base_m
from .partitions import (
    CapExceeded,
    MaryPartition,
    PartitionTriple,
    count_bm,
    count_triple,
    enumerate_all,
    enumerate_nonsimple,
    enumerate_simple,
    is_simple,
    nops,
    value,
)
from .stratification import (
    ChainClass,
    InvariantError,
    ResidueHistogram,
    Stratification,
    chain_params,
    decompose,
    f_map,
    is_equidistributed,
    nops_histogram,
    stratify,
    verify_equidistribution_N,
)

__version__ = "0.1.0"
