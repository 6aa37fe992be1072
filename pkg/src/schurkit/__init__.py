"""Exact Littlewood-Richardson computations for Schur-functor tensor powers."""

from .cache import CacheFormatError, StaleValue, cache_load, cache_store
from .lr import (
    Decomposition,
    HypothesisFailed,
    LRCache,
    LrKey,
    check_dominance_bound,
    check_semigroup,
    dim_schur,
    lr_coefficient,
    multiplicity,
    tensor_power,
    tensor_product,
)
from .partitions import (
    Composition,
    FlagSignature,
    LengthMismatch,
    Negative,
    NonMonotone,
    Partition,
    RankContext,
    WeightMismatch,
    ZeroPartition,
    block_average,
    compositions,
    concat,
    dominated_eq,
    dominated_ext,
    flag_signature,
    generators,
    in_Z,
    make_partition,
    weight,
)
from .semigroup import (
    CapTooSmall,
    Certificate,
    DecompositionWitness,
    NoDecomposition,
    NotInZ,
    SigmaSet,
    ZeroM,
    certify,
    compute_sigma,
    decompose,
    verify_certificate,
    verify_g,
    verify_vinc,
)

__version__ = "0.1.0"
