"""Exact decision procedures for directed (d-) and irreversible (ir-) paths in R^n."""

from .checkers import (
    CheckReport,
    JumpWitness,
    OrderWitness,
    PreimageWitness,
    concatenate,
    constant_path,
    example_ir_not_d,
    is_dpath,
    is_ir_path,
    is_ir_path_fast,
    is_monotone,
    is_standard_continuous,
    preimage_basis,
    reparametrize,
)
from .geometry import (
    DimensionMismatch,
    DomainError,
    Interval,
    IntervalSet,
    PLPath,
    StepPath,
    endpoints,
    eval_path,
)
from .reachability import (
    NoWitness,
    ReachQuery,
    in_gamma_d,
    in_gamma_ir,
    witness_dpath,
    witness_irpath,
)
from .topology import BasisBox, ClosureBox, closure_of_point, in_closure, is_open_in_ir_I

__version__ = "0.1.0"
