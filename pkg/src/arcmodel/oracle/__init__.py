"""Independent Hom/Ext computation on explicit graded modules."""
from .graded import (
    GradedModuleRep,
    check_window,
    kernel_cokernel_dims,
    module_of_arc,
    oracle_direct_hom_dim,
    oracle_ext_dim,
    oracle_hom_dim,
    oracle_morphism,
)
from .linalg import nullspace, rank, rref

__all__ = [
    "GradedModuleRep",
    "check_window",
    "kernel_cokernel_dims",
    "module_of_arc",
    "oracle_direct_hom_dim",
    "oracle_ext_dim",
    "oracle_hom_dim",
    "oracle_morphism",
    "nullspace",
    "rank",
    "rref",
]
