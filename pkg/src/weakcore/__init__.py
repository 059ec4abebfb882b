"""Exact generalized inverses of rational matrices: Moore-Penrose, Drazin,
group, core, core-EP, weak group, weak core and central weak core, with a
brute-force oracle over Z_n."""

from weakcore.central import central_drazin, central_weak_core, is_central, is_ep
from weakcore.classical import (
    drazin,
    drazin_index,
    group_inverse,
    inner_inverse,
    moore_penrose,
    one_three_inverse,
)
from weakcore.corefamily import core_ep, core_inverse, weak_core, weak_group
from weakcore.matrix import Matrix
from weakcore.scalar import rat_make, rat_parse
from weakcore.verify import InverseKind, check_axioms

__all__ = [
    "InverseKind",
    "Matrix",
    "central_drazin",
    "central_weak_core",
    "check_axioms",
    "core_ep",
    "core_inverse",
    "drazin",
    "drazin_index",
    "group_inverse",
    "inner_inverse",
    "is_central",
    "is_ep",
    "moore_penrose",
    "one_three_inverse",
    "rat_make",
    "rat_parse",
    "weak_core",
    "weak_group",
]
