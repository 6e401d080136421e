"""Minimum Steiner arborescence solvers for directed hypercubes."""

__version__ = "0.1.0"

from .approx import hitting_set, solve_level_slice, solve_mhs, solve_mvc
from .conflict import (
    ConflictGraph,
    build_cg,
    conflicts,
    make_minimal,
    min_vertex_cover_exact,
    perfect_arborescence,
    vc_2approx,
)
from .errors import SolverRefusal
from .estimator import SteinerArborescenceSolver
from .exact import oracle_solve, solve_dw, solve_level2
from .fpt_q import RunConfig, peel, solve_derandomized, solve_randomized
from .instance import (
    Arborescence,
    Instance,
    NormalizationRecord,
    RawInstance,
    lift,
    lower_bound,
    mvc_lower_bound,
    normalize,
    validate,
    validation_report,
)
from .nodes import Node, hamming, is_ancestor, lca, level, ose, parents
from .supersets import Superset, partition, split

__all__ = [
    "Arborescence",
    "ConflictGraph",
    "Instance",
    "Node",
    "NormalizationRecord",
    "RawInstance",
    "RunConfig",
    "SolverRefusal",
    "SteinerArborescenceSolver",
    "Superset",
    "build_cg",
    "conflicts",
    "hamming",
    "hitting_set",
    "is_ancestor",
    "lca",
    "level",
    "lift",
    "lower_bound",
    "make_minimal",
    "min_vertex_cover_exact",
    "mvc_lower_bound",
    "normalize",
    "oracle_solve",
    "ose",
    "parents",
    "partition",
    "peel",
    "perfect_arborescence",
    "solve_derandomized",
    "solve_dw",
    "solve_level2",
    "solve_level_slice",
    "solve_mhs",
    "solve_mvc",
    "solve_randomized",
    "split",
    "validate",
    "validation_report",
    "vc_2approx",
]
