"""Exact combinatorics of nested lattice paths on a colored square.

The package counts and constructs admissible sequences of nested lattice
paths, maps them bijectively to standard Young tableaux of bounded height,
counts permutations avoiding a long decreasing pattern, and evaluates the
matching multiplicities of maximal dominant weights for affine type A.
All arithmetic is exact (Python integers); nothing here uses floats.
"""

from latmult.admissibility import is_admissible, satisfies_diagonal_condition, sequence_type
from latmult.avoidance import Permutation, count_avoiders, lds_length, rsk
from latmult.bijections import join, sigma, split, tau
from latmult.enumeration import (
    count_by_type,
    count_sequences,
    enumerate_admissible,
    enumerate_self_conjugate,
)
from latmult.guards import GUARD_ENV, ResourceLimitError
from latmult.partitions import (
    Partition,
    conjugate,
    count_syt,
    hook_lengths,
    partitions_of,
    syt_sum,
    syt_sum_squares,
)
from latmult.paths import (
    ColorCountTable,
    ColoredSquare,
    LatticePath,
    PathSequence,
    box_below_path,
    box_color,
    color_counts,
    is_self_conjugate,
    path_leq,
    reflect,
)
from latmult.tableaux import StandardTableau, enumerate_syt
from latmult.verify import render_report, run_verification
from latmult.weights import (
    AffineCartan,
    FamilyEntry,
    RootVector,
    WeightVector,
    gamma,
    maximal_dominant_family,
    multiplicity,
    null_root,
    weight_pairings,
)

__all__ = [
    "AffineCartan",
    "ColorCountTable",
    "ColoredSquare",
    "FamilyEntry",
    "GUARD_ENV",
    "LatticePath",
    "Partition",
    "PathSequence",
    "Permutation",
    "ResourceLimitError",
    "RootVector",
    "StandardTableau",
    "WeightVector",
    "box_below_path",
    "box_color",
    "color_counts",
    "conjugate",
    "count_avoiders",
    "count_by_type",
    "count_sequences",
    "count_syt",
    "enumerate_admissible",
    "enumerate_self_conjugate",
    "enumerate_syt",
    "gamma",
    "hook_lengths",
    "is_admissible",
    "is_self_conjugate",
    "join",
    "lds_length",
    "maximal_dominant_family",
    "multiplicity",
    "null_root",
    "partitions_of",
    "path_leq",
    "reflect",
    "render_report",
    "rsk",
    "run_verification",
    "satisfies_diagonal_condition",
    "sequence_type",
    "sigma",
    "split",
    "syt_sum",
    "syt_sum_squares",
    "tau",
    "weight_pairings",
]

__version__ = "0.1.0"
