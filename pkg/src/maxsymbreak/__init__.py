"""Symmetry breaking toolkit for MaxSAT and its weighted/partial variants."""

from .automorphism import (
    Coloring,
    GeneratorSet,
    Permutation,
    apply_permutation,
    detect_symmetries,
    find_automorphisms,
    group_order,
    initial_coloring,
    refine,
    to_literal_permutation,
    validate_on_formula,
)
from .formula import (
    DimacsParseError,
    Formula,
    Variant,
    WeightedClause,
    build_formula,
    evaluate,
    lift_to_partial,
    parse_dimacs,
    serialize,
)
from .graph import ColoredGraph, EncodeMode, color_histogram, encode
from .instances import hole, random_formula
from .sbp import SbpResult, build_sbp, generate_sbps, lex_leader
from .solver import OptResult, Status, brute_force, solve_bnb

__version__ = "0.1.0"

__all__ = [
    "ColoredGraph",
    "Coloring",
    "DimacsParseError",
    "EncodeMode",
    "Formula",
    "GeneratorSet",
    "OptResult",
    "Permutation",
    "SbpResult",
    "Status",
    "Variant",
    "WeightedClause",
    "apply_permutation",
    "brute_force",
    "build_formula",
    "build_sbp",
    "color_histogram",
    "detect_symmetries",
    "encode",
    "evaluate",
    "find_automorphisms",
    "generate_sbps",
    "group_order",
    "hole",
    "initial_coloring",
    "lex_leader",
    "lift_to_partial",
    "parse_dimacs",
    "random_formula",
    "refine",
    "serialize",
    "solve_bnb",
    "to_literal_permutation",
    "validate_on_formula",
]
