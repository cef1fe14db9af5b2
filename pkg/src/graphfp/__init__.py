"""Symbolic graph-operator probability: word reduction over a directed
multigraph, diagonal expectation, amalgamated moments and cumulants on the
noncrossing-partition lattice, freeness checks, vertex/diagonal compression,
and a truncated numerical oracle."""

from .compress import (
    CompressedVariable,
    compress_vertex,
    compressed_expectation,
    compressed_freeness_check,
    compressed_moment_series,
    compressed_r_transform,
    diagonal_compress,
    loop_intersection,
)
from .errors import DomainError, FormatError, GraphFPError
from .fock import (
    TOLERANCE,
    TruncatedBasis,
    cross_check_reduction,
    represent,
    represent_form,
    truncated_basis,
    verify_relations,
)
from .freeprob import (
    ClassifyReport,
    CumulantReport,
    FreenessWitness,
    classify,
    connectivity_multiplier,
    cumulant,
    cumulant_via_multiplier,
    freeness_certificate,
    is_partition_connected,
    mixed_cumulants_vanish,
    moment,
    partition_moment,
    trivial_cumulant,
)
from .graph import (
    Edge,
    Graph,
    PathWord,
    concat,
    diagram,
    diagram_distinct,
    diagram_distinct_sets,
    enumerate_paths,
    graph_to_json,
    load_graph,
    loop_power,
    make_word,
    path_word,
    primitive_root,
    vertex_word,
    word_tokens,
)
from .ncpart import NoncrossingPartition, enumerate_nc, leq, mobius
from .opcalc import (
    CK,
    TOEPLITZ,
    DiagonalElement,
    GeneralElement,
    GeneratorLetter,
    LatticePath,
    Monomial,
    Pair,
    RandomVariable,
    Zero,
    annihilation,
    creation,
    diagonal_from_json,
    diagonal_to_json,
    expectation,
    lattice_path,
    multiply,
    parse_letters,
    reduce_monomial,
    star_axis_property,
    to_general,
    variable_from_json,
    variable_to_json,
)
from .scalars import ExactComplex, format_rational, parse_rational

__version__ = "0.1.0"

__all__ = [
    "CK",
    "TOEPLITZ",
    "TOLERANCE",
    "ClassifyReport",
    "CompressedVariable",
    "CumulantReport",
    "DiagonalElement",
    "DomainError",
    "Edge",
    "ExactComplex",
    "FormatError",
    "FreenessWitness",
    "GeneralElement",
    "GeneratorLetter",
    "Graph",
    "GraphFPError",
    "LatticePath",
    "Monomial",
    "NoncrossingPartition",
    "Pair",
    "PathWord",
    "RandomVariable",
    "TruncatedBasis",
    "Zero",
    "annihilation",
    "classify",
    "compress_vertex",
    "compressed_expectation",
    "compressed_freeness_check",
    "compressed_moment_series",
    "compressed_r_transform",
    "concat",
    "connectivity_multiplier",
    "creation",
    "cross_check_reduction",
    "cumulant",
    "cumulant_via_multiplier",
    "diagonal_compress",
    "diagonal_from_json",
    "diagonal_to_json",
    "diagram",
    "diagram_distinct",
    "diagram_distinct_sets",
    "enumerate_nc",
    "enumerate_paths",
    "expectation",
    "format_rational",
    "freeness_certificate",
    "graph_to_json",
    "is_partition_connected",
    "lattice_path",
    "load_graph",
    "loop_intersection",
    "loop_power",
    "make_word",
    "mixed_cumulants_vanish",
    "leq",
    "mobius",
    "moment",
    "multiply",
    "parse_letters",
    "parse_rational",
    "partition_moment",
    "path_word",
    "primitive_root",
    "reduce_monomial",
    "represent",
    "represent_form",
    "star_axis_property",
    "to_general",
    "trivial_cumulant",
    "truncated_basis",
    "variable_from_json",
    "variable_to_json",
    "verify_relations",
    "vertex_word",
    "word_tokens",
]
