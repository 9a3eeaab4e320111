"""Mod-9 residue analysis, De Bruijn graphs, and bounded search for
x^3 + y^3 + z^3 = k."""

from .debruijn import (
    Alphabet,
    CoverageReport,
    CyclicSequence,
    DeBruijnGraph,
    EulerianStatus,
    FIXTURE_EDGES,
    NotEulerianError,
    TERNARY_ALPHABET,
    build_graph,
    circuit_to_sequence,
    debruijn_sequence,
    edge_endpoints,
    edges_for_class,
    eulerian_circuit,
    eulerian_status,
    fixture_subgraph,
    is_eulerian,
    read_edge_file,
    reverse_edges,
    to_dot,
    validate_cycle,
    write_edge_file,
)
from .residues import (
    CUBIC_RESIDUES,
    CubeSumMismatch,
    INFEASIBLE_CLASSES,
    ResidueTriple,
    SignedSpelling,
    class_of,
    cube_residue,
    decompose,
    is_feasible,
    label_solution,
    signed_spelling_for,
    signed_spellings,
)
from .search import (
    MAX_SEARCH_BOUND,
    Representation,
    SearchBounds,
    SearchBoundsError,
    SearchResult,
    SearchStats,
    TWO_CUBE_CLASSES,
    scan_range,
    search_k,
    verify,
)

__version__ = "0.1.0"
