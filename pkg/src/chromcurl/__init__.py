"""Curling numbers and chromatic curling numbers of graphs."""

__version__ = "0.1.0"

from .chroma import (ChromaticCurlingResult, ColourAssignment, ImproperColouring,
                     chi_minus, chi_plus, chromatic_number, class_sizes)
from .curling import CurlingResult, curling_number
from .families import Family, FamilySpec, ParameterTooSmall, generate, vertex_layout
from .formulas import ClaimRecord, UnsupportedParameter, claimed_values
from .graph import (DegreeSequence, Graph, GraphError, SelfLoop, VertexOutOfRange,
                    degree_sequence, from_json, is_connected, make_graph)
from .oracle import BudgetExceeded, OracleResult, oracle_chromatic
from .verify import Verdict, VerdictRecord, verify_family, witness_check

__all__ = [
    "BudgetExceeded", "ChromaticCurlingResult", "ClaimRecord", "ColourAssignment",
    "CurlingResult", "DegreeSequence", "Family", "FamilySpec", "Graph", "GraphError",
    "ImproperColouring", "OracleResult", "ParameterTooSmall", "SelfLoop",
    "UnsupportedParameter", "VertexOutOfRange", "Verdict", "VerdictRecord",
    "chi_minus", "chi_plus", "chromatic_number", "class_sizes", "claimed_values",
    "curling_number", "degree_sequence", "from_json", "generate", "is_connected",
    "make_graph", "oracle_chromatic", "verify_family", "vertex_layout", "witness_check",
]
