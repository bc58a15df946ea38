"""Uniquely restricted matchings in subcubic graphs.

Verifiers, an exact branch-and-bound oracle, two constructive lower-bound
certificates (one counting good bridges, one for girth at least 7) and
instance generators.
"""

from .bridges import Certificate, ReductionStep, certify_theorem1, find_reduction, lift
from .errors import (
    BudgetExhausted,
    GraphFormatError,
    PreconditionError,
    ProofFalsificationError,
    URMError,
)
from .girth import GirthCertificate, certify_lemma1, certify_theorem2
from .graph import Graph, format_edge_list, parse_edge_list, read_edge_list, write_edge_list
from .matching import (
    Matching,
    forest_max_matching,
    is_acyclic_matching,
    is_uniquely_restricted,
    is_uniquely_restricted_by_definition,
    parse_matching,
)
from .oracle import nu_ac_exact, nu_exact, nu_ur_exact
from .structure import BridgeReport, bridge_report, maximal_degree2_path, spanning_tree_endvertex

__version__ = "0.1.0"

__all__ = [
    "BridgeReport", "BudgetExhausted", "Certificate", "GirthCertificate", "Graph",
    "GraphFormatError", "Matching", "PreconditionError", "ProofFalsificationError",
    "ReductionStep", "URMError", "bridge_report", "certify_lemma1", "certify_theorem1",
    "certify_theorem2", "find_reduction", "forest_max_matching", "format_edge_list",
    "is_acyclic_matching", "is_uniquely_restricted", "is_uniquely_restricted_by_definition",
    "lift", "maximal_degree2_path", "nu_ac_exact", "nu_exact", "nu_ur_exact", "parse_edge_list",
    "parse_matching", "read_edge_list", "spanning_tree_endvertex", "write_edge_list",
]
