"""Local maximum stable sets, the greedoid they form on forests, and the
matching/embedding machinery behind it, with exact verifiers throughout."""

from .errors import (
    AccessibilityFailure,
    GraphSyntaxError,
    InternalError,
    InvalidFamilyParameterError,
    InvalidVertexError,
    K2BaseCase,
    LmssError,
    NotAForestError,
    NotDisjointOrNotStableError,
    NotInPsiError,
    NotMaximumError,
    NotPerfectTreeError,
    SelfLoopError,
    SizeMismatchError,
    TooLargeForBruteForce,
    TooLargeForEnumeration,
    UnknownVertexError,
    UnsupportedFormatError,
)
from .graph_core import (
    ComponentDecomposition,
    Graph,
    VertexSet,
    closed_neighborhood,
    decompose,
    induced_subgraph,
    pendant_vertices,
)
from .stable_core import (
    PsiFamily,
    StableSetResult,
    SubsetOracle,
    alpha,
    enumerate_omega,
    enumerate_psi,
    is_local_max_stable,
    is_stable,
)
from .tree_matching import (
    KonigEgervaryReport,
    Matching,
    internal_cover_matching,
    maximum_matching,
    verify_konig_egervary,
)
from .perfect_embedding import Embedding, embed_perfect, psi_restrict_check
from .greedoid_engine import (
    ChainCertificate,
    ExchangeWitness,
    GreedoidReport,
    chain_decompose,
    chain_is_valid,
    exchange_witness,
    nt_extend,
    pendant_k2_edge,
    union_local_max,
    verify_greedoid,
)
from .graph_families import (
    FamilySpec,
    SplitMix64,
    enumerate_labeled_trees,
    fig7_exchange_pair,
    generate,
    prufer_decode,
    prufer_encode,
)
from .cli_io import DuplicateEdgeWarning, GraphDocument, emit, parse_graph

__version__ = "0.1.0"

__all__ = [
    "AccessibilityFailure", "ChainCertificate", "ComponentDecomposition",
    "DuplicateEdgeWarning", "Embedding", "ExchangeWitness", "FamilySpec",
    "Graph", "GraphDocument", "GraphSyntaxError", "GreedoidReport",
    "InternalError", "InvalidFamilyParameterError", "InvalidVertexError",
    "K2BaseCase", "KonigEgervaryReport", "LmssError", "Matching",
    "NotAForestError", "NotDisjointOrNotStableError", "NotInPsiError",
    "NotMaximumError", "NotPerfectTreeError", "PsiFamily", "SelfLoopError",
    "SizeMismatchError", "SplitMix64", "StableSetResult", "SubsetOracle",
    "TooLargeForBruteForce", "TooLargeForEnumeration", "UnknownVertexError",
    "UnsupportedFormatError", "VertexSet", "alpha", "chain_decompose",
    "chain_is_valid", "closed_neighborhood", "decompose", "embed_perfect",
    "emit", "enumerate_labeled_trees", "enumerate_omega", "enumerate_psi",
    "exchange_witness", "fig7_exchange_pair", "generate",
    "induced_subgraph", "internal_cover_matching", "is_local_max_stable",
    "is_stable", "maximum_matching", "nt_extend", "parse_graph",
    "pendant_k2_edge", "pendant_vertices", "prufer_decode", "prufer_encode",
    "psi_restrict_check", "union_local_max", "verify_greedoid",
    "verify_konig_egervary",
]
