"""Finite-poset decompositions with machine-checkable certificates.

The library constructs minimum chain covers, minimum antichain covers,
maximum chains/antichains, left-perfect bipartite matchings, systems of
distinct representatives, and monotone subsequences, each paired with a
verifier and cross-checkable against brute-force oracles.
"""

from .core import (
    AntichainCover,
    ChainCover,
    ElementId,
    FinitePoset,
    build_poset,
    canonical_cover,
    is_antichain,
    is_chain,
    maximal_above,
    maximal_elements,
    minimal_below,
    minimal_elements,
    restrict,
    verify_antichain_cover,
    verify_chain_cover,
)
from .dilworth import (
    DilworthCertificate,
    DilworthReport,
    check_dilworth,
    disjointify_cover,
    perles_chain_cover,
    width,
)
from .erdos_szekeres import (
    DECREASING,
    INCREASING,
    IntSeq,
    PosetWitness,
    SubseqWitness,
    es_subsequence,
    pre_es,
    seq_from_list,
    seq_to_poset,
    verify_subseq,
)
from .hall import (
    BipartiteGraph,
    Matching,
    SdrAssignment,
    SetFamily,
    Violation,
    build_bigraph,
    find_L_perfect_matching,
    find_sdr,
    graph_to_poset,
    hall_condition,
    neighborhood,
    verify_matching,
)
from .mirsky import MirskyCertificate, MirskyReport, check_mirsky, height, mirsky_antichain_cover
from .oracle import (
    SizedWitness,
    enumerate_posets,
    max_antichain,
    max_chain,
    min_antichain_cover,
    min_chain_cover,
)
from . import errors

__all__ = [
    "AntichainCover",
    "BipartiteGraph",
    "ChainCover",
    "DECREASING",
    "DilworthCertificate",
    "DilworthReport",
    "ElementId",
    "FinitePoset",
    "INCREASING",
    "IntSeq",
    "Matching",
    "MirskyCertificate",
    "MirskyReport",
    "PosetWitness",
    "SdrAssignment",
    "SetFamily",
    "SizedWitness",
    "SubseqWitness",
    "Violation",
    "build_bigraph",
    "build_poset",
    "canonical_cover",
    "check_dilworth",
    "check_mirsky",
    "disjointify_cover",
    "enumerate_posets",
    "errors",
    "es_subsequence",
    "find_L_perfect_matching",
    "find_sdr",
    "graph_to_poset",
    "hall_condition",
    "height",
    "is_antichain",
    "is_chain",
    "max_antichain",
    "max_chain",
    "maximal_above",
    "maximal_elements",
    "min_antichain_cover",
    "min_chain_cover",
    "minimal_below",
    "minimal_elements",
    "mirsky_antichain_cover",
    "neighborhood",
    "perles_chain_cover",
    "pre_es",
    "restrict",
    "seq_from_list",
    "seq_to_poset",
    "verify_antichain_cover",
    "verify_chain_cover",
    "verify_matching",
    "verify_subseq",
    "width",
]
