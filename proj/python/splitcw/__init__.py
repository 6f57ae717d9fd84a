"""Clique-width of H-free split graphs.

Graphs are passed as graph6 strings; "@name" strings (for example "@F4" or
"@K1,3+2P1") resolve through the built-in catalogue.
"""

from ._core import (
    FormatError,
    InvalidPartitionError,
    PreconditionError,
    SizeLimitError,
    UnknownClaimError,
    are_isomorphic,
    canonical_code,
    claims,
    classify,
    classify_labelled,
    clique_width,
    complement,
    cw_expression,
    edges,
    enumerate,
    evaluate,
    from_edges,
    is_prime,
    is_split,
    named,
    order,
    rp1_expression,
    split_partitions,
    thm7_reduce,
    verify_claim,
)

__all__ = [
    "FormatError",
    "InvalidPartitionError",
    "PreconditionError",
    "SizeLimitError",
    "UnknownClaimError",
    "are_isomorphic",
    "canonical_code",
    "claims",
    "classify",
    "classify_labelled",
    "clique_width",
    "complement",
    "cw_expression",
    "edges",
    "enumerate",
    "evaluate",
    "from_edges",
    "is_prime",
    "is_split",
    "named",
    "order",
    "rp1_expression",
    "split_partitions",
    "thm7_reduce",
    "verify_claim",
]
