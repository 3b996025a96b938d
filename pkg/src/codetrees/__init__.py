"""Optimal d-ary code trees from one greedy core.

Two instantiations of the same merge-the-least-weights algorithm over
prefix codes: classical Huffman coding (minimize total weighted codeword
length) and embedding arbitrary-shape scheduler trees into bounded d-ary
trees (minimize height).  A brute-force oracle certifies optimality on
small instances, and randomized checkers validate the algebraic laws the
algorithm's correctness rests on.
"""

from .codec import Bits, DecodeError, backend_name, compress, decode, decompress, encode
from .core import (
    EPSILON,
    ArityMismatchError,
    CodeTree,
    PrefixCode,
    Word,
    flatten,
    is_prefix,
    is_prefix_free,
    map_payloads,
    parse_word,
    render_tree,
    render_word,
    unit,
)
from .greedy import GreedyResult, WeightedItem, build_optimal_tree, combine_size, combine_step
from .huffman import (
    CodeTable,
    FrequencyTable,
    SumWeighting,
    build_code,
    entropy_base_d,
    weighted_length,
)
from .oracle import brute_force_optimal, enumerate_codes, verify_algorithm
from .pifo import (
    Embedding,
    MaxDepthWeighting,
    PifoNode,
    check_bound,
    embed,
    embedded_height,
    min_embed_height,
    tree_from_json,
    tree_to_json,
)
from .weighting import (
    DEFAULT_SEED,
    CheckReport,
    TreeSampler,
    Weighting,
    check_algebra_laws,
    check_axiom_exchange,
    check_axiom_monotone_lengthen,
    check_axiom_structure_monotone,
    same_payload_multiset,
    tree_equiv,
    tree_leq,
)

__version__ = "0.1.0"

__all__ = [
    "ArityMismatchError",
    "Bits",
    "CheckReport",
    "CodeTable",
    "CodeTree",
    "DEFAULT_SEED",
    "DecodeError",
    "EPSILON",
    "Embedding",
    "FrequencyTable",
    "GreedyResult",
    "MaxDepthWeighting",
    "PifoNode",
    "PrefixCode",
    "SumWeighting",
    "TreeSampler",
    "WeightedItem",
    "Weighting",
    "Word",
    "backend_name",
    "build_code",
    "build_optimal_tree",
    "brute_force_optimal",
    "check_algebra_laws",
    "check_axiom_exchange",
    "check_axiom_monotone_lengthen",
    "check_axiom_structure_monotone",
    "check_bound",
    "combine_size",
    "combine_step",
    "compress",
    "decode",
    "decompress",
    "embed",
    "embedded_height",
    "encode",
    "entropy_base_d",
    "enumerate_codes",
    "flatten",
    "is_prefix",
    "is_prefix_free",
    "map_payloads",
    "min_embed_height",
    "parse_word",
    "render_tree",
    "render_word",
    "same_payload_multiset",
    "tree_equiv",
    "tree_from_json",
    "tree_leq",
    "tree_to_json",
    "unit",
    "verify_algorithm",
    "weighted_length",
]
