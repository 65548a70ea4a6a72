"""Borel chromatic numbers of integer distance graphs via subshifts of finite type."""

from .errors import CapacityError, InternalInconsistencyError
from .sft import (
    Alphabet,
    GeneratorSet,
    Sft,
    coloring_sft,
    decode_word,
    encode_word,
    is_allowed,
    normalize,
    parse_sft_text,
    sft_to_text,
)
from .transition import TransitionGraph, build, out_neighbors, to_dot
from .period import Decision, SccInfo, component_period, decide, period, sccs
from .chromatic import (
    BoundInfo,
    ChiResult,
    CoreSubgraph,
    bounds,
    chi,
    chromatic_number_exact,
    clique_number,
    congruence_upper_bound,
    core_subgraph,
    fast_path,
    general_upper_bound,
    lower_bound,
)
from .witness import (
    ConstructedTiles,
    PairTiles,
    TwoTilesGraph,
    TwoTilesWitness,
    build_gamma,
    cong_construction,
    extract_certificate,
    pair_construction,
    read_tile_file,
    read_witness_file,
    respects,
    search_gamma_labeling,
    tile_pair_witness,
    two_a1_construction,
    verify_s_coloration,
    verify_tile_pair,
    verify_two_tiles,
    write_tile_file,
    write_witness_file,
)

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "BoundInfo",
    "CapacityError",
    "ChiResult",
    "ConstructedTiles",
    "CoreSubgraph",
    "Decision",
    "GeneratorSet",
    "InternalInconsistencyError",
    "PairTiles",
    "SccInfo",
    "Sft",
    "TransitionGraph",
    "TwoTilesGraph",
    "TwoTilesWitness",
    "bounds",
    "build",
    "build_gamma",
    "chi",
    "chromatic_number_exact",
    "clique_number",
    "coloring_sft",
    "component_period",
    "cong_construction",
    "congruence_upper_bound",
    "core_subgraph",
    "decide",
    "decode_word",
    "encode_word",
    "extract_certificate",
    "fast_path",
    "general_upper_bound",
    "is_allowed",
    "lower_bound",
    "normalize",
    "out_neighbors",
    "pair_construction",
    "parse_sft_text",
    "period",
    "read_tile_file",
    "read_witness_file",
    "respects",
    "search_gamma_labeling",
    "sccs",
    "sft_to_text",
    "tile_pair_witness",
    "to_dot",
    "two_a1_construction",
    "verify_s_coloration",
    "verify_tile_pair",
    "verify_two_tiles",
    "write_tile_file",
    "write_witness_file",
    "__version__",
]
