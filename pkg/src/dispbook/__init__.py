"""Dispersable book embeddings of cubic planar bipartite multigraphs."""

from .book import (
    CyclicOrder,
    MbtResult,
    PageColoring,
    VerifyReport,
    conflict_graph,
    crosses,
    exact_dispersable_subhamiltonian,
    exact_mbt,
    is_subhamiltonian_order,
    verify_matching_book_embedding,
)
from .corpus import build_corpus, gen_doubled_c4, gen_prism, gen_random_glued, gen_theta, glue
from .dispersable import combine, embed_dispersable, normalize_colors, split_at_cut
from .formats import read_embedding, read_mel, write_embedding, write_mel
from .graphcore import (
    Bipartition,
    CutSplit,
    Multigraph,
    bipartition,
    bridges,
    build_multigraph,
    check_entanglement,
    cutpoints,
    find_disjoint_two_edge_cut,
    is_k_regular,
    oriented_degree,
)
from .planarity import is_planar

__version__ = "0.1.0"
