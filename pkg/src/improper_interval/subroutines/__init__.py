"""Classical graph algorithms used as building blocks by the colorings."""

from .blocks import BlockDecomposition, assemble_block_colorings, blocks
from .edge_coloring import (
    exact_class1_color,
    interval_coloring_search,
    konig_edge_color,
    vizing_edge_color,
)
from .euler import Step, euler_circuit
from .factor import two_factorize
from .matching import bipartite_matching, max_matching
from .splitting import (
    is_outerplanar,
    outer_boundary,
    outer_cycle,
    split_outerplanar_to_degree,
    split_vertex_outerplanar,
    split_vertices,
)
from .structure import (
    NotBipartiteError,
    bipartition,
    has_triangle,
    is_bipartite,
    is_tree,
)

__all__ = [
    "BlockDecomposition",
    "NotBipartiteError",
    "Step",
    "assemble_block_colorings",
    "bipartite_matching",
    "bipartition",
    "blocks",
    "euler_circuit",
    "exact_class1_color",
    "has_triangle",
    "interval_coloring_search",
    "is_bipartite",
    "is_outerplanar",
    "is_tree",
    "konig_edge_color",
    "max_matching",
    "outer_boundary",
    "outer_cycle",
    "split_outerplanar_to_degree",
    "split_vertex_outerplanar",
    "split_vertices",
    "two_factorize",
    "vizing_edge_color",
]
