"""Exact chromatic vertex stability toolkit for small graphs."""

from chromastab.chromatic import (
    Coloring,
    StabilityReport,
    analyze,
    bipartizing_pair_vertices,
    chromatic_number,
    independent_vertex_stability,
    is_k_colorable,
    min_color_class_size,
    vertex_stability,
)
from chromastab.graph import Graph, GraphError, bits, mask_of
from chromastab.iso import are_isomorphic, automorphisms, canonical_form, is_planar

__version__ = "0.1.0"

__all__ = [
    "Coloring",
    "Graph",
    "GraphError",
    "StabilityReport",
    "analyze",
    "are_isomorphic",
    "automorphisms",
    "bipartizing_pair_vertices",
    "bits",
    "canonical_form",
    "chromatic_number",
    "independent_vertex_stability",
    "is_k_colorable",
    "is_planar",
    "mask_of",
    "min_color_class_size",
    "vertex_stability",
    "__version__",
]
