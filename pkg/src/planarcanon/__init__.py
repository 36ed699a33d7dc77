"""Canonical forms and logical distinguishability for 3-connected planar
graphs: embeddings, coordinates, local geodesic geometry, the pebble game
and Weisfeiler-Lehman refinement."""

from .canon import CanonicalForm, canonical_code_graph, canonical_code_rotation, iso_graphs, iso_rotations
from .embedding import LayoutSystem, RotationSystem, conjugate, embed, faces, layout_of, rotations_of_layout
from .graph import Graph, is_k_connected

__all__ = [
    "CanonicalForm",
    "Graph",
    "LayoutSystem",
    "RotationSystem",
    "canonical_code_graph",
    "canonical_code_rotation",
    "conjugate",
    "embed",
    "faces",
    "is_k_connected",
    "iso_graphs",
    "iso_rotations",
    "layout_of",
    "rotations_of_layout",
]
