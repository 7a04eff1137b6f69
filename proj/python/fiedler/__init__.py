"""Fiedler vectors of weighted trees and cycles.

Vertices are 0-based integers and edges are (i, j) pairs. Weight lists follow
the order of the edge list as stored by the tree, which sorts each pair so
that i < j but keeps the given edge order.
"""

from ._core import (
    FiedlerError,
    characteristic_set,
    classify_cycle,
    classify_tree,
    contract,
    cycle_inverse,
    series_weight,
    spectrum,
    subdivide,
    tree_inverse,
)

__all__ = [
    "FiedlerError",
    "characteristic_set",
    "classify_cycle",
    "classify_tree",
    "contract",
    "cycle_inverse",
    "series_weight",
    "spectrum",
    "subdivide",
    "tree_inverse",
]
