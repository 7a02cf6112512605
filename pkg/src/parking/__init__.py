"""src.parking package

The multigraph D_S, parking-function predicates, enumeration and determinant counts.
"""

__all__ = [
    "d_graph",
    "parking_functions",
]
