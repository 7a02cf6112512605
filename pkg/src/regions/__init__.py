"""src.regions package

Regions as sign vectors, the generalized Pak-Stanley labels and labeling reports.
"""

__all__ = [
    "sign_vectors",
    "compute_labeling",
]
