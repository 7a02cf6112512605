"""src.sketches package

(m,n)-sketches: validation, enumeration and the local-maximality predicates.
"""

__all__ = [
    "sketch",
    "enumerate_sketches",
    "local_maximality",
]
