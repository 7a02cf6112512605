"""src.utils package

Shared helpers (logging setup) for the arrangement tools.
"""

__all__ = [
    "log_utils",
]
