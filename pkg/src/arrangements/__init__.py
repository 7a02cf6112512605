"""src.arrangements package

S-braid arrangements, (m, eps)-arrangements and their combinatorial properties.
"""

__all__ = [
    "braid_arrangement",
    "m_eps",
    "properties",
    "catalog",
]
