"""src.psi package

phi, the right inverse psi with its state traces, and the sets N_S, M_S, L_S.
"""

__all__ = [
    "psi_inverse",
]
