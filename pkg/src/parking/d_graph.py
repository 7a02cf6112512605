"""
src/parking/d_graph.py
The directed multigraph D_S on vertices 1..n+1 (root n+1).
Input: Arrangement
Output: DirectedMultigraph with mult[u][v] = number of arcs u -> v
        (|S+_{i,j}| arcs i -> j and one arc i -> n+1)

Vertices are 1-based in the API; the numpy matrix is 0-based (vertex v at row v-1).
"""

from dataclasses import dataclass

import numpy as np
import pandas as pd

from src.arrangements.braid_arrangement import Arrangement


@dataclass(frozen=True, eq=False)
class DirectedMultigraph:
    n_plus_root: int
    mult: np.ndarray

    def __post_init__(self):
        mult = np.array(self.mult, dtype=np.int64)
        size = self.n_plus_root
        if mult.shape != (size, size):
            raise ValueError(f"multiplicity matrix must be {size}x{size}, got {mult.shape}")
        if (mult < 0).any():
            raise ValueError("arc multiplicities must be non-negative")
        if np.diag(mult).any():
            raise ValueError("loops are not allowed (mult[u][u] must be 0)")
        mult.setflags(write=False)
        object.__setattr__(self, "mult", mult)

    @property
    def n(self) -> int:
        return self.n_plus_root - 1

    @property
    def root(self) -> int:
        return self.n_plus_root

    def arcs(self, u: int, v: int) -> int:
        return int(self.mult[u - 1, v - 1])

    def out_degree(self, u: int) -> int:
        return int(self.mult[u - 1].sum())

    def out_degrees(self):
        return tuple(int(x) for x in self.mult[: self.n].sum(axis=1))

    def __eq__(self, other):
        if not isinstance(other, DirectedMultigraph):
            return NotImplemented
        return self.n_plus_root == other.n_plus_root and np.array_equal(self.mult, other.mult)

    def __hash__(self):
        return hash((self.n_plus_root, self.mult.tobytes()))

    def to_frame(self) -> pd.DataFrame:
        labels = [str(v) for v in range(1, self.n_plus_root)] + ["root"]
        return pd.DataFrame(self.mult, index=labels, columns=labels)


def build_d_graph(A: Arrangement) -> DirectedMultigraph:
    n = A.n
    mult = np.zeros((n + 1, n + 1), dtype=np.int64)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j:
                mult[i - 1, j - 1] = len(A.splus(i, j))
        mult[i - 1, n] = 1
    return DirectedMultigraph(n + 1, mult)
