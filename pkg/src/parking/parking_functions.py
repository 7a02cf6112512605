"""
src/parking/parking_functions.py
D-parking functions on a rooted directed multigraph.

- is_parking_naive: the subset definition (every non-empty U in [n] has some u with
  p_u < #arcs from u leaving U), all 2^n - 1 subsets.
- is_parking_burning: burn the root, then repeatedly burn u with p_u < #arcs from u
  into the burned set; parking iff everything burns.
- count_parking_determinant: matrix-tree count of spanning arborescences toward the root,
  det of L = diag(outdeg) - mult with the root row and column removed.
  Frozen convention (checked against enumerate_parking on every battery graph):
  out-degree Laplacian, rows are arc tails.
"""

import itertools
from typing import FrozenSet, List, Sequence, Tuple

import numpy as np

from src.parking.d_graph import DirectedMultigraph

ParkingFunction = Tuple[int, ...]


class NotParkingError(ValueError):
    """Tuple rejected as a D-parking function; carries the final burned set."""

    def __init__(self, p, burned):
        self.p = tuple(p)
        self.burned = frozenset(burned)
        unburned = sorted(set(range(1, len(self.p) + 1)) - self.burned)
        super().__init__(
            f"{self.p} is not a parking function: burning stalls with vertices {unburned} unburned"
        )


def _check_tuple(D: DirectedMultigraph, p: Sequence[int]) -> Tuple[int, ...]:
    p = tuple(p)
    if len(p) != D.n:
        raise ValueError(f"tuple has length {len(p)}, expected {D.n}")
    if any(x < 0 for x in p):
        raise ValueError(f"tuple {p} has negative entries")
    return p


def is_parking_naive(D: DirectedMultigraph, p: Sequence[int]) -> bool:
    p = _check_tuple(D, p)
    n = D.n
    mult = D.mult
    for size in range(1, n + 1):
        for subset in itertools.combinations(range(n), size):
            inside = set(subset)
            if not any(
                p[u] < int(mult[u].sum()) - sum(int(mult[u, v]) for v in inside)
                for u in subset
            ):
                return False
    return True


def burn(D: DirectedMultigraph, p: Sequence[int]) -> FrozenSet[int]:
    """Vertices (1-based, root included) burned when the process stalls."""
    p = _check_tuple(D, p)
    n = D.n
    mult = D.mult
    burned = {n}
    changed = True
    while changed:
        changed = False
        for u in range(n):
            if u in burned:
                continue
            if p[u] < sum(int(mult[u, v]) for v in burned):
                burned.add(u)
                changed = True
    return frozenset(v + 1 for v in burned)


def is_parking_burning(D: DirectedMultigraph, p: Sequence[int]) -> bool:
    return len(burn(D, p)) == D.n_plus_root


def require_parking(D: DirectedMultigraph, p: Sequence[int]) -> ParkingFunction:
    burned = burn(D, p)
    if len(burned) != D.n_plus_root:
        raise NotParkingError(p, burned - {D.root})
    return tuple(p)


def candidate_tuples(D: DirectedMultigraph):
    """Tuples with p_i in [0; outdeg(i) - 1] (U = {i} forces p_i < outdeg(i))."""
    return itertools.product(*(range(d) for d in D.out_degrees()))


def enumerate_parking(D: DirectedMultigraph) -> List[ParkingFunction]:
    """All D-parking functions in lexicographic order."""
    return [p for p in candidate_tuples(D) if is_parking_burning(D, p)]


def reduced_laplacian(D: DirectedMultigraph) -> np.ndarray:
    mult = D.mult.astype(object)
    laplacian = np.diag(mult.sum(axis=1)) - mult
    return laplacian[: D.n, : D.n]


def _bareiss_determinant(matrix: np.ndarray) -> int:
    """Exact integer determinant by fraction-free elimination."""
    a = np.array(matrix, dtype=object)
    size = a.shape[0]
    if size == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(size - 1):
        if a[k, k] == 0:
            swap = next((r for r in range(k + 1, size) if a[r, k] != 0), None)
            if swap is None:
                return 0
            a[[k, swap]] = a[[swap, k]]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i, j] = (a[i, j] * a[k, k] - a[i, k] * a[k, j]) // prev
        prev = a[k, k]
    return sign * int(a[size - 1, size - 1])


def count_parking_determinant(D: DirectedMultigraph) -> int:
    return _bareiss_determinant(reduced_laplacian(D))
