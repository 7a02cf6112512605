"""
src/arrangements/properties.py
Combinatorial properties of S-braid arrangements: transitivity, (X), (Y),
and the graphical-arrangement pattern conditions.
Input: Arrangement
Output: booleans (and, for transitivity, an optional violating witness)
"""

import itertools
from typing import Optional, Tuple

from src.arrangements.braid_arrangement import Arrangement


def transitivity_witness(A: Arrangement) -> Optional[Tuple[int, int, int, int, int]]:
    """First (i, j, k, s, t) with (i,j,s), (j,k,t) outside Triple_S and (i,k,s+t) inside.

    Only s + t <= m is scanned: (i, k, s+t) in Triple_S forces s + t <= m.
    """
    n, m = A.n, A.m
    for i, j, k in itertools.permutations(range(1, n + 1), 3):
        for s in range(m + 1):
            if A.in_triple(i, j, s):
                continue
            for t in range(m - s + 1):
                if not A.in_triple(j, k, t) and A.in_triple(i, k, s + t):
                    return (i, j, k, s, t)
    return None


def is_transitive(A: Arrangement) -> bool:
    return transitivity_witness(A) is None


def holds_x(A: Arrangement) -> bool:
    """(X): for i < j and k not in {i, j}, every s in S+_{j,k} lies in S+_{i,k}
    or has s = 0 and i < k."""
    n = A.n
    for i, j in itertools.combinations(range(1, n + 1), 2):
        for k in range(1, n + 1):
            if k in (i, j):
                continue
            for s in A.splus(j, k):
                if s not in A.splus(i, k) and not (s == 0 and i < k):
                    return False
    return True


def holds_y(A: Arrangement) -> bool:
    """(Y): for s >= 0 with s > 0 or j < i, s not in S+_{i,j} forces
    s + t not in S+_{k,j} for every t > 0 and k != i."""
    n, m = A.n, A.m
    for i, j in itertools.permutations(range(1, n + 1), 2):
        for s in range(m + 1):
            if s == 0 and not j < i:
                continue
            if s in A.splus(i, j):
                continue
            for k in range(1, n + 1):
                if k in (i, j):
                    continue
                if any(s + t in A.splus(k, j) for t in range(1, m - s + 1)):
                    return False
    return True


def is_graphical(A: Arrangement) -> bool:
    return all(s == 0 for (_, _, s) in A.hyperplanes)


def _has(A: Arrangement, i: int, j: int) -> bool:
    return A.contains(i, j, 0)


# Graphical patterns, indices i < j < k. Written for the S+ orientation used here
# (0 in S+_{i,j} iff i > j and x_i = x_j is present), so A1 = {H_{1,3,0}, H_{2,3,0}}
# is the forbidden shape of the bijectivity pattern.


def holds_graphical_x_pattern(A: Arrangement) -> bool:
    """No i < j < k with H_{i,j,0} absent and H_{i,k,0} present; equals (X) on graphical A."""
    return not any(
        not _has(A, i, j) and _has(A, i, k)
        for i, j, k in itertools.combinations(range(1, A.n + 1), 3)
    )


def holds_graphical_transitive_pattern(A: Arrangement) -> bool:
    """No i < j < k with H_{i,j,0}, H_{j,k,0} absent and H_{i,k,0} present."""
    return not any(
        not _has(A, i, j) and not _has(A, j, k) and _has(A, i, k)
        for i, j, k in itertools.combinations(range(1, A.n + 1), 3)
    )


def holds_mazin_miller_pattern(A: Arrangement) -> bool:
    """No i < j < k with H_{i,j,0} absent, H_{j,k,0} present and H_{i,k,0} present.

    On graphical arrangements this is equivalent to a bijective labeling.
    """
    return not any(
        not _has(A, i, j) and _has(A, j, k) and _has(A, i, k)
        for i, j, k in itertools.combinations(range(1, A.n + 1), 3)
    )
