"""
src/sketches/local_maximality.py
Membership in L_S (S-locally maximal sketches) and M_S (every a_j^s a_i^0 adjacency
lies in Triple_S).
"""

from typing import Dict, Iterator, Tuple

from src.arrangements.braid_arrangement import Arrangement
from src.sketches.sketch import Sketch, check_bound


def zero_adjacencies(w: Sketch) -> Iterator[Tuple[int, int, int]]:
    """(i, j, s) for every place where a_j^s is immediately followed by a_i^0."""
    for left, right in zip(w.word, w.word[1:]):
        if right.level == 0:
            yield right.index, left.index, left.level


def in_l(w: Sketch, A: Arrangement) -> bool:
    check_bound(w, A.m)
    top: Dict[int, Tuple[int, int]] = {}
    for i, j, s in zero_adjacencies(w):
        if j not in top or s > top[j][1]:
            top[j] = (i, s)
    return all(A.in_triple(i, j, s) for j, (i, s) in top.items())


def in_m(w: Sketch, A: Arrangement) -> bool:
    check_bound(w, A.m)
    return all(A.in_triple(i, j, s) for i, j, s in zero_adjacencies(w))
