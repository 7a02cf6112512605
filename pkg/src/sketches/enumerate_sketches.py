"""
src/sketches/enumerate_sketches.py
Exhaustive generation of (m,n)-sketches.

Backtracking over the two legal moves: start a fresh index i (emit a_i^0) or pop the
FIFO queue of started-but-unfinished indices (emit its next level). The third sketch
condition forces letters of level >= 1 into first-in-first-out order, so these moves
reach every sketch exactly once.
"""

import itertools
from functools import lru_cache
from typing import Iterator, List, Tuple

from src.sketches.sketch import Letter, Sketch, SketchError, validate_sketch


def _extend(m: int, n: int, prefix: Tuple[Letter, ...], started: Tuple[bool, ...],
            queue: Tuple[Tuple[int, int], ...]) -> Iterator[Tuple[Letter, ...]]:
    if len(prefix) == (m + 1) * n:
        yield prefix
        return

    # fresh starts first, increasing index
    for i in range(1, n + 1):
        if started[i - 1]:
            continue
        nxt_started = started[:i - 1] + (True,) + started[i:]
        nxt_queue = queue + ((i, 1),) if m > 0 else queue
        yield from _extend(m, n, prefix + (Letter(i, 0),), nxt_started, nxt_queue)

    if queue:
        (k, level), rest = queue[0], queue[1:]
        nxt_queue = rest + ((k, level + 1),) if level < m else rest
        yield from _extend(m, n, prefix + (Letter(k, level),), started, nxt_queue)


@lru_cache(maxsize=None)
def _cached_sketches(m: int, n: int) -> Tuple[Sketch, ...]:
    return tuple(Sketch(word, m, n) for word in _extend(m, n, (), (False,) * n, ()))


def enumerate_sketches(m: int, n: int) -> Tuple[Sketch, ...]:
    """Every (m,n)-sketch once, in deterministic order (cached per (m, n))."""
    if m < 0 or n < 1:
        raise ValueError(f"need m >= 0 and n >= 1, got m={m}, n={n}")
    return _cached_sketches(m, n)


def fundamental_sketch(m: int, n: int) -> Sketch:
    """a_n^0 ... a_1^0 a_n^1 ... a_1^1 ... a_n^m ... a_1^m."""
    if m < 0 or n < 1:
        raise ValueError(f"need m >= 0 and n >= 1, got m={m}, n={n}")
    word = tuple(Letter(i, s) for s in range(m + 1) for i in range(n, 0, -1))
    return Sketch(word, m, n)


def brute_force_sketches(m: int, n: int) -> List[Sketch]:
    """All letter orderings passing validate_sketch; factorial cost, small cases only."""
    letters = [Letter(i, s) for i in range(1, n + 1) for s in range(m + 1)]
    found = []
    for word in itertools.permutations(letters):
        try:
            found.append(validate_sketch(word, m, n))
        except SketchError:
            continue
    return found
