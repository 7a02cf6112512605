"""
src/arrangements/braid_arrangement.py
S-braid arrangements: hyperplanes x_i - x_j = s with integer offsets.
Input: dimension n and offset sets S_{i,j} (i < j), or ordered triples (i, j, s)
Output: immutable Arrangement with canonical hyperplane list and the S+ / Triple views

Storage convention: every hyperplane is kept as (i, j, s) with i < j.
An ordered triple with i > j is folded through H_{j,i,s} = H_{i,j,-s}.
"""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, Mapping, Optional, Tuple

Hyperplane = Tuple[int, int, int]


class ArrangementError(ValueError):
    """Invalid indices or offsets for an S-braid arrangement."""


def _check_index(n: int, i: int, name: str = "index") -> None:
    if isinstance(i, bool) or not isinstance(i, int):
        raise ArrangementError(f"{name} must be an integer, got {i!r}")
    if not 1 <= i <= n:
        raise ArrangementError(f"{name} {i} is outside [1; {n}]")


def _check_offset(s) -> int:
    if isinstance(s, bool) or not isinstance(s, int):
        raise ArrangementError(f"offset must be an integer, got {s!r}")
    return s


@dataclass(frozen=True)
class Arrangement:
    n: int
    hyperplanes: Tuple[Hyperplane, ...]
    name: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 1:
            raise ArrangementError(f"dimension must be a positive integer, got {self.n!r}")
        for (i, j, s) in self.hyperplanes:
            _check_index(self.n, i)
            _check_index(self.n, j)
            _check_offset(s)
            if i >= j:
                raise ArrangementError(f"stored hyperplane ({i}, {j}, {s}) must have i < j")
        if list(self.hyperplanes) != sorted(set(self.hyperplanes)):
            raise ArrangementError("hyperplane list must be sorted and duplicate-free")

    # ------------------------------------------------------------------
    # Views
    # ------------------------------------------------------------------

    @cached_property
    def offsets(self) -> Dict[Tuple[int, int], FrozenSet[int]]:
        """S_{i,j} for every pair i < j (absent pairs map to the empty set)."""
        table = {(i, j): set() for i in range(1, self.n + 1) for j in range(i + 1, self.n + 1)}
        for (i, j, s) in self.hyperplanes:
            table[(i, j)].add(s)
        return {pair: frozenset(vals) for pair, vals in table.items()}

    @cached_property
    def _splus_table(self) -> Dict[Tuple[int, int], FrozenSet[int]]:
        table = {}
        for (i, j), vals in self.offsets.items():
            table[(i, j)] = frozenset(s for s in vals if s > 0)
            table[(j, i)] = frozenset(-s for s in vals if s <= 0)
        return table

    @cached_property
    def m(self) -> int:
        """Level bound: the largest element of any S+ set, 0 when all are empty."""
        return max((max(vals) for vals in self._splus_table.values() if vals), default=0)

    def __len__(self) -> int:
        return len(self.hyperplanes)

    def splus(self, i: int, j: int) -> FrozenSet[int]:
        _check_index(self.n, i, "i")
        _check_index(self.n, j, "j")
        if i == j:
            raise ArrangementError(f"S+ is undefined for i = j = {i}")
        return self._splus_table[(i, j)]

    def in_triple(self, i: int, j: int, s: int) -> bool:
        """(i, j, s) in Triple_S: s in S+_{i,j}, or s = 0 with i < j."""
        if s < 0:
            raise ArrangementError(f"Triple_S levels are non-negative, got {s}")
        if i == j:
            return False
        return s in self.splus(i, j) or (s == 0 and i < j)

    def contains(self, i: int, j: int, s: int) -> bool:
        """Whether the ordered hyperplane x_i - x_j = s belongs to the arrangement."""
        return _normalize(self.n, i, j, s) in set(self.hyperplanes)

    def with_hyperplane(self, i: int, j: int, s: int, name: Optional[str] = None) -> "Arrangement":
        triple = _normalize(self.n, i, j, s)
        return Arrangement(self.n, tuple(sorted(set(self.hyperplanes) | {triple})), name)

    def without_hyperplane(self, i: int, j: int, s: int, name: Optional[str] = None) -> "Arrangement":
        triple = _normalize(self.n, i, j, s)
        if triple not in set(self.hyperplanes):
            raise ArrangementError(f"hyperplane x_{i} - x_{j} = {s} is not in the arrangement")
        return Arrangement(self.n, tuple(h for h in self.hyperplanes if h != triple), name)

    def describe(self) -> str:
        if not self.hyperplanes:
            return "(no hyperplanes)"
        return ", ".join(f"x{i}-x{j}={s}" for (i, j, s) in self.hyperplanes)


def _normalize(n: int, i: int, j: int, s: int) -> Hyperplane:
    _check_index(n, i, "i")
    _check_index(n, j, "j")
    _check_offset(s)
    if i == j:
        raise ArrangementError(f"hyperplane x_{i} - x_{j} = {s} needs distinct indices")
    if i > j:
        return (j, i, -s)
    return (i, j, s)


def build_from_sets(n: int, sets: Mapping[Tuple[int, int], Iterable[int]],
                    name: Optional[str] = None) -> Arrangement:
    """Arrangement with hyperplanes x_i - x_j = s for s in sets[(i, j)], i < j.

    Duplicate offsets collapse; pairs missing from `sets` are empty.
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ArrangementError(f"dimension must be a positive integer, got {n!r}")
    triples = set()
    for key, values in sets.items():
        try:
            i, j = key
        except (TypeError, ValueError):
            raise ArrangementError(f"offset key must be a pair (i, j), got {key!r}")
        _check_index(n, i, "i")
        _check_index(n, j, "j")
        if i >= j:
            raise ArrangementError(f"offset key ({i}, {j}) must satisfy i < j")
        for s in values:
            triples.add((i, j, _check_offset(s)))
    return Arrangement(n, tuple(sorted(triples)), name)


def build_from_hyperplanes(n: int, triples: Iterable[Hyperplane],
                           name: Optional[str] = None) -> Arrangement:
    """Arrangement from ordered triples (i, j, s), i != j; i > j is folded to i < j."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ArrangementError(f"dimension must be a positive integer, got {n!r}")
    return Arrangement(n, tuple(sorted({_normalize(n, i, j, s) for (i, j, s) in triples})), name)


def ordered_pairs(n: int):
    """All (i, j) with i != j in [n], in lexicographic order."""
    return [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
