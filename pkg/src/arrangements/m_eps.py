"""
src/arrangements/m_eps.py
(m, eps)-arrangements: construction from level data and recognition.
Input: MEpsData (m_1..m_n, eps_{i,j} in {0,1}) or an Arrangement
Output: the S-braid arrangement with S+_{i,j} = [1; m_j - eps_{i,j}] (i<j),
        [0; m_j - eps_{i,j}] (i>j); or the smallest witness recognizing one
"""

import itertools
from dataclasses import dataclass
from typing import Dict, Mapping, Optional, Tuple

from src.arrangements.braid_arrangement import (
    Arrangement,
    build_from_hyperplanes,
    ordered_pairs,
)


class MEpsError(ValueError):
    """Level data violating the (m, eps) conditions."""


def _check_int(value, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise MEpsError(f"{what} must be an integer, got {value!r}")
    return value


@dataclass(frozen=True)
class MEpsData:
    m: Tuple[int, ...]
    eps: Tuple[Tuple[Tuple[int, int], int], ...]

    @classmethod
    def from_partial(cls, m, eps: Optional[Mapping[Tuple[int, int], int]] = None) -> "MEpsData":
        """Build from m and a sparse eps map; missing ordered pairs default to 0."""
        n = len(m)
        eps = dict(eps or {})
        for key in eps:
            if key not in set(ordered_pairs(n)):
                raise MEpsError(f"eps key {key!r} is not an ordered pair of distinct indices in [{n}]")
        full = tuple(
            ((i, j), _check_int(eps.get((i, j), 0), f"eps_{i},{j}")) for (i, j) in ordered_pairs(n)
        )
        return cls(tuple(_check_int(x, f"m_{k}") for k, x in enumerate(m, start=1)), full)

    @property
    def n(self) -> int:
        return len(self.m)

    @property
    def eps_map(self) -> Dict[Tuple[int, int], int]:
        return dict(self.eps)

    def validate(self) -> None:
        n = self.n
        if n < 1:
            raise MEpsError("m must have at least one entry")
        for k, mk in enumerate(self.m, start=1):
            if _check_int(mk, f"m_{k}") < 0:
                raise MEpsError(f"m_{k} = {mk} is negative")
        eps = self.eps_map
        if set(eps) != set(ordered_pairs(n)):
            raise MEpsError("eps must be given for every ordered pair i != j")
        for key, value in eps.items():
            if _check_int(value, f"eps_{key[0]},{key[1]}") not in (0, 1):
                raise MEpsError(f"eps_{key[0]},{key[1]} = {value} is not 0 or 1")
        for k in range(1, n + 1):
            others = [ell for ell in range(1, n + 1) if ell != k]
            for i, j in itertools.combinations(others, 2):
                if eps[(i, k)] > eps[(j, k)]:
                    raise MEpsError(
                        f"eps_{i},{k} = 1 > eps_{j},{k} = 0 breaks monotonicity (i < j)"
                    )

    def nonzero_eps(self) -> Dict[str, int]:
        return {f"{i},{j}": v for (i, j), v in self.eps if v}


def build_from_m_eps(data: MEpsData, name: Optional[str] = None) -> Arrangement:
    data.validate()
    n = data.n
    triples = []
    for (i, j), e in data.eps:
        top = data.m[j - 1] - e
        low = 1 if i < j else 0
        # s in S+_{i,j} is the ordered hyperplane x_i - x_j = s
        triples.extend((i, j, s) for s in range(low, top + 1))
    return build_from_hyperplanes(n, triples, name)


def _column_tops(A: Arrangement, k: int) -> Optional[Dict[int, int]]:
    """Top of the interval S+_{l,k} for every l != k, or None when some set is not
    an interval starting at its forced lower end (1 for l < k, 0 for l > k)."""
    tops = {}
    for ell in range(1, A.n + 1):
        if ell == k:
            continue
        low = 1 if ell < k else 0
        vals = A.splus(ell, k)
        top = max(vals) if vals else low - 1
        if set(vals) != set(range(low, top + 1)):
            return None
        tops[ell] = top
    return tops


def recognize_m_eps(A: Arrangement) -> Optional[MEpsData]:
    """Smallest (m, eps) witness for A, or None.

    Column k is handled on its own: each S+_{l,k} must be [low; top_l], the tops
    must fit m_k - eps_{l,k} with eps in {0,1}, and tops must be non-increasing in l
    (eps monotonicity). The smallest admissible m_k is chosen.
    """
    n = A.n
    m = []
    eps = {}
    for k in range(1, n + 1):
        tops = _column_tops(A, k)
        if tops is None:
            return None
        if not tops:
            m.append(0)
            continue
        hi, lo = max(tops.values()), min(tops.values())
        mk = max(hi, 0)
        if mk > lo + 1:
            return None
        order = sorted(tops)
        if any(tops[a] < tops[b] for a, b in zip(order, order[1:])):
            return None
        m.append(mk)
        for ell, top in tops.items():
            eps[(ell, k)] = mk - top
    data = MEpsData.from_partial(m, eps)
    data.validate()
    return data


def recognize_m_eps_brute_force(A: Arrangement) -> Optional[MEpsData]:
    """Exhaustive oracle: m_k in [0; m+1], every eps in {0,1}; smallest witness first."""
    n = A.n
    pairs = ordered_pairs(n)
    target = set(A.hyperplanes)
    for m in itertools.product(range(A.m + 2), repeat=n):
        for bits in itertools.product((0, 1), repeat=len(pairs)):
            data = MEpsData(tuple(m), tuple(zip(pairs, bits)))
            try:
                candidate = build_from_m_eps(data)
            except MEpsError:
                continue
            if set(candidate.hyperplanes) == target:
                return data
    return None
