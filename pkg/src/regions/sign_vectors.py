"""
src/regions/sign_vectors.py
Regions of an S-braid arrangement as sign vectors.
Input: Sketch + Arrangement
Output: Region (one sign per stored hyperplane (i, j, s), i < j)

BELOW means x_i - x_j < s on the region, ABOVE means x_i - x_j > s.
No coordinates are ever computed; every sign vector comes from a sketch.
"""

from dataclasses import dataclass
from typing import Tuple

from src.arrangements.braid_arrangement import Arrangement
from src.sketches.enumerate_sketches import fundamental_sketch
from src.sketches.sketch import Letter, Sketch, check_bound

BELOW = -1
ABOVE = 1


class RegionError(ValueError):
    """Sign vector that does not fit the arrangement."""


@dataclass(frozen=True, order=True)
class Region:
    signs: Tuple[int, ...]

    def __len__(self) -> int:
        return len(self.signs)

    def render(self) -> str:
        return "".join("-" if x == BELOW else "+" for x in self.signs) or "()"

    def check(self, A: Arrangement) -> None:
        if len(self.signs) != len(A.hyperplanes):
            raise RegionError(
                f"sign vector has {len(self.signs)} entries, arrangement has {len(A.hyperplanes)} hyperplanes"
            )
        if any(x not in (BELOW, ABOVE) for x in self.signs):
            raise RegionError(f"sign vector {self.signs} has entries other than -1/+1")


def _side(w: Sketch, i: int, j: int, s: int) -> int:
    if s >= 0:
        return BELOW if w.before(Letter(i, 0), Letter(j, s)) else ABOVE
    return ABOVE if w.before(Letter(j, 0), Letter(i, -s)) else BELOW


def sign_vector(w: Sketch, A: Arrangement) -> Region:
    check_bound(w, A.m)
    return Region(tuple(_side(w, i, j, s) for (i, j, s) in A.hyperplanes))


def base_region(A: Arrangement) -> Region:
    """Region containing the fundamental alcove: below exactly the hyperplanes with s >= 1."""
    return sign_vector(fundamental_sketch(A.m, A.n), A)
