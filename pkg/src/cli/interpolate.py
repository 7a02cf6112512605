"""
src/cli/interpolate.py
From the (m-1)-Catalan arrangement to the m-Catalan arrangement one hyperplane at a time,
staying inside the (m, eps) family.

Candidates are x_i - x_j = m, tried with column j from n down to 1 and i increasing;
each step adds the first candidate that keeps the arrangement recognizable.
For n = 3, m = 1 this adds x1-x3, x2-x3, x1-x2, x3-x2, x2-x1, x3-x1 (all = 1).
"""

from dataclasses import dataclass
from typing import List, Optional

import pandas as pd

from src.arrangements.braid_arrangement import Arrangement, Hyperplane
from src.arrangements.catalog import m_catalan
from src.arrangements.m_eps import recognize_m_eps
from src.cli.render_svg import UnsupportedDimensionError
from src.parking.d_graph import build_d_graph
from src.parking.parking_functions import count_parking_determinant
from src.regions.compute_labeling import labeling_report
from src.utils.log_utils import get_logger

# --- CONFIG ---
MIN_N = 2
MAX_N = 4

logger = get_logger("interpolate")


@dataclass
class InterpolationStep:
    index: int
    added: Optional[Hyperplane]
    arrangement: Arrangement
    regions: int
    determinant: int
    recognized: bool
    bijective: bool

    @property
    def ok(self) -> bool:
        return self.recognized and self.bijective and self.regions == self.determinant


def candidate_order(n: int, m: int) -> List[Hyperplane]:
    """Ordered triples (i, j, m): column j from n down to 1, then i increasing."""
    return [(i, j, m) for j in range(n, 0, -1) for i in range(1, n + 1) if i != j]


def _step(index: int, added, A: Arrangement) -> InterpolationStep:
    report = labeling_report(A)
    return InterpolationStep(
        index=index,
        added=added,
        arrangement=A,
        regions=report.n_regions,
        determinant=count_parking_determinant(build_d_graph(A)),
        recognized=recognize_m_eps(A) is not None,
        bijective=report.bijective,
    )


def interpolate(n: int, m: int) -> List[InterpolationStep]:
    if not MIN_N <= n <= MAX_N:
        raise UnsupportedDimensionError(f"interpolation supports {MIN_N} <= n <= {MAX_N}, got n = {n}")
    if m < 1:
        raise ValueError(f"m must be at least 1, got {m}")

    A = m_catalan(n, m - 1)
    steps = [_step(0, None, A)]
    remaining = candidate_order(n, m)
    while remaining:
        for h in remaining:
            nxt = A.with_hyperplane(*h, name=f"step-{len(steps)}")
            if recognize_m_eps(nxt) is not None:
                break
        else:
            raise RuntimeError(f"no candidate keeps {A.describe()} in the (m, eps) family")
        remaining.remove(h)
        A = nxt
        steps.append(_step(len(steps), h, A))
        logger.debug("step %d: added x%d - x%d = %d", len(steps) - 1, *h)
    return steps


def steps_to_frame(steps: List[InterpolationStep]) -> pd.DataFrame:
    return pd.DataFrame([
        {
            "step": s.index,
            "added": "" if s.added is None else f"x{s.added[0]}-x{s.added[1]}={s.added[2]}",
            "hyperplanes": len(s.arrangement),
            "regions": s.regions,
            "determinant": s.determinant,
            "recognized": s.recognized,
            "bijective": s.bijective,
        }
        for s in steps
    ])
