"""
src/cli/render_svg.py
SVG picture of an n=3 arrangement on the plane x1 + x2 + x3 = 0, with region labels.

Plane coordinates (a, b) stand for a*(1,-1,0) + b*(1,1,-2), so
  x1 - x2 = 2a,   x1 - x3 = a + 3b,   x2 - x3 = -a + 3b.
Cells are cut out of the window [-W, W]^2 (W = 2(m+1)) with exact Fractions, one
half-plane split per hyperplane. Each cell's sign vector is read at its vertex
centroid and its label comes from the RegionTable, never recomputed here.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import Polygon as PolygonPatch  # noqa: E402

from src.arrangements.braid_arrangement import Arrangement
from src.regions.compute_labeling import RegionTable, enumerate_regions
from src.regions.sign_vectors import ABOVE, BELOW, Region, base_region
from src.utils.log_utils import get_logger

# --- CONFIG ---
WINDOW_FACTOR = 2
FIGURE_SIZE = 6
BASE_COLOR = "#d9d9d9"
LINE_COLOR = "#1f3b73"

logger = get_logger("svg")

Point = Tuple[Fraction, Fraction]

# (1,-1,0) and (1,1,-2) have lengths in ratio 1 : sqrt(3)
Y_SCALE = math.sqrt(3)

# coefficients of x_i - x_j in (a, b)
PAIR_COEFFS = {(1, 2): (2, 0), (1, 3): (1, 3), (2, 3): (-1, 3)}


class UnsupportedDimensionError(ValueError):
    """Operation only defined for some dimensions n."""


@dataclass
class Cell:
    vertices: List[Point]
    region: Region
    label: Optional[Tuple[int, ...]]

    @property
    def centroid(self) -> Point:
        k = len(self.vertices)
        return (sum(v[0] for v in self.vertices) / k, sum(v[1] for v in self.vertices) / k)


def window_size(A: Arrangement) -> int:
    return WINDOW_FACTOR * (A.m + 1)


def _value(h, point: Point) -> Fraction:
    i, j, s = h
    ca, cb = PAIR_COEFFS[(i, j)]
    return ca * point[0] + cb * point[1] - s


def _clip(polygon: Sequence[Point], h, keep_below: bool) -> List[Point]:
    """Part of a convex polygon on one side of x_i - x_j = s (closed half-plane)."""
    out: List[Point] = []
    sign = -1 if keep_below else 1
    k = len(polygon)
    for idx in range(k):
        p, q = polygon[idx], polygon[(idx + 1) % k]
        fp, fq = sign * _value(h, p), sign * _value(h, q)
        if fp >= 0:
            out.append(p)
        if (fp > 0 > fq) or (fp < 0 < fq):
            t = fp / (fp - fq)
            out.append((p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])))
    deduped = []
    for v in out:
        if not deduped or deduped[-1] != v:
            deduped.append(v)
    if len(deduped) > 1 and deduped[0] == deduped[-1]:
        deduped.pop()
    return deduped


def _area2(polygon: Sequence[Point]) -> Fraction:
    k = len(polygon)
    return sum(
        polygon[i][0] * polygon[(i + 1) % k][1] - polygon[(i + 1) % k][0] * polygon[i][1]
        for i in range(k)
    )


def compute_cells(A: Arrangement, table: Optional[RegionTable] = None) -> List[Cell]:
    if A.n != 3:
        raise UnsupportedDimensionError(f"pictures are drawn for n = 3 only, got n = {A.n}")
    table = table if table is not None else enumerate_regions(A)

    W = Fraction(window_size(A))
    pieces = [[(-W, -W), (W, -W), (W, W), (-W, W)]]
    for h in A.hyperplanes:
        split = []
        for poly in pieces:
            for keep_below in (True, False):
                part = _clip(poly, h, keep_below)
                if len(part) >= 3 and _area2(part) != 0:
                    split.append(part)
        pieces = split

    cells = []
    for poly in pieces:
        center = (sum(v[0] for v in poly) / len(poly), sum(v[1] for v in poly) / len(poly))
        region = Region(tuple(BELOW if _value(h, center) < 0 else ABOVE for h in A.hyperplanes))
        label = table.label_of.get(region)
        if label is None:
            logger.warning("cell at %s has sign vector %s outside the region table", center, region.render())
        cells.append(Cell(poly, region, label))

    if len({c.region for c in cells}) != len(table):
        logger.warning("%d regions in the table but %d cells in the window", len(table), len(cells))
    return cells


def _label_text(label) -> str:
    if label is None:
        return "?"
    if all(x < 10 for x in label):
        return "".join(str(x) for x in label)
    return ",".join(str(x) for x in label)


def render_arrangement_svg(A: Arrangement, out_path, table: Optional[RegionTable] = None) -> List[Cell]:
    """Draw A (n = 3) to an SVG file; returns the labeled cells that were drawn."""
    cells = compute_cells(A, table)
    base = base_region(A)
    W = window_size(A)

    fig, ax = plt.subplots(figsize=(FIGURE_SIZE, FIGURE_SIZE))
    for cell in cells:
        xy = [(float(a), float(b) * Y_SCALE) for a, b in cell.vertices]
        color = BASE_COLOR if cell.region == base else "white"
        ax.add_patch(PolygonPatch(xy, closed=True, facecolor=color, edgecolor=LINE_COLOR, linewidth=1.0))
        cx, cy = cell.centroid
        ax.text(float(cx), float(cy) * Y_SCALE, _label_text(cell.label), ha="center", va="center", fontsize=8)

    ax.set_xlim(-W, W)
    ax.set_ylim(-W * Y_SCALE, W * Y_SCALE)
    ax.set_aspect("equal")
    ax.set_axis_off()
    ax.set_title(A.name or A.describe(), fontsize=9)

    out_path = Path(out_path)
    out_path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(out_path, format="svg")
    plt.close(fig)
    logger.info("wrote %s (%d cells)", out_path, len(cells))
    return cells
