"""
src/regions/compute_labeling.py
Regions of A_S and their generalized Pak-Stanley labels.
Input: Arrangement
Output: RegionTable (regions, labels, witness sketches, fiber sizes) and LabelingReport

Method:
  1) enumerate all (m,n)-sketches and group them by sign vector; each group is one region
  2) label each region by counting separating hyperplanes against the base region
  3) cross-check every sketch: phi(w) must equal the label of its region
"""

from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

import pandas as pd

from src.arrangements.braid_arrangement import Arrangement
from src.parking.d_graph import build_d_graph
from src.parking.parking_functions import ParkingFunction, enumerate_parking
from src.psi.psi_inverse import phi
from src.regions.sign_vectors import Region, base_region, sign_vector
from src.sketches.enumerate_sketches import enumerate_sketches
from src.sketches.sketch import Sketch
from src.utils.log_utils import get_logger

logger = get_logger("regions")


class LabelMismatchError(RuntimeError):
    """Separation count and phi disagree on some sketch."""


def gps_label(A: Arrangement, R: Region) -> ParkingFunction:
    R.check(A)
    base = base_region(A)
    label = [0] * A.n
    for (i, j, s), sign, base_sign in zip(A.hyperplanes, R.signs, base.signs):
        if sign == base_sign:
            continue
        # s > 0: s in S+_{i,j}; s <= 0: -s in S+_{j,i}
        owner = i if s > 0 else j
        label[owner - 1] += 1
    return tuple(label)


@dataclass
class RegionTable:
    arrangement: Arrangement
    regions: List[Region]
    label_of: Dict[Region, ParkingFunction]
    witness_sketch: Dict[Region, Sketch]
    fibers: Dict[Region, int] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.regions)

    def labels(self) -> List[ParkingFunction]:
        return [self.label_of[R] for R in self.regions]

    def regions_with_label(self, p) -> List[Region]:
        p = tuple(p)
        return [R for R in self.regions if self.label_of[R] == p]

    def to_frame(self) -> pd.DataFrame:
        rows = []
        for R in self.regions:
            rows.append({
                "signs": R.render(),
                "label": self.label_of[R],
                "witness": self.witness_sketch[R].render(),
                "fiber_size": self.fibers.get(R, 0),
            })
        return pd.DataFrame(rows, columns=["signs", "label", "witness", "fiber_size"])


def enumerate_regions(A: Arrangement) -> RegionTable:
    witness: Dict[Region, Sketch] = {}
    fibers: Counter = Counter()
    by_sketch: List[Tuple[Sketch, Region]] = []

    for w in enumerate_sketches(A.m, A.n):
        R = sign_vector(w, A)
        if R not in witness:
            witness[R] = w
        fibers[R] += 1
        by_sketch.append((w, R))

    regions = sorted(witness)
    label_of = {R: gps_label(A, R) for R in regions}

    for w, R in by_sketch:
        via_phi = phi(A, w)
        if via_phi != label_of[R]:
            raise LabelMismatchError(
                f"{A.describe()}: sketch {w} has phi {via_phi} but its region is labeled {label_of[R]}"
            )

    logger.debug("%s: %d sketches, %d regions", A.name or A.describe(), len(by_sketch), len(regions))
    return RegionTable(A, regions, label_of, witness, dict(fibers))


@dataclass
class LabelingReport:
    n_regions: int
    n_labels: int
    n_parking: int
    injective: bool
    surjective: bool
    bijective: bool
    duplicated_labels: Dict[ParkingFunction, int]
    missing_labels: List[ParkingFunction]

    def to_dict(self) -> dict:
        return {
            "regions": self.n_regions,
            "distinct_labels": self.n_labels,
            "parking_functions": self.n_parking,
            "injective": self.injective,
            "surjective": self.surjective,
            "bijective": self.bijective,
            "duplicated_labels": {",".join(map(str, p)): c for p, c in self.duplicated_labels.items()},
            "missing_labels": [list(p) for p in self.missing_labels],
        }


def labeling_report(A: Arrangement, table: RegionTable = None) -> LabelingReport:
    table = table if table is not None else enumerate_regions(A)
    counts = Counter(table.labels())
    park = enumerate_parking(build_d_graph(A))

    injective = len(counts) == len(table)
    surjective = set(counts) == set(park)
    if not surjective:
        logger.warning("%s: label set differs from the parking functions", A.name or A.describe())
    return LabelingReport(
        n_regions=len(table),
        n_labels=len(counts),
        n_parking=len(park),
        injective=injective,
        surjective=surjective,
        bijective=injective and surjective,
        duplicated_labels={p: c for p, c in sorted(counts.items()) if c > 1},
        missing_labels=sorted(set(park) - set(counts)),
    )
