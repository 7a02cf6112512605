"""
src/cli/verify_battery.py
Invariant suite for one arrangement, and the batteries it is run over.

Batteries:
  - every n=3 arrangement with S_{i,j} inside an offset range (default [-2; 2], 32768 of them),
    or a deterministic subsample of it
  - random (m, eps)-arrangements for n=4 with m_j <= 2
  - the named catalog (1-Shi, 1-Catalan, 2-Shi, the worked examples)

Usage:
  python -m src.cli.main verify --battery --sample 500 --jobs 4 --out data/battery.parquet
"""

import itertools
import random
import time
from typing import Dict, Iterable, List, Optional, Sequence

import joblib
import pandas as pd
from tqdm import tqdm

from src.arrangements.braid_arrangement import Arrangement, build_from_sets
from src.arrangements.catalog import CATALOG
from src.arrangements.m_eps import MEpsData, build_from_m_eps, recognize_m_eps, recognize_m_eps_brute_force
from src.arrangements.properties import (
    holds_graphical_x_pattern,
    holds_mazin_miller_pattern,
    holds_x,
    holds_y,
    is_graphical,
    is_transitive,
)
from src.parking.d_graph import build_d_graph
from src.parking.parking_functions import (
    candidate_tuples,
    count_parking_determinant,
    enumerate_parking,
    is_parking_naive,
)
from src.psi.psi_inverse import trace_counts_hold, l_set, m_set, phi, psi_trace
from src.regions.compute_labeling import LabelMismatchError, enumerate_regions, gps_label, labeling_report
from src.regions.sign_vectors import sign_vector
from src.sketches.local_maximality import in_l, in_m
from src.sketches.sketch import SketchError, validate_sketch
from src.utils.log_utils import get_logger

# --- CONFIG ---
BATTERY_OFFSETS = range(-2, 3)
BATTERY_SAMPLE = 500
BATTERY_SEED = 2024
N4_SAMPLES = 20
N4_MAX_LEVEL = 2
CATALOG_NAMES = ("shi-3", "catalan-3", "2-shi-3", "fig-labeling", "fig-m-eps", "A1", "A2")

logger = get_logger("verify")


# -----------------------------
# Battery generation
# -----------------------------

def _subsets(values: Sequence[int]) -> List[List[int]]:
    return [list(c) for r in range(len(values) + 1) for c in itertools.combinations(values, r)]


def exhaustive_n3(offsets: Iterable[int] = BATTERY_OFFSETS) -> List[Arrangement]:
    """All n=3 arrangements with every S_{i,j} a subset of `offsets`, in a fixed order."""
    subsets = _subsets(sorted(set(offsets)))
    battery = []
    for s12, s13, s23 in itertools.product(subsets, repeat=3):
        battery.append(build_from_sets(3, {(1, 2): s12, (1, 3): s13, (2, 3): s23}))
    return battery


def subsample(arrangements: Sequence[Arrangement], size: Optional[int], seed: int = BATTERY_SEED) -> List[Arrangement]:
    """Deterministic subsample (input order kept); the whole list when size is None or too large."""
    if size is None or size >= len(arrangements):
        return list(arrangements)
    picked = sorted(random.Random(seed).sample(range(len(arrangements)), size))
    return [arrangements[k] for k in picked]


def random_m_eps(n: int, rng: random.Random, max_level: int = N4_MAX_LEVEL) -> MEpsData:
    """Uniform m_j in [0; max_level]; per column, eps switches from 0 to 1 at a random cut."""
    m = [rng.randint(0, max_level) for _ in range(n)]
    eps = {}
    for k in range(1, n + 1):
        others = [ell for ell in range(1, n + 1) if ell != k]
        cut = rng.randint(0, len(others))
        for pos, ell in enumerate(others):
            eps[(ell, k)] = 1 if pos >= cut else 0
    return MEpsData.from_partial(m, eps)


def m_eps_samples(n: int = 4, count: int = N4_SAMPLES, seed: int = BATTERY_SEED) -> List[Arrangement]:
    rng = random.Random(seed)
    return [
        build_from_m_eps(random_m_eps(n, rng), name=f"m-eps-{n}-{idx}")
        for idx in range(count)
    ]


def catalog_battery(names: Sequence[str] = CATALOG_NAMES) -> List[Arrangement]:
    return [CATALOG[name]() for name in names]


def build_battery(offsets=BATTERY_OFFSETS, sample: Optional[int] = BATTERY_SAMPLE,
                  seed: int = BATTERY_SEED, n4_samples: int = N4_SAMPLES) -> List[Arrangement]:
    battery = subsample(exhaustive_n3(offsets), sample, seed)
    battery += m_eps_samples(4, n4_samples, seed)
    battery += catalog_battery()
    return battery


# -----------------------------
# Invariant suite
# -----------------------------

def check_arrangement(A: Arrangement, perturb: bool = False, oracle: bool = False) -> Dict:
    """Run every invariant on A; returns a flat record with a list of failed checks."""
    failures: List[str] = []

    def expect(ok: bool, check: str) -> None:
        if not ok:
            failures.append(check)

    record = {
        "name": A.name or "",
        "n": A.n,
        "m": A.m,
        "hyperplanes": A.describe(),
        "n_hyperplanes": len(A),
    }

    transitive = is_transitive(A)
    x, y = holds_x(A), holds_y(A)
    witness = recognize_m_eps(A)
    record.update({"transitive": transitive, "X": x, "Y": y, "m_eps": witness is not None})

    if oracle:
        expect(recognize_m_eps_brute_force(A) == witness, "m_eps_matches_brute_force")
    if witness is not None:
        expect(x and y and transitive, "m_eps_implies_x_y_transitive")

    # parking functions: three independent counts
    D = build_d_graph(A)
    park = enumerate_parking(D)
    park_set = set(park)
    determinant = count_parking_determinant(D)
    expect(determinant == len(park), "determinant_equals_enumeration")
    expect(all(is_parking_naive(D, p) == (p in park_set) for p in candidate_tuples(D)),
           "burning_equals_subset_definition")
    record.update({"parking": len(park), "determinant": determinant})

    # regions and labels
    try:
        table = enumerate_regions(A)
    except LabelMismatchError as e:
        logger.error("%s", e)
        failures.append("phi_equals_label")
        record.update({"regions": None, "bijective": None, "ok": False, "failures": failures})
        return record
    report = labeling_report(A, table)
    expect(report.surjective, "labels_surjective")
    record.update({"regions": report.n_regions, "labels": report.n_labels, "bijective": report.bijective})

    # psi
    image = set()
    for p in park:
        try:
            trace = psi_trace(A, p, perturb=perturb)
            w = validate_sketch(trace[-1].emitted, A.m, A.n)
        except (SketchError, RuntimeError) as e:
            logger.error("%s: psi%s failed: %s", A.describe(), p, e)
            failures.append("psi_returns_sketch")
            break
        image.add(w)
        if phi(A, w) != p:
            failures.append("phi_psi_identity")
            logger.error("%s: phi(psi%s) = %s", A.describe(), p, phi(A, w))
            break
        expect(in_m(w, A), "psi_in_m")
        expect(in_l(w, A), "psi_in_l")
        expect(trace_counts_hold(trace, A), "trace_counts")
        expect(all(q == -(A.m + 1) for q in trace[-1].P) and not trace[-1].O, "terminal_state")
        expect(gps_label(A, sign_vector(w, A)) == p, "inverse_region_label")

    # N, M, L
    M = m_set(A)
    L = l_set(A)
    N = frozenset(image)
    expect(M <= L, "m_subset_l")
    expect(y == (M == L), "y_iff_m_equals_l")
    if x:
        expect(N == M, "x_implies_n_equals_m")
    if N == M == L:
        expect(report.bijective, "nml_implies_bijective")

    regions_of_l = [sign_vector(w, A) for w in L]
    expect(set(regions_of_l) == set(table.regions), "beta_on_l_surjective")
    if transitive:
        expect(len(set(regions_of_l)) == len(L), "beta_on_l_injective")
        verdicts = {report.bijective, N == M == L, x and y, witness is not None}
        expect(len(verdicts) == 1, "transitive_characterization")
    if witness is not None:
        expect(report.bijective, "m_eps_bijective")

    if is_graphical(A):
        expect(y, "graphical_y")
        expect(x == holds_graphical_x_pattern(A), "graphical_x_pattern")
        expect(report.bijective == holds_mazin_miller_pattern(A), "graphical_bijectivity_pattern")

    record.update({"ok": not failures, "failures": sorted(set(failures))})
    return record


def run_battery(arrangements: Sequence[Arrangement], jobs: int = 1, perturb: bool = False,
                oracle: bool = False, progress: bool = True) -> pd.DataFrame:
    """Check every arrangement (in parallel when jobs != 1); rows stay in input order."""
    start = time.time()
    items = tqdm(arrangements, desc="verify", disable=not progress)
    if jobs == 1:
        records = [check_arrangement(A, perturb, oracle) for A in items]
    else:
        records = joblib.Parallel(n_jobs=jobs)(
            joblib.delayed(check_arrangement)(A, perturb, oracle)
            for A in items
        )
    df = pd.DataFrame(records)
    logger.info("checked %d arrangements in %.1fs, %d failing",
                len(df), time.time() - start, int((~df["ok"]).sum()) if len(df) else 0)
    return df


def minimal_counterexample(df: pd.DataFrame) -> Optional[Dict]:
    failing = df[~df["ok"]]
    if failing.empty:
        return None
    return failing.sort_values(["n", "n_hyperplanes", "m"]).iloc[0].to_dict()
