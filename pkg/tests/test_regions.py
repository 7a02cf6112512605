"""
tests/test_regions.py
Sign vectors, the base region, labels and labeling reports.
"""

from pathlib import Path
import sys

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parents[1]))

from src.arrangements.braid_arrangement import build_from_sets
from src.arrangements.catalog import (
    braid,
    example_a1,
    example_a2,
    figure_labeling_example,
    figure_m_eps_example,
    m_catalan,
    m_shi,
)
from src.regions.compute_labeling import enumerate_regions, gps_label, labeling_report
from src.regions.sign_vectors import ABOVE, BELOW, Region, RegionError, base_region, sign_vector
from src.sketches.enumerate_sketches import enumerate_sketches, fundamental_sketch
from src.sketches.sketch import BoundMismatchError, parse_sketch


def test_sign_vectors_on_shi_two():
    A = m_shi(2, 1)
    assert A.hyperplanes == ((1, 2, 0), (1, 2, 1))
    w = parse_sketch("a1^0 a2^0 a1^1 a2^1", 1, 2)
    assert sign_vector(w, A) == Region((BELOW, BELOW))
    assert sign_vector(fundamental_sketch(1, 2), A) == Region((ABOVE, BELOW))


def test_negative_offset_sign():
    A = build_from_sets(2, {(1, 2): [-1]})
    # x1 - x2 > -1 iff x2 < x1 + 1 iff a2^0 before a1^1
    assert sign_vector(parse_sketch("a1^0 a2^0 a1^1 a2^1", 1, 2), A) == Region((ABOVE,))
    assert sign_vector(parse_sketch("a1^0 a1^1 a2^0 a2^1", 1, 2), A) == Region((BELOW,))


def test_empty_arrangement_sign_vectors():
    A = build_from_sets(3, {})
    assert all(sign_vector(w, A) == Region(()) for w in enumerate_sketches(0, 3))
    assert base_region(A) == Region(())


def test_sign_vector_bound_mismatch():
    with pytest.raises(BoundMismatchError):
        sign_vector(fundamental_sketch(2, 3), m_shi(3, 1))


def test_base_region_rule():
    for A in (m_shi(3, 1), figure_m_eps_example(), m_catalan(3, 2)):
        expected = tuple(BELOW if s >= 1 else ABOVE for (_, _, s) in A.hyperplanes)
        assert base_region(A).signs == expected


def test_gps_label_examples():
    A = m_shi(2, 1)
    assert gps_label(A, base_region(A)) == (0, 0)
    assert gps_label(A, Region((ABOVE, ABOVE))) == (1, 0)
    assert gps_label(A, Region((BELOW, BELOW))) == (0, 1)
    with pytest.raises(RegionError):
        gps_label(A, Region((ABOVE,)))


@pytest.mark.parametrize("A,regions", [
    (m_shi(2, 1), 3),
    (m_shi(3, 1), 16),
    (figure_labeling_example(), 12),
    (m_catalan(3, 1), 30),
    (braid(3), 6),
    (figure_m_eps_example(), 36),
    (build_from_sets(3, {}), 1),
])
def test_region_counts(A, regions):
    table = enumerate_regions(A)
    assert len(table) == regions
    assert sum(table.fibers.values()) == len(enumerate_sketches(A.m, A.n))
    report = labeling_report(A, table)
    assert report.bijective
    assert report.n_parking == regions


def test_region_table_is_sorted_and_witnessed():
    A = figure_labeling_example()
    table = enumerate_regions(A)
    assert table.regions == sorted(table.regions)
    for R in table.regions:
        assert sign_vector(table.witness_sketch[R], A) == R
    assert table.regions_with_label((0, 0, 0)) == [base_region(A)]
    df = table.to_frame()
    assert list(df.columns) == ["signs", "label", "witness", "fiber_size"]
    assert len(df) == 12


@pytest.mark.parametrize("A", [example_a1(), example_a2()])
def test_counterexamples_not_injective(A):
    report = labeling_report(A)
    assert report.n_regions == 4
    assert report.n_labels == 3
    assert report.n_parking == 3
    assert report.surjective and not report.injective and not report.bijective
    assert sum(report.duplicated_labels.values()) == 2
    assert report.missing_labels == []


def test_a1_duplicated_label():
    report = labeling_report(example_a1())
    assert report.duplicated_labels == {(0, 0, 1): 2}
    assert report.to_dict()["duplicated_labels"] == {"0,0,1": 2}
