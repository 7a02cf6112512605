"""
tests/test_psi.py
phi, the psi procedure and its traces, checked against hand-executed traces in tests/golden/.
"""

from dataclasses import replace
from pathlib import Path
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

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
from src.parking.d_graph import build_d_graph
from src.parking.parking_functions import NotParkingError, enumerate_parking
from src.psi.psi_inverse import (
    format_trace,
    inverse_region,
    trace_counts_hold,
    l_set,
    m_set,
    n_set,
    phi,
    psi,
    psi_trace,
)
from src.regions.compute_labeling import enumerate_regions, gps_label
from src.regions.sign_vectors import base_region
from src.sketches.enumerate_sketches import fundamental_sketch
from src.sketches.local_maximality import in_l, in_m
from src.sketches.sketch import parse_sketch

GOLDEN = Path(__file__).resolve().parent / "golden"
PAIRS3 = [(1, 2), (1, 3), (2, 3)]

SHI3_101 = "a2^0 a3^0 a2^1 a1^0 a3^1 a1^1"
SHI3_MINUS_101 = "a2^0 a3^0 a2^1 a3^1 a1^0 a1^1"


def shi3_minus_h121():
    return m_shi(3, 1).without_hyperplane(1, 2, 1)


def test_phi_examples():
    assert phi(m_shi(3, 1), fundamental_sketch(1, 3)) == (0, 0, 0)
    assert phi(m_shi(3, 1), parse_sketch(SHI3_101, 1, 3)) == (1, 0, 1)
    assert phi(figure_labeling_example(), parse_sketch(SHI3_MINUS_101, 1, 3)) == (1, 0, 1)


def test_psi_examples():
    assert psi(m_shi(3, 1), (1, 0, 1)).render() == SHI3_101
    assert psi(shi3_minus_h121(), (1, 0, 1)).render() == SHI3_MINUS_101


@pytest.mark.parametrize("A,golden", [
    (m_shi(3, 1), "psi_shi3_101.txt"),
    (shi3_minus_h121(), "psi_shi3_minus_h121_101.txt"),
])
def test_golden_traces(A, golden):
    assert format_trace(psi_trace(A, (1, 0, 1))) == (GOLDEN / golden).read_text()


def test_first_step_of_shi_trace():
    trace = psi_trace(m_shi(3, 1), (1, 0, 1))
    assert trace[0].P == (1, 0, 1) and trace[0].O == ()
    assert trace[1].P == (1, -1, 0) and trace[1].O == (2,)
    assert trace[-1].is_terminal
    assert trace[-1].P == (-2, -2, -2) and trace[-1].O == ()


@pytest.mark.parametrize("A", [m_shi(3, 1), m_catalan(3, 2), figure_m_eps_example(), braid(4), example_a1()])
def test_zero_maps_to_fundamental_sketch(A):
    assert psi(A, (0,) * A.n) == fundamental_sketch(A.m, A.n)
    assert inverse_region(A, (0,) * A.n) == base_region(A)


def test_non_parking_rejected():
    with pytest.raises(NotParkingError):
        psi(m_shi(3, 1), (9, 9, 9))
    with pytest.raises(NotParkingError):
        psi_trace(m_shi(3, 1), (2, 2, 2))


@pytest.mark.parametrize("A", [
    m_shi(3, 1),
    m_shi(3, 2),
    m_catalan(3, 1),
    figure_labeling_example(),
    figure_m_eps_example(),
    example_a1(),
    example_a2(),
    braid(3),
    build_from_sets(3, {}),
])
def test_right_inverse(A):
    for p in enumerate_parking(build_d_graph(A)):
        trace = psi_trace(A, p)
        w = psi(A, p)
        assert phi(A, w) == p
        assert in_m(w, A) and in_l(w, A)
        assert trace_counts_hold(trace, A)
        assert all(q == -(A.m + 1) for q in trace[-1].P)
        assert gps_label(A, inverse_region(A, p)) == p


def test_inverse_region_is_unique_region_for_shi():
    A = m_shi(3, 1)
    table = enumerate_regions(A)
    for p in enumerate_parking(build_d_graph(A)):
        assert table.regions_with_label(p) == [inverse_region(A, p)]


def test_inverse_region_for_a1_is_one_of_several():
    A = example_a1()
    table = enumerate_regions(A)
    for p in enumerate_parking(build_d_graph(A)):
        assert inverse_region(A, p) in table.regions_with_label(p)


def test_sets_for_shi_and_counterexamples():
    A = m_shi(3, 1)
    assert n_set(A) == m_set(A) == l_set(A)
    assert len(n_set(A)) == 16
    # (X) holds for A2, (Y) does not
    A2 = example_a2()
    assert n_set(A2) == m_set(A2)
    assert m_set(A2) < l_set(A2)


def test_perturbed_psi_breaks_right_inverse():
    A = m_shi(3, 1)
    broken = []
    for p in enumerate_parking(build_d_graph(A)):
        try:
            w = psi(A, p, perturb=True)
        except (ValueError, RuntimeError):
            broken.append(p)
            continue
        if phi(A, w) != p:
            broken.append(p)
    assert (0, 0, 0) in broken


def test_trace_counts_detect_a_tampered_trace():
    A = m_shi(3, 1)
    trace = psi_trace(A, (1, 0, 1))
    # step 4 has emitted a2^1 with 1 in S+_{1,2}, so q_1 must be p_1 - 1 = 0
    tampered = [replace(s, P=(1,) + s.P[1:]) if s.step == 4 else s for s in trace]
    assert trace_counts_hold(trace, A)
    assert not trace_counts_hold(tampered, A)


@settings(max_examples=40, deadline=None)
@given(st.tuples(*[st.sets(st.sampled_from([-2, -1, 0, 1, 2]))] * 3))
def test_right_inverse_on_random_arrangements(sets):
    A = build_from_sets(3, dict(zip(PAIRS3, sets)))
    for p in enumerate_parking(build_d_graph(A)):
        assert phi(A, psi(A, p)) == p
