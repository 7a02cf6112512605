"""
tests/test_cli.py
Arrangement files, SVG cells, interpolation and the command-line entry point.
"""

from pathlib import Path
import json
import logging
import sys

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parents[1]))

from src.arrangements.braid_arrangement import ArrangementError, build_from_sets
from src.arrangements.catalog import (
    example_a1,
    figure_labeling_example,
    figure_m_eps_example,
    m_catalan,
)
from src.arrangements.m_eps import MEpsError
from src.cli.interpolate import candidate_order, interpolate, steps_to_frame
from src.cli.main import main
from src.cli.render_svg import UnsupportedDimensionError, compute_cells, render_arrangement_svg
from src.cli.spec_file import SpecFileError, parse_arrangement_file, serialize_arrangement
from src.regions.compute_labeling import enumerate_regions
from src.regions.sign_vectors import base_region

GOLDEN = Path(__file__).resolve().parent / "golden"


# -----------------------------
# Arrangement files
# -----------------------------

def test_parse_offset_form():
    A = parse_arrangement_file(b'{"n":3,"S":{"1,2":[0],"1,3":[0,1],"2,3":[0,1]}}')
    assert A == figure_labeling_example()


def test_parse_m_eps_form():
    A = parse_arrangement_file('{"m":[1,0,3],"eps":{"2,3":1}, "name": "fig"}')
    assert A == figure_m_eps_example()
    assert A.name == "fig"


def test_parse_empty():
    A = parse_arrangement_file('{"n":2,"S":{}}')
    assert A.n == 2 and len(A) == 0


def test_mixed_forms_rejected():
    with pytest.raises(SpecFileError):
        parse_arrangement_file('{"n":3,"S":{},"m":[0,0,0]}')


def test_json_error_position():
    with pytest.raises(SpecFileError) as info:
        parse_arrangement_file('{"n": 3,\n "S": }')
    assert info.value.line == 2
    assert info.value.col is not None


@pytest.mark.parametrize("text,error", [
    ('[1, 2]', SpecFileError),
    ('{"S": {}}', SpecFileError),
    ('{"n": 3, "S": {"1-2": [0]}}', SpecFileError),
    ('{"n": 3, "S": {"1,2": 0}}', SpecFileError),
    ('{"n": 3, "S": {"2,1": [0]}}', ArrangementError),
    ('{"m": [1, 1], "eps": {"1,2": 3}}', MEpsError),
    ('{"m": [1.9, 0, 3], "eps": {"2,3": 1}}', MEpsError),
    ('{"m": ["1", 0, 3]}', MEpsError),
    ('{"m": [1, 0, 3], "eps": {"2,3": true}}', MEpsError),
    ('{"m": [1, 0, 3], "eps": {"2,3": "1"}}', MEpsError),
    ('{"name": "nothing"}', SpecFileError),
])
def test_bad_files(text, error):
    with pytest.raises(error):
        parse_arrangement_file(text)


def test_non_utf8_rejected():
    with pytest.raises(SpecFileError):
        parse_arrangement_file(b'{"n": 3, "name": "\xff"}')


@pytest.mark.parametrize("A", [figure_m_eps_example(), m_catalan(3, 2), build_from_sets(2, {})])
def test_serialization_is_canonical(A):
    text = serialize_arrangement(A)
    again = parse_arrangement_file(text)
    assert again == A
    assert serialize_arrangement(again) == text


# -----------------------------
# SVG
# -----------------------------

def test_cells_match_region_table():
    A = figure_m_eps_example()
    table = enumerate_regions(A)
    cells = compute_cells(A, table)
    assert len(cells) == len(table)
    assert {c.region for c in cells} == set(table.regions)
    assert all(c.label == table.label_of[c.region] for c in cells)


def test_empty_arrangement_picture(tmp_path):
    out = tmp_path / "empty.svg"
    cells = render_arrangement_svg(build_from_sets(3, {}), out)
    assert len(cells) == 1
    assert cells[0].label == (0, 0, 0)
    assert cells[0].region == base_region(build_from_sets(3, {}))
    assert "<svg" in out.read_text()


def test_a1_picture_shows_duplicated_label(tmp_path):
    cells = render_arrangement_svg(example_a1(), tmp_path / "a1.svg")
    labels = [c.label for c in cells]
    assert len(labels) == 4
    assert labels.count((0, 0, 1)) == 2


def test_svg_needs_three_dimensions():
    with pytest.raises(UnsupportedDimensionError):
        compute_cells(build_from_sets(2, {(1, 2): [0]}))


# -----------------------------
# Interpolation
# -----------------------------

def test_candidate_order_three():
    assert candidate_order(3, 1) == [(1, 3, 1), (2, 3, 1), (1, 2, 1), (3, 2, 1), (2, 1, 1), (3, 1, 1)]


def test_interpolation_three_one():
    steps = interpolate(3, 1)
    assert [s.regions for s in steps] == [6, 9, 12, 16, 20, 25, 30]
    assert [s.added for s in steps[1:]] == candidate_order(3, 1)
    assert all(s.ok for s in steps)
    assert steps[-1].arrangement == m_catalan(3, 1)
    df = steps_to_frame(steps)
    assert df["regions"].tolist() == df["determinant"].tolist()


def test_interpolation_two_two():
    steps = interpolate(2, 2)
    assert steps[-1].arrangement == m_catalan(2, 2)
    assert all(s.ok for s in steps)


def test_interpolation_bounds():
    with pytest.raises(UnsupportedDimensionError):
        interpolate(5, 1)
    with pytest.raises(ValueError):
        interpolate(3, 0)


# -----------------------------
# Entry point
# -----------------------------

def test_cmd_psi_matches_golden(capsys):
    assert main(["psi", "shi-3", "1,0,1"]) == 0
    assert capsys.readouterr().out == (GOLDEN / "psi_shi3_101.txt").read_text()


def test_cmd_psi_region(capsys):
    assert main(["psi", "fig-labeling", "1,0,1", "--region"]) == 0
    assert "label: (1, 0, 1)" in capsys.readouterr().out


def test_cmd_psi_rejects_non_parking(capsys):
    assert main(["psi", "shi-3", "9,9,9"]) == 2
    assert "not a parking function" in capsys.readouterr().out


def test_cmd_report_json(capsys):
    assert main(["report", "A1", "--json"]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["regions"] == 4
    assert rep["distinct_labels"] == 3
    assert rep["X"] is False and rep["Y"] is True
    assert rep["bijective"] is False
    assert rep["determinant"] == 3
    assert len(rep["region_table"]) == 4
    assert sorted(row["label"] for row in rep["region_table"]).count([0, 0, 1]) == 2
    assert sum(row["fiber_size"] for row in rep["region_table"]) == 6


def test_cmd_report_from_file(tmp_path, capsys):
    path = tmp_path / "shi.json"
    path.write_text('{"n":3,"S":{"1,2":[0,1],"1,3":[0,1],"2,3":[0,1]},"name":"shi"}')
    assert main(["report", str(path)]) == 0
    out = capsys.readouterr().out
    assert "regions: 16" in out
    assert "bijective ✅" in out
    assert "root" in out
    assert "fiber_size" in out


def test_cmd_verify_single_and_perturbed(capsys):
    assert main(["verify", "shi-3"]) == 0
    assert main(["verify", "shi-3", "--perturb"]) == 1
    assert "❌" in capsys.readouterr().out


def test_cmd_verify_needs_input():
    assert main(["verify"]) == 2


def test_cmd_svg(tmp_path, capsys):
    out = tmp_path / "fig.svg"
    assert main(["svg", "fig-labeling", "--out", str(out)]) == 0
    assert out.exists()
    assert "12 labeled cells" in capsys.readouterr().out


def test_cmd_interpolate(capsys):
    assert main(["interpolate", "--n", "3", "--m", "1"]) == 0


def test_unknown_source():
    assert main(["report", "no-such-arrangement"]) == 2


def test_usage_error_exits_two():
    with pytest.raises(SystemExit) as info:
        main(["psi"])
    assert info.value.code == 2


def test_verbose_flag_sets_debug_level():
    root = logging.getLogger("pakstanley")
    assert main(["--verbose", "verify", "shi-3"]) == 0
    assert root.level == logging.DEBUG
    assert root.getChild("battery").isEnabledFor(logging.DEBUG)
    assert main(["verify", "shi-3"]) == 0
    assert root.level == logging.INFO
    assert len(root.handlers) == 1
