"""
src/cli/spec_file.py
JSON arrangement files.

Two accepted forms (plus an optional "name"):
  {"n": 3, "S": {"1,2": [0], "1,3": [0, 1], "2,3": [0, 1]}}
  {"m": [1, 0, 3], "eps": {"2,3": 1}}

serialize_arrangement always writes the first form with sorted keys and sorted
offsets, so parse -> serialize is a fixed point after one pass.
"""

import json
from typing import Tuple, Union

from src.arrangements.braid_arrangement import Arrangement, build_from_sets
from src.arrangements.m_eps import MEpsData, build_from_m_eps


class SpecFileError(ValueError):
    """Malformed arrangement file; line/col are 1-based when known."""

    def __init__(self, message, line=None, col=None):
        self.line = line
        self.col = col
        where = f" (line {line}, column {col})" if line is not None else ""
        super().__init__(f"{message}{where}")


def _pair_key(key: str) -> Tuple[int, int]:
    try:
        i, j = (int(part) for part in key.split(","))
    except ValueError:
        raise SpecFileError(f"pair key {key!r} must look like \"i,j\"")
    return i, j


def parse_arrangement_file(text: Union[bytes, str]) -> Arrangement:
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as e:
            raise SpecFileError(f"file is not UTF-8: {e.reason}")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise SpecFileError(e.msg, e.lineno, e.colno)

    if not isinstance(doc, dict):
        raise SpecFileError("top level must be a JSON object")
    name = doc.get("name")
    has_sets = "n" in doc or "S" in doc
    has_m_eps = "m" in doc or "eps" in doc
    if has_sets and has_m_eps:
        raise SpecFileError("file mixes the {n, S} and {m, eps} forms")

    if has_sets:
        if "n" not in doc:
            raise SpecFileError("missing \"n\"")
        sets = doc.get("S", {})
        if not isinstance(sets, dict):
            raise SpecFileError("\"S\" must map \"i,j\" to a list of integers")
        for key, values in sets.items():
            if not isinstance(values, list):
                raise SpecFileError(f"S[{key!r}] must be a list of integers")
        return build_from_sets(doc["n"], {_pair_key(k): v for k, v in sets.items()}, name=name)

    if has_m_eps:
        m = doc.get("m")
        if not isinstance(m, list):
            raise SpecFileError("\"m\" must be a list of integers")
        eps = doc.get("eps", {})
        if not isinstance(eps, dict):
            raise SpecFileError("\"eps\" must map \"i,j\" to 0 or 1")
        data = MEpsData.from_partial(m, {_pair_key(k): v for k, v in eps.items()})
        return build_from_m_eps(data, name=name)

    raise SpecFileError("expected either {\"n\", \"S\"} or {\"m\", \"eps\"}")


def serialize_arrangement(A: Arrangement) -> str:
    sets = {f"{i},{j}": sorted(vals) for (i, j), vals in A.offsets.items() if vals}
    doc = {"n": A.n, "S": sets}
    if A.name is not None:
        doc["name"] = A.name
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def read_arrangement(path) -> Arrangement:
    with open(path, "rb") as f:
        return parse_arrangement_file(f.read())
