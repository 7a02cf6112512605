"""
src/arrangements/catalog.py
Named arrangements: braid, m-Shi, m-Catalan, and the worked examples
(the two non-injective counterexamples and the two labeled figures).
"""

from src.arrangements.braid_arrangement import Arrangement, build_from_hyperplanes, build_from_sets
from src.arrangements.m_eps import MEpsData, build_from_m_eps


def _all_pairs(n, values):
    return {(i, j): list(values) for i in range(1, n + 1) for j in range(i + 1, n + 1)}


def braid(n: int) -> Arrangement:
    return build_from_sets(n, _all_pairs(n, [0]), name=f"braid-{n}")


def m_shi(n: int, m: int) -> Arrangement:
    """S_{i,j} = [-m+1; m]."""
    return build_from_sets(n, _all_pairs(n, range(-m + 1, m + 1)), name=f"{m}-shi-{n}")


def m_catalan(n: int, m: int) -> Arrangement:
    """S_{i,j} = [-m; m]."""
    return build_from_sets(n, _all_pairs(n, range(-m, m + 1)), name=f"{m}-catalan-{n}")


def example_a1() -> Arrangement:
    """{x1 - x3 = 0, x2 - x3 = 0}: (Y) holds, (X) fails, labeling not injective."""
    return build_from_hyperplanes(3, [(1, 3, 0), (2, 3, 0)], name="A1")


def example_a2() -> Arrangement:
    """{x1 - x2 = 1, x1 - x3 = 1}: (X) holds, (Y) fails, labeling not injective."""
    return build_from_hyperplanes(3, [(1, 2, 1), (1, 3, 1)], name="A2")


def figure_labeling_example() -> Arrangement:
    """S_{1,2} = {0}, S_{1,3} = S_{2,3} = {0, 1}; also the 1-Shi arrangement minus x1 - x2 = 1."""
    return build_from_sets(3, {(1, 2): [0], (1, 3): [0, 1], (2, 3): [0, 1]}, name="fig-labeling")


def figure_m_eps_example() -> Arrangement:
    """m = (1, 0, 3), eps_{2,3} = 1, all other eps zero."""
    data = MEpsData.from_partial((1, 0, 3), {(2, 3): 1})
    return build_from_m_eps(data, name="fig-m-eps")


CATALOG = {
    "A1": example_a1,
    "A2": example_a2,
    "fig-labeling": figure_labeling_example,
    "fig-m-eps": figure_m_eps_example,
    "shi-3": lambda: m_shi(3, 1),
    "catalan-3": lambda: m_catalan(3, 1),
    "2-shi-3": lambda: m_shi(3, 2),
}
