"""
src/psi/psi_inverse.py
The sketch-to-parking-function map phi and its right inverse psi.
Input: Arrangement + Sketch (phi) or Arrangement + D_S-parking function (psi)
Output: parking function, or the sketch psi(p) with the full state trace

psi keeps a tuple P (initially p) and a FIFO list O of indices:
  case 1, P has a zero: take the rightmost zero k, emit a_k^0, decrement P_k and every
          positive P_i with 0 in S+_{i,k}, append k to O when m > 0
  case 2, no zero, O non-empty: pop k, s = -P_k, emit a_k^s, decrement P_k and every
          positive P_i with s in S+_{i,k}, re-append k when s < m
  stop when neither applies; completed coordinates end at -(m+1)
"""

from dataclasses import dataclass
from typing import FrozenSet, List, Optional, Sequence, Tuple

from src.arrangements.braid_arrangement import Arrangement
from src.parking.d_graph import build_d_graph
from src.parking.parking_functions import ParkingFunction, enumerate_parking, require_parking
from src.regions.sign_vectors import Region, sign_vector
from src.sketches.enumerate_sketches import enumerate_sketches
from src.sketches.local_maximality import in_l, in_m
from src.sketches.sketch import Letter, Sketch, check_bound, validate_sketch
from src.utils.log_utils import get_logger

logger = get_logger("psi")


class PsiOverrunError(RuntimeError):
    """psi tried to emit more than (m+1)*n letters."""


@dataclass(frozen=True)
class PsiState:
    step: int
    P: Tuple[int, ...]
    O: Tuple[int, ...]
    emitted: Tuple[Letter, ...]
    letter: Optional[Letter] = None

    @property
    def is_terminal(self) -> bool:
        return self.letter is None


def phi(A: Arrangement, w: Sketch) -> ParkingFunction:
    """p_i = #{(j, s) : s in S+_{i,j}, a_j^s before a_i^0 in w}."""
    check_bound(w, A.m)
    label = []
    for i in range(1, A.n + 1):
        start = Letter(i, 0)
        label.append(sum(
            1
            for j in range(1, A.n + 1) if j != i
            for s in A.splus(i, j)
            if w.before(Letter(j, s), start)
        ))
    return tuple(label)


def _decrement(A: Arrangement, P: List[int], k: int, s: int) -> None:
    P[k - 1] -= 1
    for i in range(1, A.n + 1):
        if i != k and P[i - 1] > 0 and s in A.splus(i, k):
            P[i - 1] -= 1


def psi_trace(A: Arrangement, p: Sequence[int], perturb: bool = False) -> List[PsiState]:
    """Every state (P_r, O_r) with the letter emitted at step r; the last state emits nothing.

    perturb=True takes the leftmost zero in case 1 (fault injection for verification).
    """
    p = require_parking(build_d_graph(A), p)
    n, m = A.n, A.m
    limit = (m + 1) * n

    P = list(p)
    O: List[int] = []
    emitted: List[Letter] = []
    trace: List[PsiState] = []
    step = 1
    while True:
        zeros = [k for k in range(1, n + 1) if P[k - 1] == 0]
        if zeros:
            k = zeros[0] if perturb else zeros[-1]
            s = 0
        elif O:
            k = O[0]
            s = -P[k - 1]
        else:
            trace.append(PsiState(step, tuple(P), tuple(O), tuple(emitted)))
            break

        if len(emitted) >= limit:
            raise PsiOverrunError(f"psi{p} on {A.describe()} exceeds {limit} letters")

        letter = Letter(k, s)
        trace.append(PsiState(step, tuple(P), tuple(O), tuple(emitted), letter))
        emitted.append(letter)
        _decrement(A, P, k, s)
        if zeros:
            if m > 0:
                O.append(k)
        else:
            O.pop(0)
            if s < m:
                O.append(k)
        step += 1

    terminal = trace[-1].P
    if not perturb and any(x != -(m + 1) for x in terminal):
        logger.warning("psi%s on %s stopped at P = %s", p, A.describe(), terminal)
    return trace


def psi(A: Arrangement, p: Sequence[int], perturb: bool = False) -> Sketch:
    trace = psi_trace(A, p, perturb=perturb)
    return validate_sketch(trace[-1].emitted, A.m, A.n)


def inverse_region(A: Arrangement, p: Sequence[int]) -> Region:
    """beta_S(psi(p)): a region labeled p."""
    return sign_vector(psi(A, p), A)


def trace_counts_hold(trace: Sequence[PsiState], A: Arrangement) -> bool:
    """p_i - q_i counts the emitted a_j^t with t in S+_{i,j}, for every i with q_i >= 0."""
    p = trace[0].P
    for state in trace:
        if state.is_terminal:
            continue
        for i in range(1, A.n + 1):
            q = state.P[i - 1]
            if q < 0:
                continue
            seen = sum(1 for (j, t) in state.emitted if j != i and t in A.splus(i, j))
            if p[i - 1] - q != seen:
                return False
    return True


def n_set(A: Arrangement) -> FrozenSet[Sketch]:
    """N_S: the image of psi over all D_S-parking functions."""
    return frozenset(psi(A, p) for p in enumerate_parking(build_d_graph(A)))


def m_set(A: Arrangement) -> FrozenSet[Sketch]:
    return frozenset(w for w in enumerate_sketches(A.m, A.n) if in_m(w, A))


def l_set(A: Arrangement) -> FrozenSet[Sketch]:
    return frozenset(w for w in enumerate_sketches(A.m, A.n) if in_l(w, A))


def format_trace(trace: Sequence[PsiState]) -> str:
    lines = ["r | P_r | O_r | w_r"]
    for state in trace:
        letter = state.letter.render() if state.letter is not None else "-"
        P = ", ".join(str(x) for x in state.P)
        O = ", ".join(str(x) for x in state.O)
        lines.append(f"{state.step} | ({P}) | [{O}] | {letter}")
    lines.append("sketch: " + " ".join(x.render() for x in trace[-1].emitted))
    return "\n".join(lines) + "\n"
