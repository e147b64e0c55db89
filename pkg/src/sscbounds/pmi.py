"""Distance-based lower bound: longest pseudo-monotone sequence of DL vectors.

A sequence of distance-to-leaders vectors is valid when every element has
some coordinate whose value is strictly below that coordinate in all later
elements. The maximum length of such a sequence, written ``delta`` here, is
a lower bound on the dimension of the strong structurally controllable
subspace for any positive edge weights.

Both algorithms below walk the same state space: a vector of per-coordinate
thresholds, where a DL vector stays available as long as it strictly beats
every set threshold. Appending a vector at coordinate j raises threshold j
to that vector's value, which permanently retires the vector itself (its
own value no longer beats the threshold) and everything tied with or below
it at j. The exact solver explores this space exhaustively with
memoization; the greedy one commits to a single survivor-maximizing path.

Restricting moves to column minima loses nothing: if an optimal sequence
continues with value v > min at coordinate j, the vector attaining the
minimum can never appear later (its entry fails the raised threshold), so
swapping it in as the next element keeps the sequence valid and the
remaining suffix feasible under the lower threshold.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .distances import DLMatrix, INF, dl_matrix
from .graph import Graph

DEFAULT_EXACT_CAP = 4

Threshold = tuple[float | None, ...]


class ExactCapExceeded(ValueError):
    """Exact mode refused: too many leader coordinates, use greedy."""


@dataclass(frozen=True)
class PmiSequence:
    """Certifying sequence: ordered (node, coordinate) picks."""

    picks: tuple[tuple[int, int], ...]

    @property
    def length(self) -> int:
        return len(self.picks)

    def nodes(self) -> list[int]:
        return [v for v, _ in self.picks]

    def to_json(self, dl: DLMatrix) -> str:
        records = [
            {"node": v, "coord": k, "value": _json_value(dl.dist[v, k])}
            for v, k in self.picks
        ]
        return json.dumps(records)


def _json_value(x: float) -> int | str:
    return "inf" if x == INF else int(x)


class DeltaResult(NamedTuple):
    value: int
    sequence: PmiSequence
    exact: bool


def is_valid_pmi(dl: DLMatrix, seq: PmiSequence) -> bool:
    """Check the strict-dominance condition of every pick.

    A pick (v, k) at position i requires dl[u, k] > dl[v, k] for every
    later picked node u. Infinite entries never beat infinite entries, so
    a pick at an infinite value can only ever sit last. Picked nodes must
    be distinct and each picked vector needs at least one finite entry.
    """
    nodes = [v for v, _ in seq.picks]
    if len(set(nodes)) != len(nodes):
        return False
    for v, k in seq.picks:
        if not (0 <= v < dl.n):
            raise IndexError(f"node {v} out of range")
        if not (0 <= k < dl.m):
            raise IndexError(f"coordinate {k} out of range")
        if not np.isfinite(dl.dist[v]).any():
            return False
    for i, (v, k) in enumerate(seq.picks):
        value = dl.dist[v, k]
        for u, _ in seq.picks[i + 1 :]:
            if not dl.dist[u, k] > value:
                return False
    return True


def _candidate_rows(dl: DLMatrix) -> list[tuple[int, tuple[float, ...]]]:
    # Vectors with no finite entry belong to nodes no leader can influence
    # and are excluded up front.
    return [(v, tuple(dl.dist[v])) for v in dl.finite_rows()]


def _feasible(rows, state: Threshold):
    out = []
    for v, vec in rows:
        for j, c in enumerate(state):
            if c is not None and not vec[j] > c:
                break
        else:
            out.append((v, vec))
    return out


def longest_pmi_exact(dl: DLMatrix, cap: int = DEFAULT_EXACT_CAP) -> PmiSequence:
    """Maximum-length sequence via memoized search over threshold states.

    From each state, the only transition per coordinate appends a vector
    attaining that coordinate's minimum over the still-available vectors
    (ties share a successor state, so one transition covers them all).
    States are memoized on the threshold tuple; only reachable states are
    ever materialized.
    """
    m = dl.m
    if m > cap:
        raise ExactCapExceeded(
            f"{m} coordinates exceeds the exact-mode cap of {cap}; use greedy"
        )
    rows = _candidate_rows(dl)
    memo: dict[Threshold, int] = {}

    def value(state: Threshold) -> int:
        cached = memo.get(state)
        if cached is not None:
            return cached
        feasible = _feasible(rows, state)
        best = 0
        for j in range(m):
            mu = min((vec[j] for _, vec in feasible), default=INF)
            if mu == INF:
                continue
            succ = state[:j] + (mu,) + state[j + 1 :]
            best = max(best, 1 + value(succ))
        memo[state] = best
        return best

    picks: list[tuple[int, int]] = []
    state: Threshold = (None,) * m
    while True:
        feasible = _feasible(rows, state)
        if not feasible:
            break
        best_j = -1
        best_val = -1
        for j in range(m):
            mu = min((vec[j] for _, vec in feasible), default=INF)
            if mu == INF:
                continue
            succ = state[:j] + (mu,) + state[j + 1 :]
            val = 1 + value(succ)
            if val > best_val:
                best_val = val
                best_j = j
        mu = min(vec[best_j] for _, vec in feasible)
        node = min(v for v, vec in feasible if vec[best_j] == mu)
        picks.append((node, best_j))
        state = state[: best_j] + (mu,) + state[best_j + 1 :]
    return PmiSequence(picks=tuple(picks))


def longest_pmi_greedy(dl: DLMatrix) -> PmiSequence:
    """Deterministic greedy underestimate of the exact sequence length.

    Each step scores every coordinate by how many vectors would survive
    appending its column minimum, then takes the coordinate keeping the
    most (ties: lowest coordinate, then lowest node id among vectors
    attaining the minimum). Any sequence built this way is valid, so the
    result is always a certified lower bound; it just may stop short of
    the optimum.
    """
    rows = _candidate_rows(dl)
    if not rows:
        return PmiSequence(picks=())
    node_ids = np.array([v for v, _ in rows])
    mat = np.array([vec for _, vec in rows])
    alive = np.ones(len(rows), dtype=bool)

    picks: list[tuple[int, int]] = []
    while alive.any():
        sub = mat[alive]
        mins = sub.min(axis=0)
        finite = np.isfinite(mins)
        if not finite.any():
            break
        survivors = (sub > mins).sum(axis=0)
        survivors = np.where(finite, survivors, -1)
        j = int(survivors.argmax())  # argmax takes the first max: lowest j
        mu = mins[j]
        attaining = node_ids[alive][sub[:, j] == mu]
        picks.append((int(attaining.min()), j))
        alive &= mat[:, j] > mu
    return PmiSequence(picks=tuple(picks))


def delta(
    g: Graph,
    leaders: Sequence[int],
    mode: str = "auto",
    cap: int = DEFAULT_EXACT_CAP,
) -> DeltaResult:
    """Distance-based lower bound with its certifying sequence.

    ``mode`` is one of exact, greedy, or auto (exact when the coordinate
    count fits under ``cap``, greedy otherwise). Either way the returned
    sequence passes :func:`is_valid_pmi`, so the value is always a sound
    lower bound; the flag records whether it is also the exact maximum.
    """
    dl = dl_matrix(g, leaders)
    return delta_from_dl(dl, mode=mode, cap=cap)


def delta_from_dl(dl: DLMatrix, mode: str = "auto", cap: int = DEFAULT_EXACT_CAP) -> DeltaResult:
    if mode not in ("auto", "exact", "greedy"):
        raise ValueError(f"unknown mode {mode!r}")
    use_exact = mode == "exact" or (mode == "auto" and dl.m <= cap)
    if use_exact:
        seq = longest_pmi_exact(dl, cap=cap)
        return DeltaResult(value=seq.length, sequence=seq, exact=True)
    seq = longest_pmi_greedy(dl)
    return DeltaResult(value=seq.length, sequence=seq, exact=False)
