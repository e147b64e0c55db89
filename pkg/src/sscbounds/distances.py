"""Hop distances from every node to every leader.

Distances are directed: entry (v, k) is the length of a shortest path
FROM v TO leader k, or infinity when no such path exists. Columns come
from one breadth-first search per leader run over reversed edges, which
costs m * O(n + |E|) instead of the cubic all-pairs route.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence, TextIO

import numpy as np

from .graph import Graph, validate_leaders

INF = float("inf")


def distances_to_leader(g: Graph, leader: int) -> np.ndarray:
    """Length-n float array of shortest-path hop counts into ``leader``.

    Unreachable nodes get ``inf``. BFS walks in-neighbors, which is the
    same as searching from the leader in the reversed graph.
    """
    g._check_node(leader)
    dist = np.full(g.n, INF)
    dist[leader] = 0.0
    queue = deque([leader])
    while queue:
        x = queue.popleft()
        nxt = dist[x] + 1.0
        for u in g.in_adj[x]:
            if dist[u] == INF:
                dist[u] = nxt
                queue.append(u)
    return dist


@dataclass(frozen=True, eq=False)
class DLMatrix:
    """n x m matrix of distances to leaders, column k owned by leader k.

    Invariants: each leader is at distance 0 from itself, nobody else is
    at distance 0 from it, and every finite nonzero entry decreases by
    one along some outgoing edge.
    """

    dist: np.ndarray
    leaders: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.dist.shape[0]

    @property
    def m(self) -> int:
        return self.dist.shape[1]

    def row(self, v: int) -> np.ndarray:
        return self.dist[v]

    def finite_rows(self) -> list[int]:
        """Nodes whose vector has at least one finite entry."""
        return [v for v in range(self.n) if np.isfinite(self.dist[v]).any()]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[float]]) -> "DLMatrix":
        """Build from raw vectors, inferring the leader of each column.

        The row holding the unique 0 of column k is taken to be leader k;
        a column with no zero or with several zeros is rejected.
        """
        dist = np.asarray(rows, dtype=float)
        if dist.ndim != 2 or dist.shape[0] < 1 or dist.shape[1] < 1:
            raise ValueError("expected a nonempty 2-d array of distances")
        leaders = []
        for k in range(dist.shape[1]):
            zero_rows = np.flatnonzero(dist[:, k] == 0.0)
            if len(zero_rows) != 1:
                raise ValueError(f"column {k} must contain exactly one zero entry")
            leaders.append(int(zero_rows[0]))
        return cls(dist=dist, leaders=tuple(leaders))

    def to_csv(self, dest: TextIO) -> None:
        """One row per node, one column per leader, 'inf' for unreachable."""
        header = ",".join(f"leader_{ell}" for ell in self.leaders)
        dest.write(f"node,{header}\n")
        for v in range(self.n):
            cells = ",".join(_fmt_dist(x) for x in self.dist[v])
            dest.write(f"{v},{cells}\n")


def _fmt_dist(x: float) -> str:
    return "inf" if x == INF else str(int(x))


def dl_matrix(g: Graph, leaders: Sequence[int]) -> DLMatrix:
    """Distance-to-leaders matrix; column order follows the leader list."""
    ordered = validate_leaders(g, leaders)
    cols = [distances_to_leader(g, ell) for ell in ordered]
    return DLMatrix(dist=np.column_stack(cols), leaders=ordered)
