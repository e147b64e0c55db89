"""Zero forcing: propagate black color from an input set to its derived set.

Rule: a black node with exactly one white in-neighbor turns that neighbor
black. The fixpoint (derived set) is unique regardless of rule order, its
size is the forcing-based controllability lower bound ``zeta``, and an
input set whose derived set covers every node is a zero forcing set.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from .graph import Graph, validate_leaders


@dataclass(frozen=True)
class DerivedSet:
    members: frozenset[int]
    input_set: tuple[int, ...]
    trace: tuple[tuple[int, int], ...] = field(default=(), compare=False)

    def __len__(self) -> int:
        return len(self.members)

    def trace_events(self) -> list[dict[str, int]]:
        """Forcing events as JSON-friendly records, in application order."""
        return [{"forcer": a, "forced": b} for a, b in self.trace]


def derived_set(g: Graph, leaders: Sequence[int]) -> DerivedSet:
    """Least fixpoint of the forcing rule starting from black = leaders.

    Worklist implementation: each black node caches its count of white
    in-neighbors; a count hitting exactly one schedules a force. Coloring
    a node updates the counts of the black nodes it feeds into, so no
    full rescans happen and the result matches naive iteration (the
    fixpoint is order-independent).
    """
    input_set = validate_leaders(g, leaders)
    black = [False] * g.n
    for v in input_set:
        black[v] = True

    white_in = [0] * g.n
    queue: deque[int] = deque()
    for v in range(g.n):
        if black[v]:
            white_in[v] = sum(1 for u in g.in_adj[v] if not black[u])
            if white_in[v] == 1:
                queue.append(v)

    trace: list[tuple[int, int]] = []
    while queue:
        v = queue.popleft()
        if white_in[v] != 1:
            continue  # stale entry, count changed since scheduling
        u = next(w for w in g.in_adj[v] if not black[w])
        black[u] = True
        trace.append((v, u))
        white_in[u] = sum(1 for w in g.in_adj[u] if not black[w])
        if white_in[u] == 1:
            queue.append(u)
        for x in g.out_adj[u]:
            if black[x]:
                white_in[x] -= 1
                if white_in[x] == 1:
                    queue.append(x)

    members = frozenset(v for v in range(g.n) if black[v])
    return DerivedSet(members=members, input_set=input_set, trace=tuple(trace))


def zeta(g: Graph, leaders: Sequence[int]) -> int:
    """Size of the derived set: the zero-forcing lower bound."""
    return len(derived_set(g, leaders))


def is_zfs(g: Graph, leaders: Sequence[int]) -> bool:
    """True when forcing from the leaders eventually colors every node."""
    return zeta(g, leaders) == g.n
