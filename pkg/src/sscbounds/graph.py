"""Immutable directed/undirected graphs on dense integer node ids.

Every other module works on this one representation: node ids are the
integers 0..n-1, an undirected graph is stored as a symmetric directed
graph, and instances are frozen after construction so they can be shared
freely between threads or processes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence, TextIO


class GraphError(ValueError):
    """Structural problem: bad endpoint, self-loop, invalid leader set."""


@dataclass(frozen=True)
class Graph:
    """Simple graph with ``n`` nodes and no self-loops or parallel edges.

    ``out_adj[v]`` / ``in_adj[v]`` are sorted tuples of neighbors. For an
    undirected graph both maps are identical (each adjacency is stored in
    both orientations).
    """

    n: int
    directed: bool
    out_adj: tuple[tuple[int, ...], ...]
    in_adj: tuple[tuple[int, ...], ...]

    def out_neighbors(self, v: int) -> set[int]:
        """Nodes u with an edge v -> u."""
        self._check_node(v)
        return set(self.out_adj[v])

    def in_neighbors(self, v: int) -> set[int]:
        """Nodes u with an edge u -> v."""
        self._check_node(v)
        return set(self.in_adj[v])

    def edges(self) -> set[tuple[int, int]]:
        """All stored directed pairs (both orientations for undirected)."""
        return {(i, j) for i in range(self.n) for j in self.out_adj[i]}

    def edge_pairs(self) -> list[tuple[int, int]]:
        """Canonical edge list: one record per logical edge, sorted.

        For undirected graphs each edge appears once as (min, max).
        """
        if self.directed:
            return sorted(self.edges())
        return sorted((i, j) for (i, j) in self.edges() if i < j)

    def has_edge(self, i: int, j: int) -> bool:
        self._check_node(i)
        self._check_node(j)
        return j in self.out_adj[i]

    def degree_sequence(self) -> list[int]:
        return [len(self.out_adj[v]) for v in range(self.n)]

    def _check_node(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise GraphError(f"node id {v!r} out of range [0, {self.n})")

    def __repr__(self) -> str:  # keep test failures readable
        kind = "directed" if self.directed else "undirected"
        return f"Graph(n={self.n}, {kind}, edges={self.edge_pairs()})"


def from_edge_list(n: int, directed: bool, pairs: Iterable[tuple[int, int]]) -> Graph:
    """Build a validated :class:`Graph`.

    Undirected input pairs are symmetrized and duplicates collapse.
    Self-loops and out-of-range endpoints raise :class:`GraphError`.
    """
    if n < 1:
        raise GraphError(f"node count must be >= 1, got {n}")
    out_sets: list[set[int]] = [set() for _ in range(n)]
    in_sets: list[set[int]] = [set() for _ in range(n)]
    for i, j in pairs:
        if not (isinstance(i, int) and isinstance(j, int)):
            raise GraphError(f"edge endpoints must be integers, got ({i!r}, {j!r})")
        if i == j:
            raise GraphError(f"self-loop ({i}, {j}) not allowed")
        if not (0 <= i < n and 0 <= j < n):
            raise GraphError(f"edge ({i}, {j}) has endpoint outside [0, {n})")
        out_sets[i].add(j)
        in_sets[j].add(i)
        if not directed:
            out_sets[j].add(i)
            in_sets[i].add(j)
    return Graph(
        n=n,
        directed=directed,
        out_adj=tuple(tuple(sorted(s)) for s in out_sets),
        in_adj=tuple(tuple(sorted(s)) for s in in_sets),
    )


def reverse(g: Graph) -> Graph:
    """Flip every edge. Undirected graphs are fixed points."""
    return Graph(n=g.n, directed=g.directed, out_adj=g.in_adj, in_adj=g.out_adj)


def in_neighbors(g: Graph, v: int) -> set[int]:
    return g.in_neighbors(v)


def out_neighbors(g: Graph, v: int) -> set[int]:
    return g.out_neighbors(v)


def validate_leaders(g: Graph, leaders: Sequence[int]) -> tuple[int, ...]:
    """Check a leader list: nonempty, distinct, valid ids. Order is kept.

    The position of a leader in the returned tuple is its coordinate in
    every distance-to-leaders vector derived from it.
    """
    if len(leaders) == 0:
        raise GraphError("leader set must contain at least one node")
    seen: set[int] = set()
    for v in leaders:
        g._check_node(v)
        if v in seen:
            raise GraphError(f"duplicate leader {v}")
        seen.add(v)
    return tuple(leaders)


# ---------------------------------------------------------------------------
# File format. Text form:
#     graph <n> <directed|undirected>
#     edge <i> <j>
# with '#' starting a comment. JSON form:
#     {"n": ..., "directed": ..., "edges": [[i, j], ...]}
# Both are accepted interchangeably by read_graph.
# ---------------------------------------------------------------------------


def parse_graph_text(text: str) -> Graph:
    n = None
    directed = None
    pairs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if fields[0] == "graph":
            if n is not None:
                raise GraphError(f"line {lineno}: repeated graph header")
            if len(fields) != 3 or fields[2] not in ("directed", "undirected"):
                raise GraphError(f"line {lineno}: expected 'graph <n> <directed|undirected>'")
            try:
                n = int(fields[1])
            except ValueError:
                raise GraphError(f"line {lineno}: bad node count {fields[1]!r}") from None
            directed = fields[2] == "directed"
        elif fields[0] == "edge":
            if n is None:
                raise GraphError(f"line {lineno}: edge before graph header")
            if len(fields) != 3:
                raise GraphError(f"line {lineno}: expected 'edge <i> <j>'")
            try:
                pairs.append((int(fields[1]), int(fields[2])))
            except ValueError:
                raise GraphError(f"line {lineno}: bad edge endpoints") from None
        else:
            raise GraphError(f"line {lineno}: unknown record {fields[0]!r}")
    if n is None or directed is None:
        raise GraphError("missing 'graph <n> <directed|undirected>' header")
    return from_edge_list(n, directed, pairs)


def parse_graph_json(text: str) -> Graph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"invalid graph JSON: {exc}") from None
    if not isinstance(obj, dict) or not {"n", "directed", "edges"} <= set(obj):
        raise GraphError('graph JSON needs fields "n", "directed", "edges"')
    edges = [(int(i), int(j)) for i, j in obj["edges"]]
    return from_edge_list(int(obj["n"]), bool(obj["directed"]), edges)


def loads_graph(text: str) -> Graph:
    """Parse either the text or the JSON form, sniffing by first character."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return parse_graph_json(text)
    return parse_graph_text(text)


def read_graph(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return loads_graph(fh.read())


def dumps_graph(g: Graph, fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps(
            {"n": g.n, "directed": g.directed, "edges": [list(e) for e in g.edge_pairs()]}
        )
    if fmt != "text":
        raise ValueError(f"unknown graph format {fmt!r}")
    kind = "directed" if g.directed else "undirected"
    lines = [f"graph {g.n} {kind}"]
    lines.extend(f"edge {i} {j}" for i, j in g.edge_pairs())
    return "\n".join(lines) + "\n"


def write_graph(g: Graph, dest: str | TextIO, fmt: str = "text") -> None:
    payload = dumps_graph(g, fmt)
    if isinstance(dest, str):
        with open(dest, "w", encoding="utf-8") as fh:
            fh.write(payload)
    else:
        dest.write(payload)
