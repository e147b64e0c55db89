"""Exhaustive and randomized property suites over small instances.

Every instance gets a bounds report with exact-arithmetic rank evidence,
and each implication below is scored verified / violated / not_applicable
/ inconclusive. A single violation falsifies the implementation, so the
summary carries counterexample dumps. The same engine powers the search
for instances where the combined bound strictly beats both plain bounds.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Sequence

from .bounds import BoundsReport, bounds_report
from .distances import dl_matrix
from .graph import Graph, dumps_graph, from_edge_list
from .pmi import delta_from_dl
from .rank import child_seed
from .zero_forcing import derived_set

PROPERTIES = (
    "delta_le_rank",
    "zeta_le_rank",
    "combined_at_least_zeta",
    "combined_sandwich",
    "combined_le_rank",
    "full_distance_forces_all",
    "leader_in_degree_gap",
    "single_leader_gap",
    "derived_leader_range_invariance",
    "single_leader_max_distance",
)

VERIFIED = "verified"
VIOLATED = "violated"
NOT_APPLICABLE = "not_applicable"
INCONCLUSIVE = "inconclusive"


def enumerate_connected_graphs(n: int) -> Iterator[Graph]:
    """All labeled connected undirected graphs on n nodes, mask order."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        edges = [pairs[b] for b in range(len(pairs)) if mask >> b & 1]
        if _connected(n, edges):
            yield from_edge_list(n, directed=False, pairs=edges)


def enumerate_digraphs(n: int) -> Iterator[Graph]:
    """All labeled simple digraphs on n nodes (connectivity not required)."""
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    for mask in range(1 << len(pairs)):
        edges = [pairs[b] for b in range(len(pairs)) if mask >> b & 1]
        yield from_edge_list(n, directed=True, pairs=edges)


def _connected(n: int, edges: list[tuple[int, int]]) -> bool:
    if n == 1:
        return True
    adj: list[list[int]] = [[] for _ in range(n)]
    for i, j in edges:
        adj[i].append(j)
        adj[j].append(i)
    seen = [False] * n
    stack = [0]
    seen[0] = True
    count = 1
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if not seen[y]:
                seen[y] = True
                count += 1
                stack.append(y)
    return count == n


def leader_sets(n: int, max_size: int) -> Iterator[tuple[int, ...]]:
    for size in range(1, max_size + 1):
        yield from combinations(range(n), size)


def evaluate_properties(g: Graph, report: BoundsReport) -> dict[str, str]:
    """Score the acceptance-property list on one computed report."""
    flags: dict[str, str] = {}
    d, z, c = report.delta.value, report.zeta, report.combined.value
    min_rank = report.min_rank

    def rank_check(bound: int) -> str:
        if min_rank is None:
            return NOT_APPLICABLE
        if not report.rank_evidence.exact:
            return INCONCLUSIVE
        return VERIFIED if bound <= min_rank else VIOLATED

    flags["delta_le_rank"] = rank_check(d)
    flags["zeta_le_rank"] = rank_check(z)
    flags["combined_le_rank"] = rank_check(c)
    flags["combined_at_least_zeta"] = VERIFIED if c >= z else VIOLATED

    if (report.delta.exact and report.combined.exact) or len(report.dset) == g.n:
        flags["combined_sandwich"] = VERIFIED if c >= max(d, z) else VIOLATED
    else:
        flags["combined_sandwich"] = INCONCLUSIVE

    for key in (
        "full_distance_forces_all",
        "leader_in_degree_gap",
        "single_leader_gap",
        "derived_leader_range_invariance",
        "single_leader_max_distance",
    ):
        flags[key] = report.theorem_flags[key]
    return flags


@dataclass
class VerificationSummary:
    instances: int = 0
    counts: dict[str, dict[str, int]] = field(
        default_factory=lambda: {p: {} for p in PROPERTIES}
    )
    violations: list[str] = field(default_factory=list)

    def record(self, g: Graph, leaders: Sequence[int], flags: dict[str, str]) -> None:
        self.instances += 1
        for prop in PROPERTIES:
            status = flags[prop]
            self.counts[prop][status] = self.counts[prop].get(status, 0) + 1
            if status == VIOLATED:
                dump = dumps_graph(g) + f"# leaders {','.join(map(str, leaders))}\n"
                self.violations.append(f"{prop}:\n{dump}")

    @property
    def violation_count(self) -> int:
        return len(self.violations)

    def to_text(self) -> str:
        lines = [f"instances: {self.instances}"]
        for prop in PROPERTIES:
            statuses = self.counts[prop]
            cells = " ".join(f"{k}={statuses[k]}" for k in sorted(statuses))
            lines.append(f"{prop}: {cells or 'none'}")
        lines.append(f"violations: {self.violation_count}")
        for v in self.violations:
            lines.append(v)
        return "\n".join(lines) + "\n"


def check_instance(
    g: Graph,
    leaders: Sequence[int],
    rank_samples: int = 3,
    rank_seed: int = 0,
) -> dict[str, str]:
    report = bounds_report(
        g,
        leaders,
        mode="auto",
        with_rank=True,
        samples=rank_samples,
        scheme="integer",
        seed=rank_seed,
    )
    return evaluate_properties(g, report)


def run_exhaustive_suite(
    max_n: int = 5,
    max_leaders: int = 2,
    digraph_max_n: int = 4,
    rank_samples: int = 3,
    rank_seed: int = 0,
) -> VerificationSummary:
    """Connected undirected graphs up to max_n with leader sets up to
    max_leaders, plus every digraph up to digraph_max_n with each single
    leader."""
    summary = VerificationSummary()
    for n in range(1, max_n + 1):
        for g in enumerate_connected_graphs(n):
            for leaders in leader_sets(n, max_leaders):
                flags = check_instance(g, leaders, rank_samples, rank_seed)
                summary.record(g, leaders, flags)
    for n in range(1, digraph_max_n + 1):
        for g in enumerate_digraphs(n):
            for v in range(n):
                flags = check_instance(g, (v,), rank_samples, rank_seed)
                summary.record(g, (v,), flags)
    return summary


def random_instances(
    count: int, seed: int, max_n: int = 12, max_m: int = 4
) -> Iterator[tuple[Graph, tuple[int, ...]]]:
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(2, max_n)
        directed = rng.random() < 0.5
        p = rng.choice((0.2, 0.35, 0.5))
        if directed:
            pairs = [
                (i, j) for i in range(n) for j in range(n)
                if i != j and rng.random() < p
            ]
        else:
            pairs = [
                (i, j) for i in range(n) for j in range(i + 1, n)
                if rng.random() < p
            ]
        g = from_edge_list(n, directed, pairs)
        m = rng.randint(1, min(max_m, n))
        leaders = tuple(sorted(rng.sample(range(n), m)))
        yield g, leaders


def run_random_suite(
    count: int = 500,
    seed: int = 0,
    max_n: int = 12,
    max_m: int = 4,
    rank_samples: int = 3,
) -> VerificationSummary:
    summary = VerificationSummary()
    for k, (g, leaders) in enumerate(random_instances(count, seed, max_n, max_m)):
        flags = check_instance(g, leaders, rank_samples, rank_seed=child_seed(seed, k))
        summary.record(g, leaders, flags)
    return summary


def find_strict_combined_example(
    max_n: int = 7, max_leaders: int = 2
) -> tuple[Graph, tuple[int, ...], int, int, int] | None:
    """First connected undirected instance where the combined bound beats
    both plain bounds strictly. Returns (graph, leaders, delta, zeta,
    combined) or None when no instance exists up to max_n.
    """
    for n in range(3, max_n + 1):
        for g in enumerate_connected_graphs(n):
            for leaders in leader_sets(n, max_leaders):
                dset = tuple(sorted(derived_set(g, leaders).members))
                if set(dset) == set(leaders):
                    continue  # combined coincides with the plain bound
                d = delta_from_dl(dl_matrix(g, leaders), mode="exact", cap=n).value
                z = len(dset)
                if max(d, z) >= g.n:
                    continue  # combined cannot exceed n
                c = delta_from_dl(dl_matrix(g, dset), mode="exact", cap=n).value
                if c > max(d, z):
                    return g, leaders, d, z, c
    return None
