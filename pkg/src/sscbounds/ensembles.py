"""Random-graph families and the bound-vs-leader-count sweep harness.

Generators cover Erdos-Renyi (independent edge probability), preferential
attachment (new nodes attach to existing ones proportionally to degree),
and the named path/cycle/star families. The harness draws seeded instances
per (family, leader count) point, computes a bounds report for each, and
aggregates means; identical config and seed give byte-identical CSV output.
"""

from __future__ import annotations

import json
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import TextIO

from .bounds import bounds_report
from .graph import Graph, from_edge_list
from .rank import child_seed

NAMED_FAMILIES = ("path", "cycle", "star")
RANDOM_FAMILIES = ("er", "ba")


def gen_er(n: int, p: float, seed: int) -> Graph:
    """Undirected graph where each pair is adjacent with probability p."""
    if not 0 < p < 1:
        raise ValueError(f"edge probability must be in (0, 1), got {p}")
    rng = random.Random(seed)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return from_edge_list(n, directed=False, pairs=pairs)


def gen_ba(n: int, eps: int, seed: int) -> Graph:
    """Preferential attachment starting from a complete seed graph.

    The seed is the complete graph on max(eps, 2) nodes; every later node
    attaches to eps distinct existing nodes drawn with probability
    proportional to current degree (sampling from the edge-endpoint
    multiset until eps distinct targets accumulate).
    """
    if not 1 <= eps < n:
        raise ValueError(f"attachment count must satisfy 1 <= eps < n, got {eps}")
    rng = random.Random(seed)
    s = max(eps, 2)
    pairs = [(i, j) for i in range(s) for j in range(i + 1, s)]
    endpoint_pool: list[int] = []
    for i, j in pairs:
        endpoint_pool += [i, j]
    for new in range(s, n):
        targets: set[int] = set()
        while len(targets) < eps:
            targets.add(rng.choice(endpoint_pool))
        for t in sorted(targets):
            pairs.append((t, new))
            endpoint_pool += [t, new]
    return from_edge_list(n, directed=False, pairs=pairs)


def gen_named(family: str, n: int) -> Graph:
    """Canonical path/cycle/star on ids 0..n-1 (star centered at 0)."""
    if n < 1:
        raise ValueError("need at least one node")
    if family == "path":
        pairs = [(i, i + 1) for i in range(n - 1)]
    elif family == "cycle":
        pairs = [(i, i + 1) for i in range(n - 1)]
        if n >= 3:
            pairs.append((n - 1, 0))
    elif family == "star":
        if n < 2:
            raise ValueError("a star needs at least two nodes")
        pairs = [(0, i) for i in range(1, n)]
    else:
        raise ValueError(f"unknown named family {family!r}")
    return from_edge_list(n, directed=False, pairs=pairs)


@dataclass(frozen=True)
class EnsembleConfig:
    family: str
    n: int
    leader_counts: tuple[int, ...]
    param: float | None = None  # p for er, eps for ba, unused for named
    instances_per_point: int = 20
    seed: int = 0
    mode: str = "auto"
    rank_checks: int | None = None
    scheme: str = "integer"

    def validate(self) -> None:
        if self.family not in NAMED_FAMILIES + RANDOM_FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.n < 1:
            raise ValueError("n must be positive")
        if self.family == "er":
            if self.param is None or not 0 < self.param < 1:
                raise ValueError("er needs edge probability p in (0, 1)")
        if self.family == "ba":
            if self.param is None or not 1 <= int(self.param) < self.n:
                raise ValueError("ba needs attachment count in [1, n)")
        if not self.leader_counts:
            raise ValueError("need at least one leader count")
        if any(not 1 <= m <= self.n for m in self.leader_counts):
            raise ValueError("every leader count must lie in [1, n]")
        if self.instances_per_point < 1:
            raise ValueError("instances_per_point must be positive")
        if self.mode not in ("auto", "exact", "greedy"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.rank_checks is not None and self.rank_checks < 1:
            raise ValueError("rank_checks must be positive when set")

    @classmethod
    def from_json_dict(cls, obj: dict) -> "EnsembleConfig":
        param = obj.get("param")
        if param is None:
            param = obj.get("p", obj.get("epsilon"))
        cfg = cls(
            family=str(obj["family"]).lower(),
            n=int(obj["n"]),
            leader_counts=tuple(int(m) for m in obj["leader_counts"]),
            param=None if param is None else float(param),
            instances_per_point=int(obj.get("instances_per_point", 20)),
            seed=int(obj.get("seed", 0)),
            mode=str(obj.get("mode", "auto")),
            rank_checks=None if obj.get("rank_checks") is None else int(obj["rank_checks"]),
            scheme=str(obj.get("scheme", "integer")),
        )
        cfg.validate()
        return cfg

    @classmethod
    def from_json(cls, text: str) -> "EnsembleConfig":
        return cls.from_json_dict(json.loads(text))

    def param_label(self) -> str:
        if self.param is None:
            return ""
        if self.family == "ba":
            return str(int(self.param))
        return str(self.param)


@dataclass(frozen=True)
class InstanceRow:
    family: str
    param: str
    n: int
    m: int
    instance_seed: int
    delta: int
    delta_exact: bool
    zeta: int
    combined: int
    combined_exact: bool
    gamma_upper: int | None
    dset_is_leaders: bool

    def to_csv(self) -> str:
        gamma = "" if self.gamma_upper is None else str(self.gamma_upper)
        return (
            f"{self.family},{self.param},{self.n},{self.m},{self.instance_seed},"
            f"{self.delta},{self.delta_exact},{self.zeta},"
            f"{self.combined},{self.combined_exact},{gamma}"
        )


@dataclass(frozen=True)
class PointSummary:
    family: str
    param: str
    m: int
    mean_delta: float
    mean_zeta: float
    mean_combined: float
    count: int
    failures: int
    all_dset_equal_leaders: bool

    def to_csv(self) -> str:
        return (
            f"{self.family},{self.param},{self.m},"
            f"{self.mean_delta},{self.mean_zeta},{self.mean_combined},{self.count}"
        )


@dataclass(frozen=True)
class SweepResult:
    config: EnsembleConfig
    rows: tuple[InstanceRow, ...]
    summaries: tuple[PointSummary, ...]
    failures: tuple[str, ...] = field(default=())

    INSTANCE_HEADER = (
        "family,param,n,m,instance_seed,delta,delta_exact,zeta,"
        "combined,combined_exact,gamma_upper"
    )
    SUMMARY_HEADER = "family,param,m,mean_delta,mean_zeta,mean_combined,count"

    def write_instances_csv(self, dest: TextIO) -> None:
        dest.write(self.INSTANCE_HEADER + "\n")
        for row in self.rows:
            dest.write(row.to_csv() + "\n")

    def write_summary_csv(self, dest: TextIO) -> None:
        dest.write(self.SUMMARY_HEADER + "\n")
        for s in self.summaries:
            dest.write(s.to_csv() + "\n")


def _draw_graph(cfg: EnsembleConfig, seed: int) -> Graph:
    if cfg.family == "er":
        return gen_er(cfg.n, float(cfg.param), seed)
    if cfg.family == "ba":
        return gen_ba(cfg.n, int(cfg.param), seed)
    return gen_named(cfg.family, cfg.n)


def _run_instance(args: tuple[EnsembleConfig, int, int]) -> InstanceRow | str:
    cfg, m, instance_seed = args
    try:
        rng = random.Random(instance_seed)
        g = _draw_graph(cfg, child_seed(instance_seed, 0))
        # leaders are a uniform m-subset; ascending order keeps certificates
        # and greedy tie-breaking identical whenever the derived set equals
        # the leader set
        leaders = tuple(sorted(rng.sample(range(cfg.n), m)))
        report = bounds_report(
            g,
            leaders,
            mode=cfg.mode,
            with_rank=cfg.rank_checks is not None,
            samples=cfg.rank_checks or 1,
            scheme=cfg.scheme,
            seed=child_seed(instance_seed, 2),
        )
        return InstanceRow(
            family=cfg.family,
            param=cfg.param_label(),
            n=cfg.n,
            m=m,
            instance_seed=instance_seed,
            delta=report.delta.value,
            delta_exact=report.delta.exact,
            zeta=report.zeta,
            combined=report.combined.value,
            combined_exact=report.combined.exact,
            gamma_upper=report.min_rank,
            dset_is_leaders=set(report.dset) == set(leaders),
        )
    except Exception as exc:  # recorded, point flagged, run continues
        return f"m={m} seed={instance_seed}: {type(exc).__name__}: {exc}"


def default_workers() -> int:
    raw = os.environ.get("SSCBOUNDS_PARALLEL", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def run_ensemble(cfg: EnsembleConfig, workers: int | None = None) -> SweepResult:
    """Run the sweep: instances_per_point seeded draws per leader count.

    Results are deterministic for a fixed config regardless of worker
    count; instance rows are emitted in derived-seed order.
    """
    cfg.validate()
    if workers is None:
        workers = default_workers()
    tasks: list[tuple[EnsembleConfig, int, int]] = []
    for point_index, m in enumerate(cfg.leader_counts):
        for i in range(cfg.instances_per_point):
            iseed = child_seed(cfg.seed, point_index * cfg.instances_per_point + i)
            tasks.append((cfg, m, iseed))

    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(_run_instance, tasks, chunksize=4))
    else:
        outcomes = [_run_instance(t) for t in tasks]

    rows = [o for o in outcomes if isinstance(o, InstanceRow)]
    failures = tuple(o for o in outcomes if isinstance(o, str))

    summaries = []
    for m in cfg.leader_counts:
        got = [r for r in rows if r.m == m]
        count = len(got)
        n_fail = cfg.instances_per_point - count
        if count:
            summaries.append(
                PointSummary(
                    family=cfg.family,
                    param=cfg.param_label(),
                    m=m,
                    mean_delta=sum(r.delta for r in got) / count,
                    mean_zeta=sum(r.zeta for r in got) / count,
                    mean_combined=sum(r.combined for r in got) / count,
                    count=count,
                    failures=n_fail,
                    all_dset_equal_leaders=all(r.dset_is_leaders for r in got),
                )
            )
        else:
            summaries.append(
                PointSummary(cfg.family, cfg.param_label(), m, 0.0, 0.0, 0.0, 0, n_fail, False)
            )
    return SweepResult(
        config=cfg, rows=tuple(rows), summaries=tuple(summaries), failures=failures
    )
