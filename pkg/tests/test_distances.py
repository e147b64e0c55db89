import io
import random

import numpy as np
import pytest

from oracles import apsp_floyd_warshall
from sscbounds import (
    DLMatrix,
    GraphError,
    INF,
    distances_to_leader,
    dl_matrix,
    from_edge_list,
    gen_named,
)


def random_graph(rng, max_n=8):
    n = rng.randint(1, max_n)
    directed = rng.random() < 0.5
    p = rng.choice((0.2, 0.35, 0.5))
    if directed:
        pairs = [(i, j) for i in range(n) for j in range(n) if i != j and rng.random() < p]
    else:
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return from_edge_list(n, directed, pairs)


def test_path_distances():
    g = gen_named("path", 3)
    assert list(distances_to_leader(g, 0)) == [0.0, 1.0, 2.0]


def test_unreachable_is_inf():
    g = from_edge_list(2, True, [(0, 1)])
    assert list(distances_to_leader(g, 0)) == [0.0, INF]


def test_invalid_leader():
    g = gen_named("path", 3)
    with pytest.raises(GraphError):
        distances_to_leader(g, 7)


def test_bfs_matches_all_pairs_oracle():
    """Per-leader BFS equals the cubic all-pairs recurrence on 200 graphs."""
    rng = random.Random(101)
    for _ in range(200):
        g = random_graph(rng)
        oracle = apsp_floyd_warshall(g)
        ell = rng.randrange(g.n)
        got = distances_to_leader(g, ell)
        assert np.array_equal(got, oracle[:, ell])


def test_dl_matrix_path_single_and_double():
    g = gen_named("path", 3)
    assert dl_matrix(g, [0]).dist.tolist() == [[0.0], [1.0], [2.0]]
    assert dl_matrix(g, [0, 2]).dist.tolist() == [[0.0, 2.0], [1.0, 1.0], [2.0, 0.0]]


def test_dl_matrix_star_center():
    g = gen_named("star", 4)
    dl = dl_matrix(g, [0])
    assert dl.dist.tolist() == [[0.0], [1.0], [1.0], [1.0]]


def test_dl_matrix_invariants_on_randoms():
    rng = random.Random(202)
    for _ in range(100):
        g = random_graph(rng)
        m = rng.randint(1, min(3, g.n))
        leaders = sorted(rng.sample(range(g.n), m))
        dl = dl_matrix(g, leaders)
        for k, ell in enumerate(leaders):
            assert dl.dist[ell, k] == 0.0
            assert (np.flatnonzero(dl.dist[:, k] == 0.0) == [ell]).all()
        # every finite nonzero entry steps down along some out-edge
        for v in range(g.n):
            for k in range(dl.m):
                d = dl.dist[v, k]
                if d not in (0.0, INF):
                    assert any(dl.dist[u, k] == d - 1 for u in g.out_neighbors(v))


def test_strongly_connected_all_finite():
    rng = random.Random(303)
    for _ in range(50):
        n = rng.randint(2, 8)
        pairs = [(i, (i + 1) % n) for i in range(n)]  # a directed cycle
        pairs += [
            (i, j) for i in range(n) for j in range(n) if i != j and rng.random() < 0.3
        ]
        g = from_edge_list(n, True, pairs)
        dl = dl_matrix(g, [rng.randrange(n)])
        assert np.isfinite(dl.dist).all()


def test_edge_addition_never_increases_distance():
    rng = random.Random(404)
    for _ in range(50):
        g = random_graph(rng, max_n=7)
        if g.n < 2:
            continue
        ell = rng.randrange(g.n)
        before = distances_to_leader(g, ell)
        extra = [(i, j) for i in range(g.n) for j in range(g.n) if i != j]
        i, j = rng.choice(extra)
        g2 = from_edge_list(g.n, g.directed, list(g.edge_pairs()) + [(i, j)])
        after = distances_to_leader(g2, ell)
        assert (after <= before).all()


def test_from_rows_infers_leaders():
    dl = DLMatrix.from_rows([[3, 0], [0, 4], [1, 4], [2, 1], [3, 2], [4, 3]])
    assert dl.leaders == (1, 0)
    with pytest.raises(ValueError):
        DLMatrix.from_rows([[1, 2], [3, 4]])  # no zero in any column


def test_csv_export_with_inf():
    g = from_edge_list(2, True, [(0, 1)])
    dl = dl_matrix(g, [0])
    buf = io.StringIO()
    dl.to_csv(buf)
    assert buf.getvalue() == "node,leader_0\n0,0\n1,inf\n"
