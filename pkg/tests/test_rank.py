import io
import random
from fractions import Fraction

import numpy as np
import pytest
import sympy

from sscbounds import (
    GraphError,
    controllability_matrix,
    from_edge_list,
    gamma_upper_estimate,
    gen_er,
    gen_named,
    laplacian,
    range_rank_invariance,
    rank_exact,
    rank_numeric,
    sample_weights,
)


def random_graph(rng, max_n=10):
    n = rng.randint(2, max_n)
    directed = rng.random() < 0.5
    p = rng.choice((0.25, 0.4, 0.6))
    if directed:
        pairs = [(i, j) for i in range(n) for j in range(n) if i != j and rng.random() < p]
    else:
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return from_edge_list(n, directed, pairs)


def test_unit_scheme_all_ones():
    g = gen_named("path", 4)
    w = sample_weights(g, scheme="unit")
    assert set(w.weights.values()) == {1}


def test_integer_scheme_reproducible_and_symmetric():
    g = gen_er(8, 0.4, seed=3)
    w1 = sample_weights(g, seed=11, scheme="integer")
    w2 = sample_weights(g, seed=11, scheme="integer")
    assert w1.weights == w2.weights
    for (i, j), value in w1.weights.items():
        assert w1.weights[(j, i)] == value


def test_uniform_scheme_in_half_open_interval():
    g = gen_er(10, 0.5, seed=4)
    w = sample_weights(g, seed=7, scheme="uniform")
    assert all(0.0 < v <= 1.0 for v in w.weights.values())


def test_bad_scheme_rejected():
    g = gen_named("path", 3)
    with pytest.raises(ValueError):
        sample_weights(g, scheme="gaussian")


def test_path_unit_laplacian():
    g = gen_named("path", 3)
    lap = laplacian(g, sample_weights(g, scheme="unit"))
    assert lap.tolist() == [[1, -1, 0], [-1, 2, -1], [0, -1, 1]]


def test_single_node_laplacian():
    g = from_edge_list(1, False, [])
    assert laplacian(g, sample_weights(g, scheme="unit")).tolist() == [[0]]


def test_laplacian_rows_sum_to_zero():
    rng = random.Random(21)
    for _ in range(100):
        g = random_graph(rng)
        lap = laplacian(g, sample_weights(g, seed=rng.randrange(10**9), scheme="integer"))
        for row in lap:
            assert sum(row) == 0


def test_laplacian_rejects_bad_weight_cover():
    g = gen_named("path", 3)
    w = sample_weights(g, scheme="unit")
    missing = {e: v for e, v in w.weights.items() if e != (0, 1)}
    with pytest.raises(GraphError):
        laplacian(g, type(w)(weights=missing, rng_seed=0, scheme="unit"))
    negative = dict(w.weights)
    negative[(0, 1)] = -1
    with pytest.raises(GraphError):
        laplacian(g, type(w)(weights=negative, rng_seed=0, scheme="unit"))


def test_controllability_matrix_path_hand_computed():
    g = gen_named("path", 3)
    gamma = controllability_matrix(laplacian(g, sample_weights(g, scheme="unit")), [0])
    assert gamma.tolist() == [[1, -1, 2], [0, 1, -3], [0, 0, 1]]


def test_controllability_block_recurrence():
    rng = random.Random(31)
    for _ in range(30):
        g = random_graph(rng, max_n=7)
        leaders = sorted(rng.sample(range(g.n), rng.randint(1, min(3, g.n))))
        lap = laplacian(g, sample_weights(g, seed=rng.randrange(10**9), scheme="integer"))
        gamma = controllability_matrix(lap, leaders)
        n, m = g.n, len(leaders)
        assert gamma.shape == (n, n * m)
        for k in range(1, n):
            blk = gamma[:, k * m : (k + 1) * m]
            prev = gamma[:, (k - 1) * m : k * m]
            assert np.array_equal(blk, (-lap) @ prev)


def test_all_leaders_full_rank():
    g = gen_er(6, 0.4, seed=8)
    lap = laplacian(g, sample_weights(g, seed=1, scheme="integer"))
    gamma = controllability_matrix(lap, list(range(6)))
    assert rank_exact(gamma) == 6


def test_single_node_controllability():
    g = from_edge_list(1, False, [])
    gamma = controllability_matrix(laplacian(g, sample_weights(g, scheme="unit")), [0])
    assert gamma.tolist() == [[1]]


def test_rank_exact_examples():
    assert rank_exact([[0, 0], [0, 0]]) == 0
    assert rank_exact([[1, 2], [2, 4]]) == 1
    assert rank_exact([[Fraction(1, 2), 1], [1, 1]]) == 2
    g = gen_named("cycle", 3)
    gamma = controllability_matrix(laplacian(g, sample_weights(g, scheme="unit")), [0])
    assert rank_exact(gamma) == 2


def test_rank_exact_matches_sympy():
    rng = random.Random(41)
    for _ in range(60):
        rows = rng.randint(1, 6)
        cols = rng.randint(1, 6)
        mat = [[rng.randint(-5, 5) for _ in range(cols)] for _ in range(rows)]
        assert rank_exact(mat) == sympy.Matrix(mat).rank()


def test_rank_numeric_basics():
    assert rank_numeric(np.eye(5)) == 5
    outer = np.outer([1.0, 2.0, 3.0], [4.0, 5.0])
    assert rank_numeric(outer) == 1
    assert rank_numeric(np.zeros((3, 3))) == 0


def test_rank_numeric_absolute_override():
    mat = np.diag([1.0, 1e-9])
    assert rank_numeric(mat) == 2
    assert rank_numeric(mat, tol=1e-6) == 1


def test_rank_numeric_agrees_with_exact():
    """Small integer weights keep the numeric route inside float64 reach."""
    rng = random.Random(51)
    for _ in range(100):
        g = random_graph(rng)
        m = rng.randint(2, min(3, g.n))
        leaders = sorted(rng.sample(range(g.n), m))
        w = sample_weights(g, seed=rng.randrange(10**9), scheme="integer", w_max=2)
        gamma = controllability_matrix(laplacian(g, w), leaders)
        assert rank_exact(gamma) == rank_numeric(np.asarray(gamma, dtype=float))


def test_gamma_upper_path_and_star():
    p3 = gen_named("path", 3)
    assert gamma_upper_estimate(p3, [0], samples=4).min_rank == 3
    star = gen_named("star", 4)
    assert gamma_upper_estimate(star, [0], samples=10).min_rank == 2


def test_gamma_upper_triangle_includes_unit():
    g = gen_named("cycle", 3)
    ev = gamma_upper_estimate(g, [0], samples=5, scheme="integer", seed=9)
    assert ev.schemes[0] == "unit"
    assert ev.min_rank == 2
    assert all(r >= 2 for r in ev.ranks)


def test_evidence_csv_schema():
    g = gen_named("path", 3)
    ev = gamma_upper_estimate(g, [0], samples=2, seed=5)
    buf = io.StringIO()
    ev.to_csv(buf)
    lines = buf.getvalue().strip().splitlines()
    assert lines[0] == "seed,scheme,rank,runtime_ms"
    assert len(lines) == 3


def test_range_invariance_examples():
    p3 = gen_named("path", 3)
    assert range_rank_invariance(p3, [0], sample_weights(p3, scheme="unit"))
    star = gen_named("star", 4)
    assert range_rank_invariance(star, [0], sample_weights(star, scheme="unit"))


def test_range_invariance_randoms():
    rng = random.Random(61)
    for _ in range(60):
        g = random_graph(rng)
        m = rng.randint(1, min(3, g.n))
        leaders = sorted(rng.sample(range(g.n), m))
        w = sample_weights(g, seed=rng.randrange(10**9), scheme="integer")
        assert range_rank_invariance(g, leaders, w)
