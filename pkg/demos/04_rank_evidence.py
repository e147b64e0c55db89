"""
Weighted Laplacians, controllability matrices, and rank evidence
================================================================

The quantity the bounds undercut is the smallest controllability-matrix
rank over all positive edge weights. That minimum ranges over a continuum,
so the toolkit samples weight functions and reports the smallest observed
rank as an upper estimate, computed exactly over the rationals whenever
the weights are integers and the graph is small.
"""

import numpy as np

from sscbounds import (
    controllability_matrix,
    gamma_upper_estimate,
    gen_named,
    laplacian,
    range_rank_invariance,
    rank_exact,
    rank_numeric,
    sample_weights,
)

# Unit weights on a path: the textbook tridiagonal Laplacian.
path = gen_named("path", 3)
w = sample_weights(path, scheme="unit")
lap = laplacian(path, w)
print("unit-weight path Laplacian (rows sum to zero):")
print(np.asarray(lap, dtype=int))

# Krylov blocks of the leader indicator: [B, -L B, (-L)^2 B].
gamma = controllability_matrix(lap, [0])
print("\ncontrollability matrix for leader 0:")
print(np.asarray(gamma, dtype=int))
print("exact rank:", rank_exact(gamma), "| numeric rank:",
      rank_numeric(np.asarray(gamma, dtype=float)))

# A triangle with one leader shows why sampling includes unit weights:
# symmetric weights collapse the rank to 2, random ones are full rank.
triangle = gen_named("cycle", 3)
unit_rank = rank_exact(
    controllability_matrix(laplacian(triangle, sample_weights(triangle, scheme="unit")), [0])
)
random_rank = rank_exact(
    controllability_matrix(
        laplacian(triangle, sample_weights(triangle, seed=1, scheme="integer")), [0]
    )
)
print("\ntriangle, single leader: unit-weight rank", unit_rank,
      "vs random-integer rank", random_rank)

evidence = gamma_upper_estimate(triangle, [0], samples=5, seed=0)
print("sampled ranks:", evidence.ranks, "-> upper estimate", evidence.min_rank)

# Adding every derived-set member as a leader never changes the reachable
# space; the rank-level certificate compares ranks with the original
# leaders, the derived-set leaders, and both stacked side by side.
print("\nrange invariance certificate on the path:",
      range_rank_invariance(path, [0], w))
