"""Per-vertex importance scores: degree, eigenvector, betweenness, PageRank.

Each measure returns an :class:`ImportanceTable` over the graph's dense
vertex ids.  All four measures read the unweighted structure of the
graph; edge weights are ignored here.
"""

from dataclasses import dataclass

import numpy as np
from scipy.sparse import csr_matrix

from .errors import ConvergenceError
from .graph import connected_components

DEFAULT_TOL = 1e-10
DEFAULT_MAX_ITER = 10_000


@dataclass(frozen=True, eq=False)
class ImportanceTable:
    """One finite score per granule, plus the criterion that produced it."""

    scores: np.ndarray
    criterion: str = "custom"

    def __post_init__(self):
        scores = np.array(self.scores, dtype=float)
        if scores.ndim != 1:
            raise ValueError("scores must be a 1-d array")
        if not np.all(np.isfinite(scores)):
            raise ValueError("scores must be finite (no NaN/inf)")
        scores.flags.writeable = False
        object.__setattr__(self, "scores", scores)

    @property
    def n(self):
        return self.scores.shape[0]


def _binary_csr(g):
    ones = np.ones(g.indices.shape[0])
    return csr_matrix((ones, g.indices, g.indptr), shape=(g.n, g.n))


def _check_iteration_budget(tol, max_iter):
    if tol <= 0:
        raise ValueError("tol must be positive")
    if max_iter < 1:
        raise ValueError("max_iter must be at least 1")


def degree_importance(g):
    """Vertex degree as importance."""
    return ImportanceTable(np.diff(g.indptr).astype(float), "degree")


def eigenvector_centrality(g, tol=DEFAULT_TOL, max_iter=DEFAULT_MAX_ITER):
    """Principal adjacency eigenvector, rescaled so each component's
    maximum is 1.

    Power iteration with the damped update x <- (A x + x) / max(.)
    (the spectral shift keeps bipartite components from oscillating)
    from a uniform positive start.  Stops once successive iterates
    differ by less than ``tol`` in max-norm; raises
    :class:`ConvergenceError` if ``max_iter`` sweeps are not enough.

    Disconnected graphs are handled per component so small components
    are not washed out by the dominant one; an isolated vertex scores 1.
    """
    _check_iteration_budget(tol, max_iter)
    adj = _binary_csr(g)
    comp = connected_components(g)
    scores = np.zeros(g.n)
    n_comp = int(comp.max()) + 1 if g.n else 0
    for c in range(n_comp):
        idx = np.flatnonzero(comp == c)
        sub = adj[idx][:, idx]
        x = np.ones(idx.size)
        diff = np.inf
        for _ in range(max_iter):
            y = sub @ x + x
            y /= y.max()
            diff = np.abs(y - x).max()
            x = y
            if diff < tol:
                break
        else:
            raise ConvergenceError("eigenvector-centrality", diff, max_iter)
        scores[idx] = x
    return ImportanceTable(scores, "eigenvector")


def betweenness_centrality(g):
    """Fraction of shortest paths passing through each vertex.

    Brandes' accumulation over one BFS per source (unweighted shortest
    paths); path endpoints do not count as passing through.  Raw
    unordered-pair counts are normalized by (n-1)(n-2)/2, so scores lie
    in [0, 1].  Graphs with n < 3 score all zeros (the normalizer is
    undefined for them).
    """
    n = g.n
    if n < 3:
        return ImportanceTable(np.zeros(n), "betweenness")
    indptr, indices = g.indptr, g.indices
    acc = np.zeros(n)
    for s in range(n):
        sigma = np.zeros(n)
        sigma[s] = 1.0
        dist = np.full(n, -1, dtype=np.int64)
        dist[s] = 0
        frontier = np.array([s], dtype=np.int64)
        stages = []
        level = 0
        while frontier.size:
            counts = indptr[frontier + 1] - indptr[frontier]
            total = int(counts.sum())
            if total == 0:
                break
            # flat positions of every (frontier vertex, neighbor) pair
            ends = np.cumsum(counts)
            within = np.arange(total) - np.repeat(ends - counts, counts)
            flat = np.repeat(indptr[frontier], counts) + within
            heads = np.repeat(frontier, counts)
            tails = indices[flat]

            dist[tails[dist[tails] < 0]] = level + 1
            keep = dist[tails] == level + 1
            h_sel, t_sel = heads[keep], tails[keep]
            np.add.at(sigma, t_sel, sigma[h_sel])
            stages.append((h_sel, t_sel))
            frontier = np.unique(t_sel)
            level += 1

        delta = np.zeros(n)
        for h_sel, t_sel in reversed(stages):
            np.add.at(delta, h_sel, sigma[h_sel] / sigma[t_sel] * (1.0 + delta[t_sel]))
        delta[s] = 0.0
        acc += delta
    # acc counts ordered (s, t) pairs; halve, then divide by C(n-1, 2)
    return ImportanceTable(acc / ((n - 1) * (n - 2)), "betweenness")


def pagerank_importance(g, damping=0.85, tol=DEFAULT_TOL, max_iter=DEFAULT_MAX_ITER):
    """PageRank scores summing to 1.

    Fixed point of PR(v) = (1-d)/n + d * sum_{u ~ v} PR(u)/deg(u),
    iterated from the uniform vector until the max-norm change drops
    below ``tol``.  Isolated vertices are dangling: their rank mass is
    redistributed uniformly each sweep, which keeps the total at 1.
    """
    if not 0 < damping < 1:
        raise ValueError("damping must lie in (0, 1)")
    _check_iteration_budget(tol, max_iter)
    n = g.n
    if n == 0:
        return ImportanceTable(np.zeros(0), "pagerank")
    deg = np.diff(g.indptr)
    isolated = deg == 0
    inv_deg = np.zeros(n)
    inv_deg[~isolated] = 1.0 / deg[~isolated]
    adj = _binary_csr(g)
    x = np.full(n, 1.0 / n)
    diff = np.inf
    for _ in range(max_iter):
        dangling = x[isolated].sum()
        y = (1.0 - damping) / n + damping * (adj @ (x * inv_deg) + dangling / n)
        diff = np.abs(y - x).max()
        x = y
        if diff < tol:
            return ImportanceTable(x, "pagerank")
    raise ConvergenceError("pagerank", diff, max_iter)
