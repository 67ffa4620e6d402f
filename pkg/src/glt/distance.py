"""Pairwise granule distances: shortest paths, Jaccard, SimRank.

All builders return a :class:`DistanceMatrix`: symmetric, zero diagonal,
entries in [0, inf].  Infinite entries mean "no finite route" and only
arise between different connected components.
"""

from dataclasses import dataclass

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path as _csgraph_shortest_path

from .errors import ConvergenceError
from .importance import DEFAULT_MAX_ITER, DEFAULT_TOL, _binary_csr

DEFAULT_DECAY = 0.8


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """Symmetric pairwise distances with a tag naming the measure."""

    d: np.ndarray
    metric: str = "custom"

    def __post_init__(self):
        d = np.array(self.d, dtype=float)
        if d.ndim != 2 or d.shape[0] != d.shape[1]:
            raise ValueError("distance matrix must be square")
        if np.isnan(d).any():
            raise ValueError("distance matrix must not contain NaN")
        if (d < 0).any():
            raise ValueError("distances must be nonnegative")
        if np.any(np.diag(d) != 0):
            raise ValueError("diagonal must be zero")
        if not np.array_equal(d, d.T):
            raise ValueError("distance matrix must be symmetric")
        d.flags.writeable = False
        object.__setattr__(self, "d", d)

    @property
    def n(self):
        return self.d.shape[0]

    def max_finite(self):
        """Largest finite entry (0 when nothing is reachable)."""
        return float(self.d[np.isfinite(self.d)].max()) if self.n else 0.0


def shortest_path_matrix(g, use_weights=False):
    """All-pairs geodesic lengths; unreachable pairs are inf.

    Unweighted by default (every edge counts 1); with ``use_weights``
    the stored nonnegative edge weights are summed instead.
    """
    if g.n == 0:
        return DistanceMatrix(np.zeros((0, 0)), "shortest-path")
    csr = csr_matrix((g.edge_weights, g.indices, g.indptr), shape=(g.n, g.n))
    d = _csgraph_shortest_path(csr, method="D", directed=True,
                               unweighted=not use_weights)
    # Dijkstra may differ across source order in the last bits; force
    # exact symmetry without changing any true distance.
    d = np.minimum(d, d.T)
    return DistanceMatrix(d, "shortest-path")


def jaccard_distance_matrix(g):
    """1 - |N(u) & N(v)| / |N(u) | N(v)| over open neighborhoods.

    Vertex pairs whose neighborhoods are both empty get distance 1;
    the diagonal is forced to 0.
    """
    b = _binary_csr(g).toarray()
    inter = b @ b
    deg = np.diff(g.indptr).astype(float)
    union = deg[:, None] + deg[None, :] - inter
    sim = np.zeros_like(inter)
    nz = union > 0
    sim[nz] = inter[nz] / union[nz]
    d = 1.0 - sim
    np.fill_diagonal(d, 0.0)
    return DistanceMatrix(d, "jaccard")


def simrank_distance_matrix(g, decay=DEFAULT_DECAY, tol=DEFAULT_TOL,
                            max_iter=DEFAULT_MAX_ITER):
    """1 - SimRank similarity.

    SimRank fixed point on the undirected neighbor sets:
    s(a, b) = decay / (|N(a)||N(b)|) * sum over (i, j) in N(a) x N(b)
    of s(i, j) for a != b, with s(a, a) = 1 and s(a, b) = 0 whenever
    either neighborhood is empty.  Iterated from the identity matrix
    until the max-norm change drops below ``tol``; raises
    :class:`ConvergenceError` when ``max_iter`` sweeps are not enough.
    """
    if not 0 < decay < 1:
        raise ValueError("decay must lie in (0, 1)")
    if tol <= 0:
        raise ValueError("tol must be positive")
    if max_iter < 1:
        raise ValueError("max_iter must be at least 1")
    n = g.n
    if n == 0:
        return DistanceMatrix(np.zeros((0, 0)), "simrank")
    deg = np.diff(g.indptr).astype(float)
    p = _binary_csr(g).toarray()
    p[deg > 0] /= deg[deg > 0, None]
    s = np.eye(n)
    diff = np.inf
    for _ in range(max_iter):
        nxt = decay * (p @ s @ p.T)
        nxt = 0.5 * (nxt + nxt.T)  # exact symmetry; a + b == b + a
        np.fill_diagonal(nxt, 1.0)
        diff = np.abs(nxt - s).max()
        s = nxt
        if diff < tol:
            d = 1.0 - s
            np.fill_diagonal(d, 0.0)
            return DistanceMatrix(d, "simrank")
    raise ConvergenceError("simrank", diff, max_iter)
