"""scikit-learn style estimators wrapping the forest pipeline."""

import numpy as np
from sklearn.base import BaseEstimator, ClusterMixin
from sklearn.exceptions import NotFittedError
from sklearn.utils.validation import check_array

from .distance import (
    jaccard_distance_matrix,
    shortest_path_matrix,
    simrank_distance_matrix,
)
from .graph import Graph
from .hierarchy import cut_to_partition
from .importance import (
    betweenness_centrality,
    degree_importance,
    eigenvector_centrality,
    pagerank_importance,
)
from .points import PointSet, density_importance, euclidean_distance_matrix
from .tree import TIE_HIGH_ID, build_leading_tree

IMPORTANCE_CRITERIA = ("degree", "eigenvector", "betweenness", "pagerank")
DISTANCE_METRICS = ("shortest-path", "jaccard", "simrank")


def as_graph(X, weighted=False):
    """Accept a Graph, an edge iterable, or a square adjacency array."""
    if isinstance(X, Graph):
        return X
    arr = np.asarray(X)
    # only numeric square arrays are adjacencies; a short edge list of
    # string pairs also coerces to a square array
    if (arr.ndim == 2 and arr.shape[0] == arr.shape[1] and arr.shape[0] > 0
            and np.issubdtype(arr.dtype, np.number)):
        return Graph.from_adjacency(arr, weighted=weighted)
    return Graph.from_edges(X, weighted=weighted)


def compute_importance(g, criterion, damping=0.85, tol=1e-10, max_iter=10_000):
    if criterion == "degree":
        return degree_importance(g)
    if criterion == "eigenvector":
        return eigenvector_centrality(g, tol=tol, max_iter=max_iter)
    if criterion == "betweenness":
        return betweenness_centrality(g)
    if criterion == "pagerank":
        return pagerank_importance(g, damping=damping, tol=tol,
                                   max_iter=max_iter)
    raise ValueError(f"unknown importance criterion {criterion!r}")


def compute_distance(g, metric, use_weights=False, decay=0.8, tol=1e-10,
                     max_iter=10_000):
    if metric == "shortest-path":
        return shortest_path_matrix(g, use_weights=use_weights)
    if metric == "jaccard":
        return jaccard_distance_matrix(g)
    if metric == "simrank":
        return simrank_distance_matrix(g, decay=decay, tol=tol,
                                       max_iter=max_iter)
    raise ValueError(f"unknown distance metric {metric!r}")


class LeadingTreeClustering(ClusterMixin, BaseEstimator):
    """Graph communities by cutting a leading forest.

    fit accepts a Graph, an edge iterable, or a square symmetric
    adjacency matrix.  After fitting, labels_ holds the community of
    each vertex (in vertex id order) and centers_ the center vertex of
    each community.
    """

    def __init__(self, n_clusters=2, importance="degree",
                 distance="shortest-path", weighted=False, use_weights=False,
                 damping=0.85, decay=0.8, tol=1e-10, max_iter=10_000,
                 tie_policy=TIE_HIGH_ID):
        self.n_clusters = n_clusters
        self.importance = importance
        self.distance = distance
        self.weighted = weighted
        self.use_weights = use_weights
        self.damping = damping
        self.decay = decay
        self.tol = tol
        self.max_iter = max_iter
        self.tie_policy = tie_policy

    def fit(self, X, y=None):
        g = as_graph(X, weighted=self.weighted)
        imp = compute_importance(g, self.importance, damping=self.damping,
                                 tol=self.tol, max_iter=self.max_iter)
        dm = compute_distance(g, self.distance, use_weights=self.use_weights,
                              decay=self.decay, tol=self.tol,
                              max_iter=self.max_iter)
        forest = build_leading_tree(imp, dm, tie=self.tie_policy)
        partition = cut_to_partition(forest, self.n_clusters, imp)

        self.graph_ = g
        self.importance_ = imp
        self.distance_matrix_ = dm
        self.forest_ = forest
        self.partition_ = partition
        self.labels_ = np.array(partition.assignment)
        self.centers_ = np.array(partition.centers, dtype=np.int64)
        self.n_features_in_ = g.n
        return self

    def cut(self, k):
        """Re-cut the fitted forest at a different k without refitting."""
        self._check_fitted()
        return cut_to_partition(self.forest_, k, self.importance_)

    def _check_fitted(self):
        if not hasattr(self, "forest_"):
            raise NotFittedError(
                f"this {type(self).__name__} instance is not fitted yet; "
                "call fit first")


class DensityPeakClustering(ClusterMixin, BaseEstimator):
    """Point clustering: cutoff density scores, Euclidean distances.

    fit accepts an (m, dim) coordinate array.  dc is the strict cutoff
    radius used to count each point's neighbors.
    """

    def __init__(self, n_clusters=2, dc=1.0, tie_policy=TIE_HIGH_ID):
        self.n_clusters = n_clusters
        self.dc = dc
        self.tie_policy = tie_policy

    def fit(self, X, y=None):
        coords = check_array(X, dtype=float)
        points = PointSet(coords)
        imp = density_importance(points, self.dc)
        dm = euclidean_distance_matrix(points)
        forest = build_leading_tree(imp, dm, tie=self.tie_policy)
        partition = cut_to_partition(forest, self.n_clusters, imp)

        self.points_ = points
        self.importance_ = imp
        self.distance_matrix_ = dm
        self.forest_ = forest
        self.partition_ = partition
        self.labels_ = np.array(partition.assignment)
        self.centers_ = np.array(partition.centers, dtype=np.int64)
        self.n_features_in_ = points.dim
        return self

    def cut(self, k):
        """Re-cut the fitted forest at a different k without refitting."""
        self._check_fitted()
        return cut_to_partition(self.forest_, k, self.importance_)

    def _check_fitted(self):
        if not hasattr(self, "forest_"):
            raise NotFittedError(
                f"this {type(self).__name__} instance is not fitted yet; "
                "call fit first")
