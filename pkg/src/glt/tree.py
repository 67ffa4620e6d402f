"""Leading-forest construction over (importance table, distance matrix).

Every granule attaches to its nearest strictly-higher-ranked granule;
granules with no finite-distance higher-ranked candidate become roots.
The result is a tree per finite-distance block: subordination by
importance, proximity deciding among leaders.
"""

import math
from dataclasses import dataclass

import numpy as np

from .distance import DistanceMatrix
from .importance import ImportanceTable

TIE_HIGH_ID = "high-id"
TIE_LOW_ID = "low-id"
_TIE_POLICIES = (TIE_HIGH_ID, TIE_LOW_ID)


def as_importance_table(obj):
    """Coerce a raw score array into an :class:`ImportanceTable`."""
    if isinstance(obj, ImportanceTable):
        return obj
    return ImportanceTable(np.asarray(obj, dtype=float))


def as_distance_matrix(obj):
    """Coerce a raw square array into a :class:`DistanceMatrix`."""
    if isinstance(obj, DistanceMatrix):
        return obj
    return DistanceMatrix(np.asarray(obj, dtype=float))


@dataclass(frozen=True, eq=False)
class LeadingForest:
    """Per-granule parent links plus construction metadata.

    parent[v] is the granule v attaches to, or -1 for roots.  delta[v]
    is the distance to the parent; roots carry the largest finite
    pairwise distance instead (the decision-graph convention, so that
    gamma ranking puts roots first).  depth[v] counts links to the root
    of v's tree.
    """

    parent: np.ndarray
    delta: np.ndarray
    roots: tuple
    depth: np.ndarray
    tie_policy: str = TIE_HIGH_ID
    criterion: str = "custom"
    metric: str = "custom"

    def __post_init__(self):
        parent = np.array(self.parent, dtype=np.int64)
        delta = np.array(self.delta, dtype=float)
        depth = np.array(self.depth, dtype=np.int64)
        if not parent.shape == delta.shape == depth.shape:
            raise ValueError("parent, delta and depth must have equal length")
        for arr in (parent, delta, depth):
            arr.flags.writeable = False
        object.__setattr__(self, "parent", parent)
        object.__setattr__(self, "delta", delta)
        object.__setattr__(self, "depth", depth)
        object.__setattr__(self, "roots", tuple(int(r) for r in self.roots))

    @property
    def n(self):
        return self.parent.shape[0]


def _rank_order(scores, tie):
    """Granule ids sorted by descending rank.

    Rank compares scores first; equal scores fall back to granule id,
    with the higher id outranking under the default policy.
    """
    if tie not in _TIE_POLICIES:
        raise ValueError(f"unknown tie policy {tie!r}")
    ids = np.arange(scores.shape[0])
    if tie == TIE_HIGH_ID:
        return np.lexsort((-ids, -scores))
    return np.lexsort((ids, -scores))


def build_leading_tree(imp, dist, tie=TIE_HIGH_ID):
    """Assign each granule its parent and return the leading forest.

    The parent of v is the granule at minimal finite distance among all
    granules outranking v; distance ties go to the highest-ranked
    candidate.  Granules with no candidate become roots, so infinite
    distances split the result into a forest rather than forcing
    cross-block parents.
    """
    table = as_importance_table(imp)
    dm = as_distance_matrix(dist)
    n = table.n
    if dm.n != n:
        raise ValueError(f"importance covers {n} granules, distances {dm.n}")
    if n < 1:
        raise ValueError("at least one granule is required")

    order = _rank_order(table.scores, tie)
    d = dm.d
    parent = np.full(n, -1, dtype=np.int64)
    delta = np.full(n, dm.max_finite())
    for i in range(1, n):
        v = order[i]
        row = d[v, order[:i]]
        j = int(np.argmin(row))  # first minimum = highest-ranked candidate
        if np.isfinite(row[j]):
            parent[v] = order[j]
            delta[v] = row[j]

    depth = np.zeros(n, dtype=np.int64)
    for v in order:  # parents outrank children, so theirs is already set
        p = parent[v]
        if p >= 0:
            depth[v] = depth[p] + 1
    roots = tuple(int(v) for v in np.flatnonzero(parent < 0))
    return LeadingForest(parent, delta, roots, depth, tie,
                         table.criterion, dm.metric)


def brute_force_parent_oracle(imp, dist, v, tie=TIE_HIGH_ID):
    """Parent of granule v by literal scan, or None for a root.

    Deliberately shares no code with :func:`build_leading_tree`; the
    two must agree only by implementing the same contract.
    """
    table = as_importance_table(imp)
    dm = as_distance_matrix(dist)
    n = table.n
    if dm.n != n:
        raise ValueError(f"importance covers {n} granules, distances {dm.n}")
    if not 0 <= v < n:
        raise IndexError(f"granule id {v} out of range for n={n}")
    if tie not in _TIE_POLICIES:
        raise ValueError(f"unknown tie policy {tie!r}")
    high_id_wins = tie == TIE_HIGH_ID
    scores = table.scores.tolist()  # plain floats keep the scan cheap
    row = dm.d[v].tolist()

    def outranks(a, b):
        if scores[a] != scores[b]:
            return scores[a] > scores[b]
        return a > b if high_id_wins else a < b

    best = None
    for u in range(n):
        if u == v or not outranks(u, v) or math.isinf(row[u]):
            continue
        if best is None or row[u] < row[best] or (
                row[u] == row[best] and outranks(u, best)):
            best = u
    return best


def layers(forest):
    """Depth of every granule, recomputed from the parent links.

    Roots sit at depth 0.  Raises if the parent links contain a cycle.
    """
    parent = forest.parent
    n = parent.shape[0]
    depth = np.full(n, -1, dtype=np.int64)
    for v in range(n):
        path = []
        u = v
        while depth[u] < 0:
            path.append(u)
            if len(path) > n:
                raise ValueError("parent links contain a cycle")
            p = parent[u]
            if p < 0:
                depth[u] = 0
                break
            u = p
        for w in reversed(path):
            if depth[w] < 0:
                depth[w] = depth[parent[w]] + 1
    depth.flags.writeable = False
    return depth


def validate_forest(forest, imp=None, dist=None):
    """Structural sanity check; raises ValueError on any violation.

    Always checks parent-link shape, acyclicity, depth bookkeeping and
    root conventions.  Given the importance table, also checks that
    every parent outranks its child; given the distance matrix, that
    every delta matches it (roots carrying the largest finite entry).
    """
    parent, delta, depth = forest.parent, forest.delta, forest.depth
    n = forest.n
    if np.any((parent < -1) | (parent >= n)):
        raise ValueError("parent id out of range")
    if np.any(parent == np.arange(n)):
        raise ValueError("granule cannot be its own parent")
    if tuple(int(v) for v in np.flatnonzero(parent < 0)) != forest.roots:
        raise ValueError("root list does not match parent links")
    if not np.array_equal(layers(forest), depth):
        raise ValueError("stored depths disagree with parent links")
    non_roots = np.flatnonzero(parent >= 0)
    if not np.all(np.isfinite(delta[non_roots])):
        raise ValueError("non-root delta must be finite")

    if imp is not None:
        scores = as_importance_table(imp).scores
        p, v = parent[non_roots], non_roots
        if forest.tie_policy == TIE_HIGH_ID:
            id_ok = p > v
        else:
            id_ok = p < v
        ok = (scores[p] > scores[v]) | ((scores[p] == scores[v]) & id_ok)
        if not np.all(ok):
            raise ValueError("a parent fails to outrank its child")

    if dist is not None:
        dm = as_distance_matrix(dist)
        if dm.n != n:
            raise ValueError("distance matrix size mismatch")
        if not np.array_equal(delta[non_roots],
                              dm.d[non_roots, parent[non_roots]]):
            raise ValueError("delta disagrees with the distance matrix")
        root_ids = np.asarray(forest.roots, dtype=np.int64)
        if root_ids.size and not np.all(delta[root_ids] == dm.max_finite()):
            raise ValueError("root delta must equal the largest finite distance")
