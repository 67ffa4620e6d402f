"""Flat partitions cut from a leading forest.

Community centers are chosen by the decision-graph product
gamma = score * delta: granules that are both important and far from
anyone more important.  Cutting k centers detaches their subtrees;
everyone else keeps following their parent.  Because the centers for
k+1 extend the centers for k, successive cuts refine each other.
"""

from dataclasses import dataclass

import numpy as np

from .tree import as_importance_table


@dataclass(frozen=True, eq=False)
class Partition:
    """Granule-to-community assignment plus the chosen centers.

    Communities are numbered 0..k-1 in descending gamma order of their
    centers; assignment[v] is the community of granule v.
    """

    assignment: np.ndarray
    centers: tuple

    def __post_init__(self):
        assignment = np.array(self.assignment, dtype=np.int64)
        assignment.flags.writeable = False
        object.__setattr__(self, "assignment", assignment)
        object.__setattr__(self, "centers", tuple(int(c) for c in self.centers))
        if np.any(self.assignment < 0) or np.any(self.assignment >= self.k):
            raise ValueError("assignment refers to a community with no center")

    @property
    def k(self):
        return len(self.centers)

    @property
    def n(self):
        return self.assignment.shape[0]

    def members(self, c):
        """Granule ids assigned to community c, ascending."""
        if not 0 <= c < self.k:
            raise IndexError(f"community {c} out of range for k={self.k}")
        return np.flatnonzero(self.assignment == c)


def subtree_members(forest, v):
    """Set of granule ids in the subtree rooted at v (v included)."""
    parent = forest.parent
    n = parent.shape[0]
    if not 0 <= v < n:
        raise IndexError(f"granule id {v} out of range for n={n}")
    children = [[] for _ in range(n)]
    for u in range(n):
        p = parent[u]
        if p >= 0:
            children[p].append(u)
    out = set()
    stack = [v]
    while stack:
        u = stack.pop()
        out.add(u)
        stack.extend(children[u])
    return out


def gamma_rank(forest, imp):
    """Granule ids by descending gamma = score * delta.

    Ties break by higher score, then lower id, so the order is a
    deterministic total order regardless of the tie policy used to
    build the forest.
    """
    scores = as_importance_table(imp).scores
    if scores.shape[0] != forest.n:
        raise ValueError("importance table does not match the forest")
    gamma = scores * forest.delta
    return sorted(range(forest.n),
                  key=lambda v: (-gamma[v], -scores[v], v))


def cut_to_partition(forest, k, imp):
    """Partition the forest into k communities.

    Centers are the forest roots plus the top non-roots by gamma; every
    root must be a center, so k below the number of trees is rejected
    (a cut can only split trees, never merge them).
    """
    n = forest.n
    k = int(k)
    if not 1 <= k <= n:
        raise ValueError(f"k={k} must be between 1 and n={n}")
    n_roots = len(forest.roots)
    if k < n_roots:
        raise ValueError(
            f"k={k} is below the number of trees ({n_roots}); "
            "separate trees cannot be merged")

    order = gamma_rank(forest, imp)
    position = {v: i for i, v in enumerate(order)}
    centers = list(forest.roots)
    centers += [v for v in order if forest.parent[v] >= 0][:k - n_roots]
    centers.sort(key=position.__getitem__)

    community = {c: i for i, c in enumerate(centers)}
    assignment = np.full(n, -1, dtype=np.int64)
    for v in np.argsort(forest.depth, kind="stable"):  # parents first
        assignment[v] = community.get(v, -1)
        if assignment[v] < 0:
            assignment[v] = assignment[forest.parent[v]]
    return Partition(assignment, tuple(centers))


def nested_levels(forest, imp, ks):
    """Partitions for a strictly increasing sequence of cut sizes.

    Center prefixes are shared across levels, so each partition refines
    the previous one.
    """
    ks = [int(k) for k in ks]
    if not ks:
        raise ValueError("at least one cut size is required")
    if any(b <= a for a, b in zip(ks, ks[1:])):
        raise ValueError("cut sizes must be strictly increasing")
    return [cut_to_partition(forest, k, imp) for k in ks]
