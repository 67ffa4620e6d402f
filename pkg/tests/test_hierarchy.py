import numpy as np
import pytest

import glt
from glt import Partition

from conftest import random_instance


def chain_forest():
    # parent chain 2 -> 1 -> 0 with distinct deltas
    scores = np.array([3.0, 2.0, 1.0])
    d = np.full((3, 3), 9.0)
    np.fill_diagonal(d, 0.0)
    d[0, 1] = d[1, 0] = 1.0
    d[1, 2] = d[2, 1] = 2.0
    return scores, d, glt.build_leading_tree(scores, d)


def two_tree_forest():
    scores = np.array([2.0, 1.0, 4.0, 3.0])
    d = np.full((4, 4), np.inf)
    np.fill_diagonal(d, 0.0)
    d[0, 1] = d[1, 0] = 2.0
    d[2, 3] = d[3, 2] = 3.0
    return scores, d, glt.build_leading_tree(scores, d)


def dumbbell():
    edges = [(str(a), str(b)) for a in range(4) for b in range(a + 1, 4)]
    edges += [(str(a + 4), str(b + 4)) for a in range(4)
              for b in range(a + 1, 4)]
    edges.append(("3", "4"))
    return glt.Graph.from_edges(edges)


def first_center_on_path(forest, v, centers):
    u = v
    while u not in centers and forest.parent[u] >= 0:
        u = int(forest.parent[u])
    return u


# ----------------------------------------------------------------- subtree

def test_subtree_members_fixtures():
    scores, d, f = chain_forest()
    assert glt.subtree_members(f, 2) == {2}
    assert glt.subtree_members(f, 0) == {0, 1, 2}
    assert glt.subtree_members(f, 1) == {1, 2}
    with pytest.raises(IndexError):
        glt.subtree_members(f, 3)


def test_subtree_children_partition_parent_subtree():
    rng = np.random.default_rng(110)
    for _ in range(25):
        scores, d = random_instance(rng, n_min=2, n_max=14, quantize=True,
                                    tie_rich=True)
        f = glt.build_leading_tree(scores, d)
        for v in range(f.n):
            kids = [u for u in range(f.n) if f.parent[u] == v]
            merged = {v}
            for kid in kids:
                merged |= glt.subtree_members(f, kid)
            assert merged == glt.subtree_members(f, v)


# -------------------------------------------------------------- gamma rank

def test_gamma_rank_reduces_to_score_order():
    scores = np.array([1.0, 3.0, 2.0])
    d = np.full((3, 3), 4.0)
    np.fill_diagonal(d, 0.0)
    f = glt.build_leading_tree(scores, d)
    assert np.all(f.delta == 4.0)  # every parent sits at distance 4
    assert glt.gamma_rank(f, scores) == [1, 2, 0]


def test_gamma_rank_reduces_to_delta_order():
    # equal unit scores: gamma equals delta, root first (max finite delta)
    scores = np.ones(4)
    d = np.full((4, 4), 7.0)
    np.fill_diagonal(d, 0.0)
    d[3, 2] = d[2, 3] = 1.0
    d[3, 1] = d[1, 3] = 2.0
    d[3, 0] = d[0, 3] = 3.0
    f = glt.build_leading_tree(scores, d)
    assert f.roots == (3,)
    assert list(f.delta) == [3.0, 2.0, 1.0, 7.0]
    assert glt.gamma_rank(f, scores) == [3, 0, 1, 2]


def test_gamma_rank_root_first_when_score_maximal():
    rng = np.random.default_rng(111)
    for _ in range(20):
        scores, d = random_instance(rng, n_min=2, n_max=12)
        f = glt.build_leading_tree(scores, d)
        assert glt.gamma_rank(f, scores)[0] == f.roots[0]


def test_gamma_rank_tie_break_is_score_then_id():
    scores = np.array([2.0, 1.0, 2.0, 4.0])
    delta = np.array([2.0, 4.0, 2.0, 1.0])  # gammas: 4, 4, 4, 4
    f = glt.LeadingForest([3, 3, 3, -1], delta, (3,), [1, 1, 1, 0])
    assert glt.gamma_rank(f, scores) == [3, 0, 2, 1]


def test_gamma_rank_size_mismatch():
    *_, f = chain_forest()
    with pytest.raises(ValueError):
        glt.gamma_rank(f, np.ones(5))


# -------------------------------------------------------------------- cuts

def test_cut_extremes():
    scores, d, f = two_tree_forest()
    per_tree = glt.cut_to_partition(f, 2, scores)
    assert per_tree.k == 2
    assert list(per_tree.assignment) == [1, 1, 0, 0]  # tree of 2 has top γ
    singletons = glt.cut_to_partition(f, 4, scores)
    assert len(set(singletons.assignment)) == 4
    with pytest.raises(ValueError):
        glt.cut_to_partition(f, 1, scores)  # fewer than #roots
    with pytest.raises(ValueError):
        glt.cut_to_partition(f, 0, scores)
    with pytest.raises(ValueError):
        glt.cut_to_partition(f, 5, scores)


def test_cut_dumbbell_k2_recovers_cliques():
    g = dumbbell()
    imp = glt.degree_importance(g)
    dm = glt.shortest_path_matrix(g)
    f = glt.build_leading_tree(imp, dm)

    # independent route: oracle parents, then walk to the centers
    parents = np.array([
        p if (p := glt.brute_force_parent_oracle(imp, dm, v)) is not None
        else -1 for v in range(g.n)])
    assert np.array_equal(parents, f.parent)

    part = glt.cut_to_partition(f, 2, imp)
    left = frozenset(g.id_of(str(i)) for i in range(4))
    right = frozenset(g.id_of(str(i + 4)) for i in range(4))
    communities = {frozenset(map(int, part.members(c))) for c in range(2)}
    assert communities == {left, right}


def test_cut_assignment_matches_nearest_center_on_path():
    rng = np.random.default_rng(112)
    for _ in range(40):
        scores, d = random_instance(rng, n_min=2, n_max=16, quantize=True,
                                    inf_prob=0.2)
        f = glt.build_leading_tree(scores, d)
        lo = len(f.roots)
        k = int(rng.integers(lo, f.n + 1))
        part = glt.cut_to_partition(f, k, scores)
        centers = {int(c): i for i, c in enumerate(part.centers)}
        for v in range(f.n):
            stop = first_center_on_path(f, v, centers)
            assert part.assignment[v] == centers[stop]


def test_cut_centers_numbered_by_descending_gamma():
    rng = np.random.default_rng(113)
    for _ in range(30):
        scores, d = random_instance(rng, n_min=2, n_max=14)
        f = glt.build_leading_tree(scores, d)
        k = int(rng.integers(1, f.n + 1))
        part = glt.cut_to_partition(f, k, scores)
        gamma = scores * f.delta
        ranked = glt.gamma_rank(f, scores)
        pos = {v: i for i, v in enumerate(ranked)}
        center_pos = [pos[c] for c in part.centers]
        assert center_pos == sorted(center_pos)
        assert gamma[list(part.centers)].tolist() == sorted(
            gamma[list(part.centers)].tolist(), reverse=True)


def test_partition_type():
    part = Partition([0, 1, 0], (2, 1))
    assert part.k == 2 and part.n == 3
    assert list(part.members(0)) == [0, 2]
    with pytest.raises(IndexError):
        part.members(2)
    with pytest.raises(ValueError):
        Partition([0, 2], (0,))
    with pytest.raises(ValueError):
        part.assignment[0] = 1


# ---------------------------------------------------------------- nesting

def test_nested_levels_fixtures():
    scores, d, f = two_tree_forest()
    coarse, fine = glt.nested_levels(f, scores, [2, 4])
    assert coarse.k == 2 and fine.k == 4

    g = dumbbell()
    imp = glt.degree_importance(g)
    f = glt.build_leading_tree(imp, glt.shortest_path_matrix(g))
    two, three = glt.nested_levels(f, imp, [2, 3])
    # every finer community sits inside one coarser community
    for c in range(three.k):
        owners = {int(two.assignment[v]) for v in three.members(c)}
        assert len(owners) == 1

    (only,) = glt.nested_levels(f, imp, [3])
    assert only.k == 3


def test_nested_levels_validation():
    scores, d, f = chain_forest()
    with pytest.raises(ValueError):
        glt.nested_levels(f, scores, [])
    with pytest.raises(ValueError):
        glt.nested_levels(f, scores, [2, 2])
    with pytest.raises(ValueError):
        glt.nested_levels(f, scores, [3, 2])


def test_refinement_property_random():
    rng = np.random.default_rng(114)
    for _ in range(50):
        scores, d = random_instance(rng, n_min=2, n_max=16, quantize=True,
                                    inf_prob=0.15)
        f = glt.build_leading_tree(scores, d)
        lo = len(f.roots)
        ks = sorted(set(int(k) for k in rng.integers(lo, f.n + 1, 3)))
        parts = glt.nested_levels(f, scores, ks)
        for coarse, fine in zip(parts, parts[1:]):
            for c in range(fine.k):
                owners = {int(coarse.assignment[v]) for v in fine.members(c)}
                assert len(owners) == 1


def test_center_prefix_property():
    rng = np.random.default_rng(115)
    for _ in range(25):
        scores, d = random_instance(rng, n_min=3, n_max=14)
        f = glt.build_leading_tree(scores, d)
        lo = max(len(f.roots), 1)
        if f.n < lo + 1:
            continue
        k1 = int(rng.integers(lo, f.n))
        k2 = int(rng.integers(k1 + 1, f.n + 1))
        p1 = glt.cut_to_partition(f, k1, scores)
        p2 = glt.cut_to_partition(f, k2, scores)
        assert set(p1.centers) <= set(p2.centers)
