"""Shared fixtures: deterministic random graphs and granule instances.

Everything is seeded; floating-point-sensitive generators stick to
dyadic values (quarters, halves) so equality assertions stay exact.
"""

from pathlib import Path

import numpy as np
import pytest

import glt

DATA_DIR = Path(__file__).resolve().parent.parent / "data"


@pytest.fixture(scope="session")
def karate():
    with open(DATA_DIR / "karate.edges", encoding="utf-8") as fh:
        return glt.parse_edge_list(fh)


@pytest.fixture(scope="session")
def karate_path():
    return str(DATA_DIR / "karate.edges")


def random_graph(rng, n_min=2, n_max=12, p=None, weighted=False,
                 connected=False, no_isolated=False):
    """Seeded G(n, p) with string labels '0'..'n-1' (isolated kept)."""
    while True:
        n = int(rng.integers(n_min, n_max + 1))
        prob = float(rng.uniform(0.15, 0.7)) if p is None else p
        edges = []
        for i in range(n):
            for j in range(i + 1, n):
                if rng.random() < prob:
                    if weighted:
                        w = int(rng.integers(1, 17)) * 0.25  # dyadic, exact
                        edges.append((str(i), str(j), w))
                    else:
                        edges.append((str(i), str(j)))
        g = glt.Graph.from_edges(edges, labels=[str(i) for i in range(n)],
                                 weighted=weighted)
        comp = glt.connected_components(g)
        if connected and (n > 1 and comp.max() != 0):
            continue
        if no_isolated and n > 1 and (np.diff(g.indptr) == 0).any():
            continue
        return g


def random_instance(rng, n_min=1, n_max=12, quantize=False, tie_rich=False,
                    inf_prob=0.0):
    """Random (scores, distances) arrays for direct forest construction.

    quantize draws scores from quarter-integers so duplicates are
    common; tie_rich draws distances from a few small integers so
    distance ties are common; inf_prob knocks out pairs entirely.
    """
    n = int(rng.integers(n_min, n_max + 1))
    if quantize:
        scores = rng.integers(0, 5, n) * 0.25
    else:
        scores = rng.random(n)
    if tie_rich:
        d = rng.integers(1, 4, (n, n)).astype(float)
    else:
        d = rng.uniform(0.5, 10.0, (n, n))
    d = np.triu(d, 1)
    d = d + d.T
    if inf_prob:
        cut = np.triu(rng.random((n, n)) < inf_prob, 1)
        cut = cut | cut.T
        d[cut] = np.inf
    return scores, d
