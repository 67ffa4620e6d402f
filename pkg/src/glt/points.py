"""Point-cloud granules: Euclidean distances and cutoff densities.

Lets the same forest machinery cluster plain coordinate data in the
density-peaks style: density as the score, Euclidean distance as the
metric.
"""

import warnings
from dataclasses import dataclass

import numpy as np
from scipy.spatial.distance import cdist

from .distance import DistanceMatrix
from .importance import ImportanceTable


@dataclass(frozen=True, eq=False)
class PointSet:
    """An (m, dim) array of finite coordinates."""

    coords: np.ndarray

    def __post_init__(self):
        coords = np.array(self.coords, dtype=float)
        if coords.ndim != 2:
            raise ValueError("coordinates must be a 2-d array")
        if coords.shape[1] < 1:
            raise ValueError("points need at least one coordinate")
        if not np.all(np.isfinite(coords)):
            raise ValueError("coordinates must be finite")
        coords.flags.writeable = False
        object.__setattr__(self, "coords", coords)

    @property
    def m(self):
        return self.coords.shape[0]

    @property
    def dim(self):
        return self.coords.shape[1]

    @property
    def labels(self):
        """Row-index labels, used wherever granules need names."""
        return tuple(str(i) for i in range(self.m))


def load_points_csv(source, delimiter=","):
    """Read one point per row from a CSV file path or file object."""
    with warnings.catch_warnings():
        # loadtxt warns on empty input; the ValueError below covers it
        warnings.simplefilter("ignore", UserWarning)
        coords = np.loadtxt(source, delimiter=delimiter, comments="#",
                            ndmin=2)
    if coords.size == 0:
        raise ValueError("no points found in input")
    return PointSet(coords)


def euclidean_distance_matrix(points):
    """Pairwise Euclidean distances as a DistanceMatrix."""
    d = cdist(points.coords, points.coords)
    d = np.minimum(d, d.T)  # force bit-exact symmetry
    np.fill_diagonal(d, 0.0)
    return DistanceMatrix(d, "euclidean")


def density_importance(points, dc):
    """Cutoff density: how many other points sit strictly within dc."""
    dc = float(dc)
    if not np.isfinite(dc) or dc <= 0:
        raise ValueError(f"cutoff distance must be positive, got {dc}")
    d = euclidean_distance_matrix(points).d
    inside = d < dc
    np.fill_diagonal(inside, False)
    return ImportanceTable(inside.sum(axis=1).astype(float), "density")
