"""Leading-forest community detection for graphs and point sets.

Build an importance score and a pairwise distance over granules, hang
every granule under its nearest strictly-more-important neighbor, and
cut the resulting forest into communities at any granularity.
"""

from .cluster import (
    DensityPeakClustering,
    LeadingTreeClustering,
    as_graph,
    compute_distance,
    compute_importance,
)
from .distance import (
    DistanceMatrix,
    jaccard_distance_matrix,
    shortest_path_matrix,
    simrank_distance_matrix,
)
from .errors import ConvergenceError, EdgeListError
from .graph import (
    Graph,
    connected_components,
    degree_of,
    parse_edge_list,
    write_edge_list,
)
from .hierarchy import (
    Partition,
    cut_to_partition,
    gamma_rank,
    nested_levels,
    subtree_members,
)
from .importance import (
    ImportanceTable,
    betweenness_centrality,
    degree_importance,
    eigenvector_centrality,
    pagerank_importance,
)
from .points import (
    PointSet,
    density_importance,
    euclidean_distance_matrix,
    load_points_csv,
)
from .tree import (
    TIE_HIGH_ID,
    TIE_LOW_ID,
    LeadingForest,
    brute_force_parent_oracle,
    build_leading_tree,
    layers,
    validate_forest,
)

__version__ = "0.1.0"

__all__ = [
    "ConvergenceError",
    "DensityPeakClustering",
    "DistanceMatrix",
    "EdgeListError",
    "Graph",
    "ImportanceTable",
    "LeadingForest",
    "LeadingTreeClustering",
    "Partition",
    "PointSet",
    "TIE_HIGH_ID",
    "TIE_LOW_ID",
    "as_graph",
    "betweenness_centrality",
    "brute_force_parent_oracle",
    "build_leading_tree",
    "compute_distance",
    "compute_importance",
    "connected_components",
    "cut_to_partition",
    "degree_importance",
    "degree_of",
    "density_importance",
    "eigenvector_centrality",
    "euclidean_distance_matrix",
    "gamma_rank",
    "jaccard_distance_matrix",
    "layers",
    "load_points_csv",
    "nested_levels",
    "pagerank_importance",
    "parse_edge_list",
    "shortest_path_matrix",
    "simrank_distance_matrix",
    "subtree_members",
    "validate_forest",
    "write_edge_list",
]
