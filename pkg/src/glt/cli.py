"""Command line front end.

Reads an edge list or a point CSV, builds the leading forest, and
emits it (optionally with flat cuts) as JSON, DOT, Newick or TSV.

Exit codes: 0 success, 1 unreadable or malformed input, 2 incompatible
options, 3 an iterative measure failed to converge.
"""

import argparse
import sys
from dataclasses import dataclass

from . import export
from .cluster import compute_distance, compute_importance
from .errors import ConvergenceError
from .graph import parse_edge_list
from .hierarchy import nested_levels
from .points import (
    density_importance,
    euclidean_distance_matrix,
    load_points_csv,
)
from .tree import TIE_HIGH_ID, TIE_LOW_ID, build_leading_tree, validate_forest

GRAPH_IMPORTANCE = ("degree", "eigenvector", "betweenness", "pagerank")
GRAPH_DISTANCE = ("shortest-path", "jaccard", "simrank")
_EXTENSION = {"json": ".json", "dot": ".dot", "newick": ".nwk", "tsv": ".tsv"}

EXIT_INPUT = 1
EXIT_CONFIG = 2
EXIT_CONVERGENCE = 3


@dataclass
class RunConfig:
    """Everything one invocation needs; mirrors the CLI flags."""

    input: str
    kind: str = "edgelist"
    importance: str = None
    distance: str = None
    cuts: list = None
    format: str = "json"
    out: str = None
    weighted: bool = False
    delimiter: str = None
    damping: float = 0.85
    decay: float = 0.8
    tol: float = 1e-10
    max_iter: int = 10_000
    dc: float = None
    tie: str = TIE_HIGH_ID


def build_parser():
    parser = argparse.ArgumentParser(
        prog="glt",
        description="Hierarchical community detection via leading forests: "
                    "rank granules by importance, attach each to its nearest "
                    "better, cut the forest into communities.")
    parser.add_argument("--input", required=True, metavar="PATH",
                        help="edge list or point CSV to read")
    parser.add_argument("--kind", choices=("edgelist", "points"),
                        default="edgelist",
                        help="input flavor (default: edgelist)")
    parser.add_argument("--importance",
                        choices=GRAPH_IMPORTANCE + ("density",),
                        help="scoring criterion (default: degree for graphs, "
                             "density for points)")
    parser.add_argument("--distance",
                        choices=GRAPH_DISTANCE + ("euclidean",),
                        help="distance metric (default: shortest-path for "
                             "graphs, euclidean for points)")
    parser.add_argument("--cut", dest="cuts", type=int, nargs="+",
                        metavar="K", help="community counts to cut at")
    parser.add_argument("--format", choices=("json", "dot", "newick", "tsv"),
                        default="json", help="output format (default: json)")
    parser.add_argument("--out", metavar="BASE",
                        help="write to BASE plus a format extension instead "
                             "of stdout")
    parser.add_argument("--weighted", action="store_true",
                        help="edge list carries a weight column; shortest "
                             "paths use it")
    parser.add_argument("--delimiter", metavar="CHAR",
                        help="field separator (default: any whitespace for "
                             "edge lists, comma for points)")
    parser.add_argument("--damping", type=float, default=0.85,
                        help="pagerank damping factor (default: 0.85)")
    parser.add_argument("--decay", type=float, default=0.8,
                        help="simrank decay factor (default: 0.8)")
    parser.add_argument("--tol", type=float, default=1e-10,
                        help="convergence tolerance for iterative measures "
                             "(default: 1e-10)")
    parser.add_argument("--max-iter", type=int, default=10_000,
                        help="iteration cap for iterative measures "
                             "(default: 10000)")
    parser.add_argument("--dc", type=float, metavar="RADIUS",
                        help="density cutoff radius (points only, required "
                             "with --kind points)")
    parser.add_argument("--tie", choices=(TIE_HIGH_ID, TIE_LOW_ID),
                        default=TIE_HIGH_ID,
                        help="which granule outranks on equal score "
                             "(default: high-id)")
    return parser


def _fail(code, message):
    print(f"error: {message}", file=sys.stderr)
    return code


def _load(config):
    """Returns (labels, importance table, distance matrix)."""
    if config.kind == "points":
        points = load_points_csv(config.input,
                                 delimiter=config.delimiter or ",")
        imp = density_importance(points, config.dc)
        dm = euclidean_distance_matrix(points)
        return points.labels, imp, dm
    with open(config.input, encoding="utf-8") as handle:
        graph = parse_edge_list(handle, delimiter=config.delimiter,
                                weighted=config.weighted)
    if graph.n == 0:
        raise ValueError("input contains no vertices")
    imp = compute_importance(graph, config.importance, damping=config.damping,
                             tol=config.tol, max_iter=config.max_iter)
    dm = compute_distance(graph, config.distance,
                          use_weights=config.weighted, decay=config.decay,
                          tol=config.tol, max_iter=config.max_iter)
    return graph.labels, imp, dm


def run(config):
    if config.importance is None:
        config.importance = "density" if config.kind == "points" else "degree"
    if config.distance is None:
        config.distance = ("euclidean" if config.kind == "points"
                           else "shortest-path")

    if config.kind == "points":
        if config.importance != "density":
            return _fail(EXIT_CONFIG, f"importance {config.importance!r} "
                                      "needs a graph; points use density")
        if config.distance != "euclidean":
            return _fail(EXIT_CONFIG, f"distance {config.distance!r} needs "
                                      "a graph; points use euclidean")
        if config.dc is None:
            return _fail(EXIT_CONFIG, "--kind points requires --dc")
    else:
        if config.importance == "density":
            return _fail(EXIT_CONFIG,
                         "density scoring needs point input (--kind points)")
        if config.distance == "euclidean":
            return _fail(EXIT_CONFIG,
                         "euclidean distance needs point input "
                         "(--kind points)")
        if config.dc is not None:
            return _fail(EXIT_CONFIG, "--dc only applies to --kind points")

    cuts = None
    if config.cuts:
        cuts = sorted(config.cuts)
        if len(set(cuts)) != len(cuts):
            return _fail(EXIT_CONFIG, "duplicate cut sizes")
    if config.format == "tsv" and cuts is None:
        return _fail(EXIT_CONFIG, "tsv output needs --cut; the bare forest "
                                  "has no tabular form")
    if config.format == "tsv" and cuts is not None and len(cuts) > 1:
        return _fail(EXIT_CONFIG, "tsv holds a single partition; pass one "
                                  "cut size or use json")
    if config.format in ("dot", "newick") and cuts is not None:
        return _fail(EXIT_CONFIG, f"{config.format} shows the full forest; "
                                  "use json or tsv to emit cuts")

    try:
        labels, imp, dm = _load(config)
    except ConvergenceError as exc:
        return _fail(EXIT_CONVERGENCE, exc)
    except (OSError, ValueError) as exc:
        return _fail(EXIT_INPUT, exc)

    forest = build_leading_tree(imp, dm, tie=config.tie)
    validate_forest(forest, imp, dm)

    partitions = None
    if cuts is not None:
        try:
            partitions = nested_levels(forest, imp, cuts)
        except ValueError as exc:
            return _fail(EXIT_CONFIG, exc)

    if partitions is None:
        if config.format == "json":
            doc = export.forest_to_json(forest, labels, imp.scores)
        elif config.format == "dot":
            doc = export.forest_to_dot(forest, labels)
        else:
            doc = export.forest_to_newick(forest, labels)
    elif config.format == "json":
        doc = export.result_to_json(forest, labels, partitions, imp.scores)
    else:
        doc = export.partition_to_tsv(partitions[0], labels)

    if config.out:
        path = config.out + _EXTENSION[config.format]
        try:
            with open(path, "w", encoding="utf-8") as handle:
                handle.write(doc)
        except OSError as exc:
            return _fail(EXIT_INPUT, exc)
    else:
        sys.stdout.write(doc)
    return 0


def main(argv=None):
    args = build_parser().parse_args(argv)
    config = RunConfig(**vars(args))
    return run(config)


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
