"""Serialization of forests, partitions, scores and matrices.

All emitters are deterministic: rows and children are ordered by
label, floats are formatted identically across runs, and lines end in
a single newline so repeated runs are byte-identical.
"""

import json
import re

_NEWICK_BARE = re.compile(r"[A-Za-z0-9_.|-]+")


def _check_labels(n, labels):
    labels = tuple(str(x) for x in labels)
    if len(labels) != n:
        raise ValueError(f"expected {n} labels, got {len(labels)}")
    if len(set(labels)) != n:
        raise ValueError("labels must be unique")
    return labels


def _sig(x):
    """12 significant digits; infinities print as inf."""
    return f"{float(x):.12g}"


def forest_to_dict(forest, labels, scores):
    labels = _check_labels(forest.n, labels)
    nodes = []
    for v in sorted(range(forest.n), key=lambda v: labels[v]):
        p = int(forest.parent[v])
        nodes.append({
            "label": labels[v],
            "parent_label": labels[p] if p >= 0 else None,
            "importance": float(scores[v]),
            "delta": float(forest.delta[v]),
            "depth": int(forest.depth[v]),
        })
    return {
        "nodes": nodes,
        "tie_policy": forest.tie_policy,
        "importance_criterion": forest.criterion,
        "distance_metric": forest.metric,
    }


def forest_to_json(forest, labels, scores):
    return json.dumps(forest_to_dict(forest, labels, scores), indent=2) + "\n"


def _dot_quote(label):
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def forest_to_dot(forest, labels):
    """Edges point child -> parent; roots appear as bare nodes."""
    labels = _check_labels(forest.n, labels)
    lines = ["digraph leading_forest {"]
    for r in sorted(forest.roots, key=lambda v: labels[v]):
        lines.append(f"  {_dot_quote(labels[r])};")
    non_roots = [v for v in range(forest.n) if forest.parent[v] >= 0]
    for v in sorted(non_roots, key=lambda v: labels[v]):
        child = _dot_quote(labels[v])
        parent = _dot_quote(labels[int(forest.parent[v])])
        lines.append(f"  {child} -> {parent};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _newick_quote(label):
    if _NEWICK_BARE.fullmatch(label):
        return label
    return "'" + label.replace("'", "''") + "'"


def forest_to_newick(forest, labels):
    """One tree per line, roots sorted by label, delta as branch length.

    Rendering is iterative (deepest first) so long parent chains do not
    hit the recursion limit.
    """
    labels = _check_labels(forest.n, labels)
    children = [[] for _ in range(forest.n)]
    for v in range(forest.n):
        p = int(forest.parent[v])
        if p >= 0:
            children[p].append(v)
    for kids in children:
        kids.sort(key=lambda v: labels[v])

    rendered = [None] * forest.n
    for v in sorted(range(forest.n), key=lambda u: -int(forest.depth[u])):
        name = _newick_quote(labels[v])
        if children[v]:
            name = "(" + ",".join(rendered[c] for c in children[v]) + ")" + name
        if forest.parent[v] >= 0:
            name += ":" + _sig(forest.delta[v])
        rendered[v] = name

    roots = sorted(forest.roots, key=lambda v: labels[v])
    return "".join(rendered[r] + ";\n" for r in roots)


def importance_to_tsv(table, labels):
    """One `label <TAB> score` line per granule, sorted by label."""
    labels = _check_labels(table.n, labels)
    lines = [f"{labels[v]}\t{_sig(table.scores[v])}"
             for v in sorted(range(table.n), key=lambda v: labels[v])]
    return "\n".join(lines) + "\n"


def distance_to_tsv(dm, labels):
    """Label header row, then one value row per granule; inf stays inf."""
    labels = _check_labels(dm.n, labels)
    order = sorted(range(dm.n), key=lambda v: labels[v])
    lines = ["\t".join(labels[v] for v in order)]
    for v in order:
        lines.append("\t".join(_sig(dm.d[v, u]) for u in order))
    return "\n".join(lines) + "\n"


def partition_to_dict(partition, labels):
    labels = _check_labels(partition.n, labels)
    assignment = {labels[v]: int(partition.assignment[v])
                  for v in sorted(range(partition.n), key=lambda v: labels[v])}
    return {
        "k": partition.k,
        "centers": [labels[c] for c in partition.centers],
        "assignment": assignment,
    }


def partition_to_tsv(partition, labels):
    """One `label <TAB> community_id` line per granule, sorted by label."""
    labels = _check_labels(partition.n, labels)
    lines = [f"{labels[v]}\t{int(partition.assignment[v])}"
             for v in sorted(range(partition.n), key=lambda v: labels[v])]
    return "\n".join(lines) + "\n"


def result_to_json(forest, labels, partitions, scores):
    """Combined document: the forest plus partitions keyed by k."""
    doc = {
        "forest": forest_to_dict(forest, labels, scores),
        "partitions": {str(p.k): partition_to_dict(p, labels)
                       for p in sorted(partitions, key=lambda p: p.k)},
    }
    return json.dumps(doc, indent=2) + "\n"
