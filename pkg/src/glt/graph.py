"""Undirected simple graphs with string vertex labels.

Vertices carry arbitrary string labels externally and dense integer ids
(0..n-1) internally.  Graphs are immutable once built and safe to share
across threads.
"""

from collections import deque

import numpy as np

from .errors import EdgeListError


class Graph:
    """Undirected simple graph: no self-loops, no duplicate edges.

    Neighbor lists are sorted ascending by vertex id, so iteration order
    is deterministic.  Edge weights default to 1.0; ``weighted`` records
    whether weights were supplied explicitly.
    """

    def __init__(self, labels, edges, weighted=False):
        """Build from dense-id edges.  Prefer :meth:`from_edges` or
        :func:`parse_edge_list` for label-based input.

        labels: sequence of n distinct strings, position = vertex id.
        edges: iterable of (u, v, w) with dense ids u != v; duplicates
        (either orientation) are collapsed keeping the first weight.
        """
        self.labels = tuple(str(x) for x in labels)
        self.n = len(self.labels)
        if len(set(self.labels)) != self.n:
            raise ValueError("duplicate vertex labels")
        self._id_of = {lab: i for i, lab in enumerate(self.labels)}
        self.weighted = bool(weighted)

        edge_w = {}
        for u, v, w in edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range")
            if u == v:
                raise ValueError(f"self-loop at vertex {self.labels[u]!r}")
            if w < 0:
                raise ValueError(f"negative weight {w} on edge ({u}, {v})")
            key = (u, v) if u < v else (v, u)
            if key not in edge_w:
                edge_w[key] = float(w)

        self.m = len(edge_w)
        adj = [[] for _ in range(self.n)]
        for (u, v), w in edge_w.items():
            adj[u].append((v, w))
            adj[v].append((u, w))

        # CSR layout: indices sorted ascending per vertex
        indptr = np.zeros(self.n + 1, dtype=np.int64)
        indices = np.empty(2 * self.m, dtype=np.int64)
        data = np.empty(2 * self.m, dtype=np.float64)
        pos = 0
        for v in range(self.n):
            adj[v].sort()
            indptr[v] = pos
            for u, w in adj[v]:
                indices[pos] = u
                data[pos] = w
                pos += 1
        indptr[self.n] = pos
        for arr in (indptr, indices, data):
            arr.flags.writeable = False
        self.indptr = indptr
        self.indices = indices
        self.edge_weights = data

    @classmethod
    def from_edges(cls, edges, labels=None, weighted=False):
        """Build from labelled edges (u, v) or (u, v, w).

        Labels are coerced to str; ids are assigned in first-appearance
        order.  ``labels`` pre-registers vertices (fixing their ids and
        allowing isolated vertices).
        """
        order = []
        seen = {}

        def intern(lab):
            lab = str(lab)
            if lab not in seen:
                seen[lab] = len(order)
                order.append(lab)
            return seen[lab]

        if labels is not None:
            for lab in labels:
                intern(lab)
        dense = []
        for e in edges:
            if len(e) == 3:
                u, v, w = e
            else:
                (u, v), w = e, 1.0
            dense.append((intern(u), intern(v), w))
        return cls(order, dense, weighted=weighted)

    @classmethod
    def from_adjacency(cls, matrix, labels=None, weighted=False):
        """Build from a symmetric (n, n) adjacency/weight matrix.

        Zero entries mean "no edge".  The diagonal must be zero.
        """
        a = np.asarray(matrix, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("adjacency matrix must be square")
        if not np.array_equal(a, a.T):
            raise ValueError("adjacency matrix must be symmetric")
        if np.any(np.diag(a) != 0):
            raise ValueError("adjacency matrix must have a zero diagonal")
        n = a.shape[0]
        if labels is None:
            labels = [str(i) for i in range(n)]
        us, vs = np.nonzero(np.triu(a))
        edges = [(int(u), int(v), float(a[u, v])) for u, v in zip(us, vs)]
        return cls(labels, edges, weighted=weighted)

    def id_of(self, label):
        return self._id_of[str(label)]

    def label_of(self, v):
        return self.labels[v]

    def neighbors(self, v):
        """Sorted neighbor ids of v (read-only view)."""
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    def edges(self):
        """Yield (u, v, w) with u < v, ordered by (u, v)."""
        for u in range(self.n):
            start, stop = self.indptr[u], self.indptr[u + 1]
            for v, w in zip(self.indices[start:stop], self.edge_weights[start:stop]):
                if u < v:
                    yield u, int(v), float(w)

    def csr(self):
        """The graph as a scipy CSR matrix (weights as data)."""
        from scipy.sparse import csr_matrix

        return csr_matrix(
            (self.edge_weights, self.indices, self.indptr), shape=(self.n, self.n)
        )

    def __eq__(self, other):
        """Label-level equality: same vertex set and same weighted edge set.

        Dense id assignment is an internal detail and is ignored.
        """
        if not isinstance(other, Graph):
            return NotImplemented
        if set(self.labels) != set(other.labels) or self.weighted != other.weighted:
            return False
        return self._label_edge_dict() == other._label_edge_dict()

    def _label_edge_dict(self):
        d = {}
        for u, v, w in self.edges():
            a, b = sorted((self.labels[u], self.labels[v]))
            d[(a, b)] = w
        return d

    def __repr__(self):
        kind = "weighted" if self.weighted else "unweighted"
        return f"Graph(n={self.n}, m={self.m}, {kind})"


def parse_edge_list(text, delimiter=None, weighted=False):
    """Parse an edge-list stream into a Graph.

    Each non-empty, non-comment (``#``-prefixed) line is ``u v`` or
    ``u v w``.  ``delimiter=None`` splits on whitespace; pass "," for
    comma-separated input.  Labels map to dense ids in first-appearance
    order.  Duplicate edges are collapsed keeping the first weight.

    Rejects (with the offending line number): self-loops, negative
    weights, malformed tokens, and weight columns when ``weighted`` is
    off.
    """
    if hasattr(text, "read"):
        text = text.read()
    edges = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = [t.strip() for t in line.split(delimiter)]
        tokens = [t for t in tokens if t]
        if len(tokens) == 2:
            u, v = tokens
            w = 1.0
        elif len(tokens) == 3:
            if not weighted:
                raise EdgeListError(
                    "unexpected third column (rerun with weighted input enabled)",
                    line_no,
                )
            u, v = tokens[0], tokens[1]
            try:
                w = float(tokens[2])
            except ValueError:
                raise EdgeListError(f"malformed weight {tokens[2]!r}", line_no) from None
            if not np.isfinite(w):
                raise EdgeListError(f"non-finite weight {tokens[2]!r}", line_no)
        else:
            raise EdgeListError(
                f"expected 2 or 3 tokens, found {len(tokens)}", line_no
            )
        if u == v:
            raise EdgeListError(f"self-loop {u!r}", line_no)
        if w < 0:
            raise EdgeListError(f"negative weight {w}", line_no)
        edges.append((u, v, w))
    return Graph.from_edges(edges, weighted=weighted)


def write_edge_list(g):
    """Canonical edge-list text for ``g``.

    One edge per line, endpoints in label-lexicographic order, lines
    sorted, LF endings.  The weight column is present iff the graph is
    weighted.  ``parse_edge_list(write_edge_list(g), ...)`` reproduces
    ``g`` up to internal id assignment (isolated vertices excepted:
    the format cannot express them).
    """
    lines = []
    for u, v, w in g.edges():
        a, b = sorted((g.labels[u], g.labels[v]))
        if g.weighted:
            lines.append(f"{a} {b} {w:.12g}")
        else:
            lines.append(f"{a} {b}")
    lines.sort()
    return "\n".join(lines) + ("\n" if lines else "")


def degree_of(g, v):
    """Number of neighbors of vertex id ``v``."""
    if not 0 <= v < g.n:
        raise IndexError(f"vertex id {v} out of range for n={g.n}")
    return int(g.indptr[v + 1] - g.indptr[v])


def connected_components(g):
    """Per-vertex component labels.

    Labels run 0..c-1, assigned in order of the smallest vertex id each
    component contains.
    """
    label = np.full(g.n, -1, dtype=np.int64)
    current = 0
    for start in range(g.n):
        if label[start] >= 0:
            continue
        label[start] = current
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for u in g.neighbors(v):
                if label[u] < 0:
                    label[u] = current
                    queue.append(u)
        current += 1
    label.flags.writeable = False
    return label
