"""Immutable simple undirected graphs over dense integer vertex ids.

Vertices are 0..n-1 internally.  Graphs read from files may use arbitrary
non-negative external ids; those are remapped to dense ids and the mapping
is kept in ``labels`` (internal id -> external id).
"""

from __future__ import annotations

import json
from itertools import combinations

from .errors import GraphFormatError


class Graph:
    """Simple undirected graph with a fixed vertex set 0..n-1."""

    __slots__ = ("n", "_adj", "labels", "_edge_count")

    def __init__(self, n: int, edges=(), labels=None):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self._adj = tuple(frozenset(s) for s in adj)
        self._edge_count = sum(len(s) for s in adj) // 2
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != n:
                raise ValueError("labels must have one entry per vertex")
        self.labels = labels

    # -- basic accessors -------------------------------------------------

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def max_degree(self) -> int:
        return max((len(s) for s in self._adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def edge_count(self) -> int:
        return self._edge_count

    def edges(self):
        for u in range(self.n):
            for v in self._adj[u]:
                if u < v:
                    yield (u, v)

    def vertices(self) -> range:
        return range(self.n)

    def label_of(self, v: int):
        return self.labels[v] if self.labels is not None else v

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self._adj == other._adj
        )

    def __hash__(self):
        return hash((self.n, self._adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self._edge_count})"

    # -- derived graphs --------------------------------------------------

    def subgraph(self, vertices) -> tuple["Graph", list[int]]:
        """Induced subgraph plus the list mapping new ids to old ids."""
        old = sorted(set(vertices))
        index = {v: i for i, v in enumerate(old)}
        edges = [
            (index[u], index[v])
            for u, v in combinations(old, 2)
            if v in self._adj[u]
        ]
        return Graph(len(old), edges), old

    def complement(self) -> "Graph":
        edges = [
            (u, v)
            for u, v in combinations(range(self.n), 2)
            if v not in self._adj[u]
        ]
        return Graph(self.n, edges)

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists, in order of minimum."""
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            comp = [s]
            seen[s] = True
            stack = [s]
            while stack:
                u = stack.pop()
                for w in self._adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        stack.append(w)
            out.append(sorted(comp))
        return out

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1


# -- text formats --------------------------------------------------------
#
# Graph files: one edge "u v" per line; blank lines and "#" comments are
# ignored; an optional header "vertices: n" declares the vertex count so
# isolated vertices can exist.  Without the header the vertex set is the
# set of endpoint ids, remapped to 0..n-1 in increasing order.


def parse_graph(text: str) -> Graph:
    header_n = None
    raw_edges = []
    ids = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("vertices:"):
            if header_n is not None:
                raise GraphFormatError("duplicate 'vertices:' header", lineno)
            try:
                header_n = int(line.split(":", 1)[1])
            except ValueError:
                raise GraphFormatError("bad vertex count", lineno) from None
            if header_n < 0:
                raise GraphFormatError("negative vertex count", lineno)
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"non-integer endpoint in {line!r}", lineno) from None
        if u < 0 or v < 0:
            raise GraphFormatError("negative vertex id", lineno)
        if u == v:
            raise GraphFormatError(f"self-loop at {u}", lineno)
        raw_edges.append((u, v))
        ids.add(u)
        ids.add(v)

    if header_n is not None:
        bad = [i for i in ids if i >= header_n]
        if bad:
            raise GraphFormatError(
                f"vertex id {max(bad)} exceeds declared count {header_n}"
            )
        labels = list(range(header_n))
        index = {i: i for i in labels}
        n = header_n
    else:
        labels = sorted(ids)
        index = {ext: i for i, ext in enumerate(labels)}
        n = len(labels)

    edges = [(index[u], index[v]) for u, v in raw_edges]
    return Graph(n, edges, labels=labels)


def load_graph(path) -> Graph:
    with open(path) as fh:
        return parse_graph(fh.read())


def format_graph(g: Graph) -> str:
    lines = [f"vertices: {g.n}"]
    for u, v in sorted(g.edges()):
        lines.append(f"{g.label_of(u)} {g.label_of(v)}")
    return "\n".join(lines) + "\n"


def save_graph(g: Graph, path) -> None:
    with open(path, "w") as fh:
        fh.write(format_graph(g))


# Coloring files: one "v c" pair per line, external vertex ids, colors >= 1.


def parse_coloring_map(text: str) -> dict[int, int]:
    out: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"expected 'v c', got {line!r}", lineno)
        try:
            v, c = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"non-integer field in {line!r}", lineno) from None
        if v in out:
            raise GraphFormatError(f"duplicate assignment for vertex {v}", lineno)
        if c < 1:
            raise GraphFormatError(f"color {c} is not positive", lineno)
        out[v] = c
    return out


def format_coloring_map(assignment: dict[int, int]) -> str:
    return "\n".join(f"{v} {c}" for v, c in sorted(assignment.items())) + "\n"


# Sequence files: a JSON array of {"vertex": id, "to": color} objects,
# external vertex ids.


def parse_sequence_json(text: str) -> list[tuple[int, int]]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"bad JSON: {exc}") from None
    if not isinstance(data, list):
        raise GraphFormatError("sequence must be a JSON array")
    steps = []
    for i, item in enumerate(data):
        if not isinstance(item, dict) or "vertex" not in item or "to" not in item:
            raise GraphFormatError(f"entry {i} must be {{\"vertex\": id, \"to\": color}}")
        v, c = item["vertex"], item["to"]
        if not isinstance(v, int) or not isinstance(c, int):
            raise GraphFormatError(f"entry {i}: vertex and color must be integers")
        steps.append((v, c))
    return steps


def format_sequence_json(steps) -> str:
    return json.dumps([{"vertex": v, "to": c} for v, c in steps])
