"""Core graph type, parsing, serialization and BFS distances.

Graphs are simple, undirected and connected, with vertices 0..n-1.  The
edge list is normalized (u < v, sorted) at construction so that
serialize -> parse -> serialize round-trips byte-identically.
"""

from __future__ import annotations

import json
from collections import deque
from typing import Iterable, Mapping, Sequence

from .errors import (
    DisconnectedError,
    DuplicateEdgeError,
    ParseError,
    SelfLoopError,
)


class Graph:
    """Immutable simple connected graph on vertex ids 0..n-1."""

    __slots__ = ("n", "edges", "labels", "_adj", "_dist")

    def __init__(
        self,
        n: int,
        edges: Iterable[Sequence[int]],
        labels: Mapping[int, str] | None = None,
    ):
        if not isinstance(n, int) or n < 1:
            raise ParseError(f"vertex count must be a positive integer, got {n!r}")
        norm: list[tuple[int, int]] = []
        seen: set[tuple[int, int]] = set()
        for e in edges:
            u, v = e
            if not (isinstance(u, int) and isinstance(v, int)):
                raise ParseError(f"edge endpoints must be integers, got {e!r}")
            if not (0 <= u < n and 0 <= v < n):
                raise ParseError(f"edge {e!r} out of range for n={n}")
            if u == v:
                raise SelfLoopError(f"self-loop at vertex {u}")
            if u > v:
                u, v = v, u
            if (u, v) in seen:
                raise DuplicateEdgeError(f"duplicate edge ({u},{v})")
            seen.add((u, v))
            norm.append((u, v))
        norm.sort()
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(norm))
        object.__setattr__(self, "labels", dict(labels) if labels else None)

        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in norm:
            adj[u].append(v)
            adj[v].append(u)
        object.__setattr__(self, "_adj", tuple(tuple(sorted(a)) for a in adj))
        object.__setattr__(self, "_dist", None)

        if n > 1:
            reach = bfs_distances(self._adj, 0)
            if any(d < 0 for d in reach):
                raise DisconnectedError("graph is not connected")

    def __setattr__(self, name, value):  # pragma: no cover - defensive
        raise AttributeError("Graph is immutable")

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    @property
    def m(self) -> int:
        return len(self.edges)

    def leaves(self) -> list[int]:
        """N_1: all vertices of degree one."""
        return [v for v in range(self.n) if self.degree(v) == 1]

    def distances(self) -> list[list[int]]:
        """All-pairs hop distances (cached)."""
        if self._dist is None:
            mat = [bfs_distances(self._adj, s) for s in range(self.n)]
            object.__setattr__(self, "_dist", mat)
        return self._dist

    def label(self, v: int) -> str:
        if self.labels and v in self.labels:
            return self.labels[v]
        return str(v)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def bfs_distances(adj: Sequence[Sequence[int]], src: int) -> list[int]:
    """Hop distances from src; -1 marks unreachable vertices."""
    dist = [-1] * len(adj)
    dist[src] = 0
    queue = deque([src])
    while queue:
        u = queue.popleft()
        du = dist[u]
        for w in adj[u]:
            if dist[w] < 0:
                dist[w] = du + 1
                queue.append(w)
    return dist


def all_pairs_distances(graph: Graph) -> list[list[int]]:
    return graph.distances()


def parse_graph(text: str) -> Graph:
    """Parse either the JSON graph format or a whitespace edge list.

    JSON: ``{"n": 3, "edges": [[0,1],[1,2],[2,0]], "labels": {"0": "a"}?}``.
    Edge list: one ``u v`` pair per line, ``#`` starts a comment.
    """
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return _parse_json(text)
    return _parse_edge_list(text)


def _parse_json(text: str) -> Graph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise ParseError('JSON graph needs "n" and "edges" keys')
    labels = None
    if obj.get("labels"):
        try:
            labels = {int(k): str(v) for k, v in obj["labels"].items()}
        except (ValueError, AttributeError) as exc:
            raise ParseError(f"bad labels map: {exc}") from exc
    return Graph(obj["n"], obj["edges"], labels)


def _parse_edge_list(text: str) -> Graph:
    edges = []
    max_id = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise ParseError(f"line {lineno}: non-integer id in {raw!r}") from exc
        if u < 0 or v < 0:
            raise ParseError(f"line {lineno}: negative id in {raw!r}")
        edges.append((u, v))
        max_id = max(max_id, u, v)
    if max_id < 0:
        raise ParseError("edge list contains no edges")
    return Graph(max_id + 1, edges)


def serialize_graph(graph: Graph) -> str:
    """Canonical JSON rendering (fixed key order, sorted edges)."""
    obj: dict = {"n": graph.n, "edges": [list(e) for e in graph.edges]}
    if graph.labels:
        obj["labels"] = {str(k): graph.labels[k] for k in sorted(graph.labels)}
    return json.dumps(obj, separators=(",", ":"))


def add_pendant(graph: Graph, at: int) -> tuple[Graph, int]:
    """New graph with one extra vertex hanging off `at`; returns it and its id."""
    new = graph.n
    return Graph(new + 1, list(graph.edges) + [(at, new)], labels=graph.labels), new


def add_path(graph: Graph, at: int, m: int) -> Graph:
    """Attach a path of m new vertices to `at`, chained n, n+1, ..."""
    edges = list(graph.edges)
    prev = at
    for i in range(m):
        edges.append((prev, graph.n + i))
        prev = graph.n + i
    return Graph(graph.n + m, edges, labels=graph.labels)


def remove_vertex(graph: Graph, v: int) -> tuple[Graph, dict[int, int]]:
    """Drop v, renumbering the rest downward; returns old-to-new id map."""
    mapping = {old: old - (old > v) for old in range(graph.n) if old != v}
    edges = [(mapping[a], mapping[b]) for a, b in graph.edges if v not in (a, b)]
    labels = None
    if graph.labels:
        labels = {mapping[k]: lab for k, lab in graph.labels.items() if k != v}
    return Graph(graph.n - 1, edges, labels=labels), mapping


def export_dot(
    n: int,
    edges: Iterable[tuple[int, int]],
    black: Iterable[int] = (),
    gray: Iterable[int] = (),
    labels: Mapping[int, str] | None = None,
    name: str = "G",
) -> str:
    """Deterministic DOT text; black/gray vertex sets follow the report
    conventions (black = forced, gray = in some basis / isolated)."""
    black_set = set(black)
    gray_set = set(gray) - black_set
    lines = [f"graph {name} {{"]
    for v in range(n):
        attrs = []
        if labels and v in labels:
            attrs.append(f'label="{labels[v]}"')
        if v in black_set:
            attrs.append('style=filled fillcolor=black fontcolor=white')
        elif v in gray_set:
            attrs.append('style=filled fillcolor=gray')
        lines.append(f"  {v} [{' '.join(attrs)}];" if attrs else f"  {v};")
    for u, v in sorted(tuple(sorted(e)) for e in edges):
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
