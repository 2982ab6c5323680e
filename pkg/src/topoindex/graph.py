"""Immutable simple undirected graphs and the degree notions built on them.

Vertices are the integers ``0..n-1``. Edges are stored as sorted pairs
``(u, v)`` with ``u < v``; the edge tuple itself is sorted, which fixes the
iteration order used by every summation downstream.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence, TextIO

Edge = tuple[int, int]


class GraphError(ValueError):
    """Invalid graph construction or an operation outside its domain."""


class DisconnectedGraphError(GraphError):
    """Raised by operations that are only defined on connected graphs."""


class EdgeListFormatError(GraphError):
    """Malformed edge-list text. Carries 1-based line and column."""

    def __init__(self, message: str, line: int, col: int = 1):
        super().__init__(f"{line}:{col}: {message}")
        self.message = message
        self.line = line
        self.col = col


class Graph:
    """A simple undirected graph on vertices ``0..n-1``.

    Instances are immutable and hashable. Build them with
    :meth:`from_edge_list` (or the constructor, which does the same
    validation).
    """

    __slots__ = ("_n", "_edges", "_adj", "_edge_set")

    def __init__(self, n: int, pairs: Iterable[Sequence[int]] = ()):
        if isinstance(n, bool) or not isinstance(n, int):
            raise GraphError(f"vertex count must be an int, got {n!r}")
        if n < 1:
            raise GraphError(f"vertex count must be >= 1, got {n}")
        edges = set()
        for pair in pairs:
            u, v = (int(x) for x in pair)
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            edges.add((u, v) if u < v else (v, u))
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            adj[u].append(v)
            adj[v].append(u)
        ordered = tuple(sorted(edges))
        object.__setattr__(self, "_n", n)
        object.__setattr__(self, "_edges", ordered)
        object.__setattr__(self, "_edge_set", frozenset(ordered))
        object.__setattr__(self, "_adj", tuple(tuple(sorted(a)) for a in adj))

    @classmethod
    def from_edge_list(cls, n: int, pairs: Iterable[Sequence[int]]) -> "Graph":
        return cls(n, pairs)

    @property
    def n(self) -> int:
        return self._n

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self._edges

    @property
    def m(self) -> int:
        return len(self._edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self._adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._edge_set

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self._n:
            raise GraphError(f"vertex {v} not in 0..{self._n - 1}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={list(self._edges)!r})"

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __reduce__(self):
        return (Graph, (self._n, self._edges))


def from_edge_list(n: int, pairs: Iterable[Sequence[int]]) -> Graph:
    return Graph(n, pairs)


def degree(g: Graph, v: int) -> int:
    return len(g.neighbors(v))


def degrees(g: Graph) -> list[int]:
    return [len(g.neighbors(v)) for v in range(g.n)]


def closed_neighborhood(g: Graph, v: int) -> frozenset[int]:
    return frozenset(g.neighbors(v)) | {v}


def ve_degree(g: Graph, v: int) -> int:
    """Number of distinct edges with at least one endpoint in ``N[v]``."""
    touched = set()
    for w in closed_neighborhood(g, v):
        for x in g.neighbors(w):
            touched.add((w, x) if w < x else (x, w))
    return len(touched)


def ev_degree(g: Graph, e: Sequence[int]) -> int:
    """Number of vertices in ``N[u] | N[v]`` for the edge ``e = (u, v)``."""
    u, v = e
    if not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    return len(closed_neighborhood(g, u) | closed_neighborhood(g, v))


def ve_degrees(g: Graph) -> list[int]:
    return [ve_degree(g, v) for v in range(g.n)]


def ev_degrees(g: Graph) -> list[int]:
    """ev-degrees in sorted edge order (the order of ``g.edges``)."""
    return [ev_degree(g, e) for e in g.edges]


def triangle_count(g: Graph) -> int:
    count = 0
    for u, v in g.edges:
        # each triangle is seen once, from its lexicographically first edge
        count += sum(1 for w in g.neighbors(v) if w > v and g.has_edge(u, w))
    return count


def _bfs(g: Graph, source: int) -> list[int]:
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def is_connected(g: Graph) -> bool:
    return min(_bfs(g, 0)) >= 0


def is_tree(g: Graph) -> bool:
    return g.m == g.n - 1 and is_connected(g)


def require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise DisconnectedGraphError("operation requires a connected graph")


def all_pairs_distance(g: Graph) -> list[list[int]]:
    """Shortest-path distance matrix by repeated BFS."""
    rows = [_bfs(g, s) for s in range(g.n)]
    if any(d < 0 for d in rows[0]):
        raise DisconnectedGraphError("distances are undefined on a disconnected graph")
    return rows


# Small named families used across tests, the verifier and the CLI.


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(n: int) -> Graph:
    """K_{1,n-1} with centre 0."""
    return Graph(n, [(0, i) for i in range(1, n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


# Edge-list text format: "n m" header, then m lines "u v"; '#' lines ignored.


def parse_edge_list(text: str) -> Graph:
    header: tuple[int, int] | None = None
    pairs: list[Edge] = []
    header_line = 0
    if text and not text.endswith("\n"):
        last = text.count("\n") + 1
        raise EdgeListFormatError("missing trailing newline", last, len(text.splitlines()[-1]) + 1)
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise EdgeListFormatError(f"expected 2 integers, found {len(fields)} fields", lineno)
        values = []
        for field in fields:
            try:
                values.append(int(field))
            except ValueError:
                col = raw.index(field) + 1
                raise EdgeListFormatError(f"not an integer: {field!r}", lineno, col) from None
        if header is None:
            header = (values[0], values[1])
            header_line = lineno
            continue
        u, v = values
        for value, field in zip(values, fields):
            if not 0 <= value < header[0]:
                col = raw.index(field) + 1
                raise EdgeListFormatError(f"vertex {value} outside 0..{header[0] - 1}", lineno, col)
        if u == v:
            raise EdgeListFormatError(f"self-loop at vertex {u}", lineno)
        pairs.append((u, v))
    if header is None:
        raise EdgeListFormatError("missing 'n m' header", 1)
    n, m = header
    if n < 1:
        raise EdgeListFormatError(f"vertex count must be >= 1, got {n}", header_line)
    if len(pairs) != m:
        raise EdgeListFormatError(f"header declares {m} edges, found {len(pairs)}", header_line)
    g = Graph(n, pairs)
    if g.m != m:
        raise EdgeListFormatError("duplicate edges in edge list", header_line)
    return g


def format_edge_list(g: Graph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"{g.n} {g.m}")
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def read_edge_list(stream: TextIO) -> Graph:
    return parse_edge_list(stream.read())


def write_edge_list(g: Graph, stream: TextIO) -> None:
    stream.write(format_edge_list(g))
