"""Grid graphs and generic finite simple graphs with exact element identity.

A grid graph has m rows and n columns of vertices; vertex (i, j) sits in
row i (1-based) and column j (1-based).  Edges join orthogonal neighbours:
vertical edges (i, j)-(i+1, j) and horizontal edges (i, j)-(i, j+1).

The same ``Graph`` container also serves arbitrary simple graphs: vertex
identities stay (i, j) pairs, with non-grid inputs conventionally embedded
in a single row (i = 1, j = ordinal).  Only :func:`canonical_edge` insists
on grid adjacency; ``Edge`` itself accepts any pair of distinct vertices so
user-supplied hosts round-trip unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Union

from .errors import InvalidEdgeError, InvalidParameterError, ScopeError


class Vertex(NamedTuple):
    """Grid vertex at row ``i``, column ``j`` (both 1-based).

    Tuple ordering gives the row-major canonical order used everywhere:
    (1,1), (1,2), ..., (2,1), ...
    """

    i: int
    j: int


@dataclass(frozen=True, order=True)
class Edge:
    """Unordered vertex pair stored with endpoints in row-major order.

    Construction canonicalizes: ``Edge(b, a) == Edge(a, b)``.  Self-loops
    are rejected; adjacency is not checked here (general graphs may carry
    non-grid edges).
    """

    a: Vertex
    b: Vertex

    def __post_init__(self) -> None:
        if self.a == self.b:
            raise InvalidEdgeError(f"self-loop at {format_element(self.a)}")
        if self.b < self.a:
            a, b = self.b, self.a
            object.__setattr__(self, "a", a)
            object.__setattr__(self, "b", b)

    def endpoints(self) -> tuple[Vertex, Vertex]:
        return (self.a, self.b)


Element = Union[Vertex, Edge]


def format_element(element: Element) -> str:
    """Compact rendering: ``(i,j)`` for vertices, ``(i,j)-(i,j)`` for edges."""
    if isinstance(element, Vertex):
        return f"({element.i},{element.j})"
    return f"({element.a.i},{element.a.j})-({element.b.i},{element.b.j})"


@dataclass(frozen=True)
class GridSpec:
    """Shape of a grid graph: ``m`` rows by ``n`` columns.

    Any m, n >= 1 is representable; the window constructions additionally
    require 2 <= m <= c <= n and enforce that separately.
    """

    m: int
    n: int

    def __post_init__(self) -> None:
        if self.m < 1 or self.n < 1:
            raise InvalidParameterError(
                f"grid dimensions must be positive, got m={self.m}, n={self.n}"
            )


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph: a vertex set and an edge set."""

    vertices: frozenset[Vertex]
    edges: frozenset[Edge]

    def sorted_vertices(self) -> list[Vertex]:
        return sorted(self.vertices)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def degree(self, v: Vertex) -> int:
        return sum(1 for e in self.edges if v in e.endpoints())


def graph_from_elements(
    vertices: Iterable[Vertex], edges: Iterable[Edge]
) -> Graph:
    """Build a :class:`Graph`, checking every edge endpoint is a vertex."""
    vset = frozenset(vertices)
    eset = frozenset(edges)
    for e in eset:
        if e.a not in vset or e.b not in vset:
            raise InvalidParameterError(
                f"edge {e.a}-{e.b} has an endpoint outside the vertex set"
            )
    return Graph(vertices=vset, edges=eset)


def make_grid(spec: GridSpec) -> Graph:
    """Construct the grid graph with ``spec.m`` rows and ``spec.n`` columns.

    The result has m*n vertices and 2mn - m - n edges: vertical edges
    (i, j)-(i+1, j) for i < m, horizontal edges (i, j)-(i, j+1) for j < n.
    """
    m, n = spec.m, spec.n
    vertices = [Vertex(i, j) for i in range(1, m + 1) for j in range(1, n + 1)]
    edges: list[Edge] = []
    for i in range(1, m):
        for j in range(1, n + 1):
            edges.append(Edge(Vertex(i, j), Vertex(i + 1, j)))
    for i in range(1, m + 1):
        for j in range(1, n):
            edges.append(Edge(Vertex(i, j), Vertex(i, j + 1)))
    return Graph(vertices=frozenset(vertices), edges=frozenset(edges))


def grid_dims(graph: Graph) -> tuple[int, int]:
    """Bounding dimensions (max row, max column) of a nonempty graph.

    For graphs built by :func:`make_grid` this recovers (m, n) exactly.
    """
    if not graph.vertices:
        raise InvalidParameterError("graph has no vertices")
    return (
        max(v.i for v in graph.vertices),
        max(v.j for v in graph.vertices),
    )


def grid_adjacent(a: Vertex, b: Vertex) -> bool:
    """True iff the two vertices are orthogonal neighbours."""
    if a.i == b.i:
        return abs(a.j - b.j) == 1
    if a.j == b.j:
        return abs(a.i - b.i) == 1
    return False


def canonical_edge(a: Vertex, b: Vertex) -> Edge:
    """Grid edge between two adjacent vertices, endpoints in canonical order.

    Raises :class:`InvalidEdgeError` for equal or non-adjacent endpoints
    (e.g. diagonal pairs).
    """
    if a == b:
        raise InvalidEdgeError(
            f"cannot form an edge from {format_element(a)} to itself"
        )
    if not grid_adjacent(a, b):
        raise InvalidEdgeError(
            f"{format_element(a)} and {format_element(b)} are not "
            f"grid-adjacent"
        )
    return Edge(a, b)


def transpose(graph: Graph) -> Graph:
    """Swap rows and columns of every element.

    Maps an m-by-n grid onto the n-by-m grid; window coverings sliding
    along columns of the transpose correspond to row-direction windows of
    the original.
    """
    vmap = {v: Vertex(v.j, v.i) for v in graph.vertices}
    return Graph(
        vertices=frozenset(vmap.values()),
        edges=frozenset(Edge(vmap[e.a], vmap[e.b]) for e in graph.edges),
    )


def require_window_scope(m: int, c: int, n: int) -> None:
    """Enforce the supported window-parameter range 2 <= m <= c <= n."""
    if not (2 <= m <= c <= n):
        hint = ""
        if m > n:
            hint = f" (hint: transpose the grid, i.e. swap m and n: m={n}, n={m})"
        raise ScopeError(
            f"window parameters must satisfy 2 <= m <= c <= n, "
            f"got m={m}, c={c}, n={n}{hint}"
        )
