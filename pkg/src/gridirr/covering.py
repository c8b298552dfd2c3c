"""Sliding-window subgraph families and the edge-covering check.

An m-by-n grid is edge-covered by the n - c + 1 "windows" spanning columns
l .. l+c-1, each an m-by-c grid.  User-supplied families carry explicit
element sets and flow through the same verification and search paths as
enumerated windows.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import MalformedFamilyError
from .grid import (
    Edge,
    Graph,
    Vertex,
    format_element,
    grid_dims,
    require_window_scope,
)


@dataclass(frozen=True)
class Subgraph:
    """Explicit vertex and edge sets of one covering-family member."""

    vertices: frozenset[Vertex]
    edges: frozenset[Edge]

    def sorted_vertices(self) -> list[Vertex]:
        return sorted(self.vertices)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)


@dataclass(frozen=True)
class CoverFamily:
    """An ordered family of subgraphs claimed to edge-cover ``host``.

    Member indices are 1-based positions in ``members``; for enumerated
    window families, member l spans columns l .. l+c-1.  Members must be
    pairwise distinct as (vertex set, edge set) pairs; whether they cover
    the host is checked separately by :func:`is_edge_covering`.
    """

    host: Graph
    members: tuple[Subgraph, ...]

    def __post_init__(self) -> None:
        if not self.members:
            raise MalformedFamilyError("a covering family needs >= 1 member")
        if len(set(self.members)) != len(self.members):
            raise MalformedFamilyError(
                "family members must be pairwise distinct element sets"
            )

    @property
    def t(self) -> int:
        return len(self.members)


def window_subgraph(m: int, c: int, l: int) -> Subgraph:
    """The window spanning columns l .. l+c-1 of an m-row grid.

    Contains all m*c vertices in those columns, the vertical edges of every
    covered column, and the horizontal edges between consecutive covered
    columns: 2mc - m - c edges in total.
    """
    cols = range(l, l + c)
    vertices = [Vertex(i, j) for i in range(1, m + 1) for j in cols]
    edges: list[Edge] = []
    for j in cols:
        for i in range(1, m):
            edges.append(Edge(Vertex(i, j), Vertex(i + 1, j)))
    for j in range(l, l + c - 1):
        for i in range(1, m + 1):
            edges.append(Edge(Vertex(i, j), Vertex(i, j + 1)))
    return Subgraph(vertices=frozenset(vertices), edges=frozenset(edges))


def enumerate_windows(grid: Graph, c: int) -> CoverFamily:
    """All n - c + 1 column windows of width c, ordered left to right.

    ``grid`` must be an m-by-n grid graph (its dimensions are recovered
    from the vertex set); parameters must satisfy 2 <= m <= c <= n.
    """
    m, n = grid_dims(grid)
    require_window_scope(m, c, n)
    members = tuple(window_subgraph(m, c, l) for l in range(1, n - c + 2))
    return CoverFamily(host=grid, members=members)


@dataclass(frozen=True)
class CoveringCheck:
    """Outcome of :func:`is_edge_covering`.

    ``uncovered`` holds host edges missed by every member (sorted,
    nonempty exactly when ``covers`` is False).
    """

    covers: bool
    uncovered: tuple[Edge, ...]


def is_edge_covering(host: Graph, family: CoverFamily) -> CoveringCheck:
    """Decide whether the family's edge sets jointly cover the host's.

    Raises :class:`MalformedFamilyError` if any member contains an element
    absent from the host.
    """
    for idx, member in enumerate(family.members, start=1):
        for v in member.vertices:
            if v not in host.vertices:
                raise MalformedFamilyError(
                    f"member {idx} contains vertex {format_element(v)} "
                    f"not in the host"
                )
        for e in member.edges:
            if e not in host.edges:
                raise MalformedFamilyError(
                    f"member {idx} contains edge {format_element(e)} "
                    f"not in the host"
                )
    covered: set[Edge] = set()
    for member in family.members:
        covered.update(member.edges)
    uncovered = tuple(sorted(host.edges - covered))
    return CoveringCheck(covers=not uncovered, uncovered=uncovered)
