"""Constructive labelings whose window weights form a consecutive run.

Each constructor assigns positive integer labels via ceilings of affine
expressions in the element coordinates, chosen so that the t = n - c + 1
window weights come out as base, base+1, ..., base + (n - c).  The budget
k equals the closed-form strength for the kind (see :mod:`gridirr.bounds`),
which is what makes the constructions optimal witnesses.

All ceiling arithmetic is exact integer math.  The numerators are
frequently negative (j - i*c with small j), where truncating division
would silently round the wrong way; :func:`ceil_div` is the single audited
primitive every formula goes through.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from typing import Mapping

from .errors import InvalidParameterError
from .grid import Edge, Element, Vertex, require_window_scope


class LabelingKind(enum.Enum):
    """Which elements carry labels: vertices, edges, or both."""

    VERTEX = "vertex"
    EDGE = "edge"
    TOTAL = "total"


class TotalVariant(enum.Enum):
    """Denominator choice for the horizontal-edge formula of the total kind.

    CORRECTED uses the same denominator 3mc - m - c as the vertex and
    vertical-edge formulas, which keeps every label in {1, ..., k}.
    AS_PRINTED uses 2mc - m - c for horizontal edges; the mismatch can push
    labels below 1, and such labelings are produced literally so the
    verifier can report the range violations.
    """

    CORRECTED = "corrected"
    AS_PRINTED = "as_printed"


@dataclass(frozen=True)
class Labeling:
    """An assignment of labels in {1, ..., k} to graph elements.

    ``labels`` maps vertices and/or edges (per ``kind``) to labels; it is
    owned by the instance and must not be mutated.  ``m`` and ``n`` record
    the host grid's dimensions for serialization.
    """

    kind: LabelingKind
    k: int
    labels: Mapping[Element, int]
    m: int
    n: int

    def label(self, element: Element) -> int:
        return self.labels[element]

    def with_label(self, element: Element, label: int) -> "Labeling":
        """Copy with one label replaced (used by mutation tests and tools)."""
        updated = dict(self.labels)
        updated[element] = label
        return replace(self, labels=updated)

    def max_label(self) -> int:
        return max(self.labels.values())


def ceil_div(p: int, q: int) -> int:
    """Ceiling of p/q for integer p and positive q, exact for negative p.

    ceil_div(-1, 4) == 0, ceil_div(4, 4) == 1, ceil_div(-7, 8) == 0.
    """
    if q <= 0:
        raise InvalidParameterError(f"divisor must be positive, got {q}")
    return -(-p // q)


def construct_vertex_labeling(m: int, n: int, c: int) -> Labeling:
    """Vertex labeling of the m-by-n grid for width-c window coverings.

    label(i, j) = 1 + ceil((j - i*c) / (m*c)); the maximum label, attained
    at (1, n), equals the budget k = 1 + ceil((n - c) / (m*c)).
    """
    require_window_scope(m, c, n)
    d = m * c
    k = 1 + ceil_div(n - c, d)
    labels: dict[Element, int] = {}
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            labels[Vertex(i, j)] = 1 + ceil_div(j - i * c, d)
    return Labeling(kind=LabelingKind.VERTEX, k=k, labels=labels, m=m, n=n)


def construct_edge_labeling(m: int, n: int, c: int) -> Labeling:
    """Edge labeling of the m-by-n grid for width-c window coverings.

    With D = 2mc - m - c (the edge count of one window):

        vertical   (i,j)-(i+1,j):  1 + ceil((j - i*c) / D)
        horizontal (i,j)-(i,j+1):  1 + ceil((j - (m+i-1)*c + i) / D)

    The maximum label, at the vertical edge (1,n)-(2,n), equals
    k = 1 + ceil((n - c) / D).
    """
    require_window_scope(m, c, n)
    d = 2 * m * c - m - c
    k = 1 + ceil_div(n - c, d)
    labels: dict[Element, int] = {}
    for i in range(1, m):
        for j in range(1, n + 1):
            labels[Edge(Vertex(i, j), Vertex(i + 1, j))] = 1 + ceil_div(
                j - i * c, d
            )
    for i in range(1, m + 1):
        for j in range(1, n):
            labels[Edge(Vertex(i, j), Vertex(i, j + 1))] = 1 + ceil_div(
                j - (m + i - 1) * c + i, d
            )
    return Labeling(kind=LabelingKind.EDGE, k=k, labels=labels, m=m, n=n)


def construct_total_labeling(
    m: int, n: int, c: int, variant: TotalVariant = TotalVariant.CORRECTED
) -> Labeling:
    """Total labeling of the m-by-n grid for width-c window coverings.

    With D = 3mc - m - c (vertex plus edge count of one window):

        vertex     (i,j):          1 + ceil((j - i*c) / D)
        vertical   (i,j)-(i+1,j):  1 + ceil((j - (m+i)*c) / D)
        horizontal (i,j)-(i,j+1):  1 + ceil((j - (2m+i-1)*c + i) / D')

    where D' = D under ``TotalVariant.CORRECTED`` and D' = 2mc - m - c
    under ``TotalVariant.AS_PRINTED``.  The budget is always
    k = 1 + ceil((n - c) / D); under the corrected variant every label lies
    in {1, ..., k} with the maximum at vertex (1, n), while the as-printed
    variant can produce labels below 1 (left for the verifier to flag).
    """
    require_window_scope(m, c, n)
    d = 3 * m * c - m - c
    d_horizontal = d if variant is TotalVariant.CORRECTED else 2 * m * c - m - c
    k = 1 + ceil_div(n - c, d)
    labels: dict[Element, int] = {}
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            labels[Vertex(i, j)] = 1 + ceil_div(j - i * c, d)
    for i in range(1, m):
        for j in range(1, n + 1):
            labels[Edge(Vertex(i, j), Vertex(i + 1, j))] = 1 + ceil_div(
                j - (m + i) * c, d
            )
    for i in range(1, m + 1):
        for j in range(1, n):
            labels[Edge(Vertex(i, j), Vertex(i, j + 1))] = 1 + ceil_div(
                j - (2 * m + i - 1) * c + i, d_horizontal
            )
    return Labeling(kind=LabelingKind.TOTAL, k=k, labels=labels, m=m, n=n)
