"""Subgraph weights and the irregularity verdict.

The weight of a family member is the sum of its vertex labels (vertex
kind), edge labels (edge kind), or both (total kind).  A labeling is
irregular over a family when every label respects the budget and all
member weights are pairwise distinct.

Weights are plain Python integers, so there is no overflow to guard
against; magnitudes at the supported scales stay tiny anyway (at most
k * (3mc - m - c) per member).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .construct import Labeling, LabelingKind
from .covering import CoverFamily, Subgraph, is_edge_covering
from .errors import IncompleteLabelingError, MalformedFamilyError
from .grid import Edge, Element, Vertex, format_element

WeightProfile = list[int]


@dataclass(frozen=True)
class RangeViolation:
    """A label outside {1, ..., k}."""

    element: Element
    label: int
    k: int

    def __str__(self) -> str:
        return (
            f"label {self.label} at {format_element(self.element)} "
            f"outside 1..{self.k}"
        )


@dataclass(frozen=True)
class WeightCollision:
    """Two family members (1-based indices) with equal weight."""

    first: int
    second: int
    weight: int

    def __str__(self) -> str:
        return (
            f"members {self.first} and {self.second} share weight "
            f"{self.weight}"
        )


Violation = Union[RangeViolation, WeightCollision]


@dataclass(frozen=True)
class Verdict:
    """Outcome of :func:`verify_irregular`.

    ``accepted`` implies ``violation`` is None; a rejection carries exactly
    one violation, the first under deterministic ordering (range violations
    in canonical element order before collisions in lexicographic member
    order).
    """

    accepted: bool
    violation: Optional[Violation] = None


def _relevant_elements(kind: LabelingKind, member: Subgraph) -> list[Element]:
    if kind is LabelingKind.VERTEX:
        return list(member.sorted_vertices())
    if kind is LabelingKind.EDGE:
        return list(member.sorted_edges())
    return list(member.sorted_vertices()) + list(member.sorted_edges())


def subgraph_weight(labeling: Labeling, member: Subgraph) -> int:
    """Sum of the member's labels relevant to the labeling's kind."""
    total = 0
    for element in _relevant_elements(labeling.kind, member):
        try:
            total += labeling.labels[element]
        except KeyError:
            raise IncompleteLabelingError(
                f"no label for {format_element(element)} required by a "
                f"{labeling.kind.value} labeling"
            ) from None
    return total


def weight_profile(labeling: Labeling, family: CoverFamily) -> WeightProfile:
    """Member weights in family order."""
    return [subgraph_weight(labeling, member) for member in family.members]


def _first_range_violation(labeling: Labeling) -> Optional[RangeViolation]:
    vertices = sorted(e for e in labeling.labels if isinstance(e, Vertex))
    edges = sorted(e for e in labeling.labels if isinstance(e, Edge))
    for element in [*vertices, *edges]:
        label = labeling.labels[element]
        if not 1 <= label <= labeling.k:
            return RangeViolation(element=element, label=label, k=labeling.k)
    return None


def _first_collision(profile: WeightProfile) -> Optional[WeightCollision]:
    seen: dict[int, int] = {}
    best: Optional[tuple[int, int]] = None
    for idx, weight in enumerate(profile, start=1):
        if weight in seen:
            pair = (seen[weight], idx)
            if best is None or pair < best:
                best = pair
        else:
            seen[weight] = idx
    if best is None:
        return None
    return WeightCollision(
        first=best[0], second=best[1], weight=profile[best[0] - 1]
    )


def verify_irregular(labeling: Labeling, family: CoverFamily) -> Verdict:
    """Accept iff every label is in {1, ..., k} and all weights differ.

    The family must be an edge covering of its host; otherwise
    :class:`MalformedFamilyError` is raised (irregularity is undefined
    without a covering).
    """
    check = is_edge_covering(family.host, family)
    if not check.covers:
        missed = check.uncovered[0]
        raise MalformedFamilyError(
            f"family does not cover the host: edge "
            f"{format_element(missed)} belongs to no member"
        )
    breach = _first_range_violation(labeling)
    if breach is not None:
        return Verdict(accepted=False, violation=breach)
    collision = _first_collision(weight_profile(labeling, family))
    if collision is not None:
        return Verdict(accepted=False, violation=collision)
    return Verdict(accepted=True)
