"""Aggregated strength reports for one (kind, m, c, n) query."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .bounds import closed_form_strength, lower_bound
from .construct import (
    Labeling,
    LabelingKind,
    TotalVariant,
    construct_edge_labeling,
    construct_total_labeling,
    construct_vertex_labeling,
)
from .covering import CoverFamily, enumerate_windows
from .grid import Graph, GridSpec, make_grid, require_window_scope
from .search import min_strength
from .verify import verify_irregular


@dataclass(frozen=True)
class StrengthReport:
    """Bounds, closed form, witness status, and optional oracle result."""

    kind: LabelingKind
    m: int
    c: int
    n: int
    t: int
    lower_bound: int
    closed_form: int
    construction_verified: bool
    oracle_ran: bool = False
    oracle_k: Optional[int] = None
    erratum_note: Optional[str] = None

    @property
    def oracle_agrees(self) -> Optional[bool]:
        """None when the oracle did not run; otherwise exact agreement."""
        if not self.oracle_ran:
            return None
        return self.oracle_k == self.closed_form

    def to_lines(self) -> list[str]:
        lines = [
            f"kind={self.kind.value} m={self.m} c={self.c} n={self.n} t={self.t}",
            f"lower_bound={self.lower_bound}",
            f"closed_form={self.closed_form}",
            f"construction_verified={'true' if self.construction_verified else 'false'}",
        ]
        if self.oracle_ran:
            shown = "none" if self.oracle_k is None else str(self.oracle_k)
            lines.append(f"oracle_k={shown}")
        if self.erratum_note is not None:
            lines.append(f"erratum_note={self.erratum_note}")
        return lines


def construct_for_kind(
    kind: LabelingKind,
    m: int,
    n: int,
    c: int,
    variant: TotalVariant = TotalVariant.CORRECTED,
) -> Labeling:
    """Dispatch to the constructor for the kind (variant applies to total)."""
    if kind is LabelingKind.VERTEX:
        return construct_vertex_labeling(m, n, c)
    if kind is LabelingKind.EDGE:
        return construct_edge_labeling(m, n, c)
    return construct_total_labeling(m, n, c, variant)


def _erratum_note(
    m: int, n: int, c: int, family: CoverFamily
) -> Optional[str]:
    """Describe the as-printed total variant's outcome when it deviates."""
    corrected = construct_total_labeling(m, n, c, TotalVariant.CORRECTED)
    printed = construct_total_labeling(m, n, c, TotalVariant.AS_PRINTED)
    if printed.labels == corrected.labels:
        return None
    verdict = verify_irregular(printed, family)
    if verdict.accepted:
        return (
            "as-printed horizontal-edge denominator (2mc-m-c) changes labels "
            "but still verifies for these parameters"
        )
    return (
        f"as-printed horizontal-edge denominator (2mc-m-c) fails "
        f"verification: {verdict.violation}; the corrected variant uses "
        f"3mc-m-c and verifies"
    )


def strength_report(
    kind: LabelingKind,
    m: int,
    c: int,
    n: int,
    oracle: bool = False,
    max_elements: Optional[int] = None,
) -> StrengthReport:
    """Compute bounds and closed form, verify the construction, optionally
    confirm minimality by exhaustive search up to the closed form.

    Raises :class:`gridirr.errors.ResourceLimitError` when ``oracle`` is
    set and the instance exceeds the search size cap.
    """
    require_window_scope(m, c, n)
    t = n - c + 1
    host: Graph = make_grid(GridSpec(m, n))
    family = enumerate_windows(host, c)
    lb = lower_bound(kind, t, m * c, 2 * m * c - m - c)
    cf = closed_form_strength(kind, m, n, c)
    labeling = construct_for_kind(kind, m, n, c)
    verdict = verify_irregular(labeling, family)
    construction_verified = verdict.accepted and labeling.max_label() == cf
    note = _erratum_note(m, n, c, family) if kind is LabelingKind.TOTAL else None
    oracle_k: Optional[int] = None
    if oracle:
        result = min_strength(
            host, family, kind, k_max=cf, max_elements=max_elements
        )
        oracle_k = result.minimal_k
    return StrengthReport(
        kind=kind,
        m=m,
        c=c,
        n=n,
        t=t,
        lower_bound=lb,
        closed_form=cf,
        construction_verified=construction_verified,
        oracle_ran=oracle,
        oracle_k=oracle_k,
        erratum_note=note,
    )
