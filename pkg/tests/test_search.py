import itertools

import pytest

from gridirr import (
    CoverFamily,
    GridSpec,
    Labeling,
    LabelingKind,
    MalformedFamilyError,
    ResourceLimitError,
    Subgraph,
    closed_form_strength,
    enumerate_windows,
    exists_irregular,
    family_lower_bound,
    lower_bound,
    make_grid,
    min_strength,
    subgraph_weight,
    verify_irregular,
)


def brute_force_exists(host, family, kind, k):
    """Reference oracle: enumerate every label vector outright."""
    if kind is LabelingKind.VERTEX:
        elements = host.sorted_vertices()
    elif kind is LabelingKind.EDGE:
        elements = host.sorted_edges()
    else:
        elements = host.sorted_vertices() + host.sorted_edges()
    m = max(v.i for v in host.vertices)
    n = max(v.j for v in host.vertices)
    for combo in itertools.product(range(1, k + 1), repeat=len(elements)):
        lab = Labeling(
            kind=kind, k=k, labels=dict(zip(elements, combo)), m=m, n=n
        )
        weights = [subgraph_weight(lab, mem) for mem in family.members]
        if len(set(weights)) == len(weights):
            return lab
    return None


def test_vertex_negative_at_k1():
    host = make_grid(GridSpec(2, 3))
    fam = enumerate_windows(host, 2)
    assert exists_irregular(host, fam, LabelingKind.VERTEX, 1) is None


def test_vertex_witness_at_k2():
    host = make_grid(GridSpec(2, 3))
    fam = enumerate_windows(host, 2)
    witness = exists_irregular(host, fam, LabelingKind.VERTEX, 2)
    assert witness is not None
    assert verify_irregular(witness, fam).accepted


def test_single_member_all_ones():
    host = make_grid(GridSpec(2, 3))
    fam = enumerate_windows(host, 3)
    assert fam.t == 1
    for kind in LabelingKind:
        witness = exists_irregular(host, fam, kind, 1)
        assert witness is not None
        assert set(witness.labels.values()) == {1}


@pytest.mark.parametrize("kind", list(LabelingKind))
def test_agrees_with_brute_force_enumeration(kind):
    host = make_grid(GridSpec(2, 2))
    fam = enumerate_windows(host, 2)
    for k in (1, 2):
        ours = exists_irregular(host, fam, kind, k)
        reference = brute_force_exists(host, fam, kind, k)
        assert (ours is None) == (reference is None)


def test_brute_force_agreement_with_two_windows():
    host = make_grid(GridSpec(2, 3))
    fam = enumerate_windows(host, 2)
    for kind in (LabelingKind.VERTEX, LabelingKind.EDGE):
        for k in (1, 2):
            ours = exists_irregular(host, fam, kind, k)
            reference = brute_force_exists(host, fam, kind, k)
            assert (ours is None) == (reference is None)
            if ours is not None:
                # both searches scan in the same order, so the lex-least
                # witness must coincide
                assert ours.labels == reference.labels


def test_witness_is_lexicographically_least():
    host = make_grid(GridSpec(2, 3))
    fam = enumerate_windows(host, 2)
    witness = exists_irregular(host, fam, LabelingKind.VERTEX, 2)
    vector = [witness.labels[v] for v in host.sorted_vertices()]
    reference = brute_force_exists(host, fam, LabelingKind.VERTEX, 2)
    assert vector == [reference.labels[v] for v in host.sorted_vertices()]


def test_determinism():
    host = make_grid(GridSpec(2, 4))
    fam = enumerate_windows(host, 2)
    first = min_strength(host, fam, LabelingKind.EDGE, k_max=3)
    second = min_strength(host, fam, LabelingKind.EDGE, k_max=3)
    assert first == second


@pytest.mark.parametrize(
    "m,c,n", [(2, 2, 3), (2, 2, 4), (2, 2, 5), (2, 3, 4)]
)
def test_min_strength_matches_closed_form(m, c, n):
    host = make_grid(GridSpec(m, n))
    fam = enumerate_windows(host, c)
    for kind in LabelingKind:
        cf = closed_form_strength(kind, m, n, c)
        result = min_strength(host, fam, kind, k_max=cf + 1)
        assert result.minimal_k == cf
        assert verify_irregular(result.witness, fam).accepted
        assert result.witness.k == cf


def test_no_witness_below_lower_bound():
    host = make_grid(GridSpec(2, 4))
    fam = enumerate_windows(host, 2)
    for kind in LabelingKind:
        lb = lower_bound(kind, fam.t, 4, 4)
        # disable the skip: searching below the bound must come back empty
        for k in range(1, lb):
            assert exists_irregular(host, fam, kind, k) is None
        result = min_strength(host, fam, kind, k_max=3, start_k=1)
        assert result.minimal_k == lower_bound(kind, fam.t, 4, 4)


def test_family_lower_bound_matches_uniform_bound():
    host = make_grid(GridSpec(2, 5))
    fam = enumerate_windows(host, 2)
    for kind in LabelingKind:
        vH, eH = 4, 4
        assert family_lower_bound(kind, fam) == lower_bound(
            kind, fam.t, vH, eH
        )


def test_reported_negative_is_bounded_not_infinite():
    # two members with equal vertex sets but different edge sets are
    # distinct, yet their vertex weights agree under every labeling
    host = make_grid(GridSpec(2, 2))
    full = Subgraph(vertices=host.vertices, edges=host.edges)
    pruned = Subgraph(
        vertices=host.vertices, edges=frozenset(list(host.sorted_edges())[1:])
    )
    family = CoverFamily(host=host, members=(full, pruned))
    result = min_strength(host, family, LabelingKind.VERTEX, k_max=3)
    assert result.minimal_k is None
    assert result.witness is None
    assert result.k_max == 3


def test_resource_limit_is_an_error_not_a_negative():
    host = make_grid(GridSpec(2, 7))
    fam = enumerate_windows(host, 2)
    with pytest.raises(ResourceLimitError):
        exists_irregular(host, fam, LabelingKind.TOTAL, 2, max_elements=24)
    with pytest.raises(ResourceLimitError):
        min_strength(host, fam, LabelingKind.TOTAL, k_max=2, max_elements=24)
    # a generous cap lets the same instance through
    witness = exists_irregular(
        host, fam, LabelingKind.VERTEX, 3, max_elements=100
    )
    assert witness is not None


def test_non_covering_family_rejected():
    host = make_grid(GridSpec(2, 4))
    fam = enumerate_windows(host, 2)
    truncated = CoverFamily(host=host, members=fam.members[:-1])
    with pytest.raises(MalformedFamilyError):
        exists_irregular(host, truncated, LabelingKind.VERTEX, 2)


def test_nodes_explored_accumulates():
    host = make_grid(GridSpec(2, 3))
    fam = enumerate_windows(host, 2)
    skip = min_strength(host, fam, LabelingKind.VERTEX, k_max=2)
    full = min_strength(host, fam, LabelingKind.VERTEX, k_max=2, start_k=1)
    assert full.nodes_explored > skip.nodes_explored
    assert full.minimal_k == skip.minimal_k == 2
