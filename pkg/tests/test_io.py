import io as stdio
import json

import pytest

from gridirr import (
    CoverFamily,
    Edge,
    FormatError,
    GridSpec,
    LabelingKind,
    Subgraph,
    TotalVariant,
    Vertex,
    construct_edge_labeling,
    construct_total_labeling,
    construct_vertex_labeling,
    enumerate_windows,
    graph_from_elements,
    make_grid,
    verify_irregular,
)
from gridirr.io import (
    dot_export,
    dump_family,
    dump_labeling,
    family_from_json_dict,
    family_to_json_dict,
    graph_from_json_dict,
    graph_to_json_dict,
    labeling_from_json_dict,
    labeling_to_json_dict,
    load_family,
    load_labeling,
)


def roundtrip_labeling(labeling):
    buf = stdio.StringIO()
    dump_labeling(labeling, buf)
    buf.seek(0)
    return load_labeling(buf)


@pytest.mark.parametrize(
    "build",
    [
        lambda: construct_vertex_labeling(2, 4, 2),
        lambda: construct_edge_labeling(2, 4, 2),
        lambda: construct_total_labeling(2, 4, 2),
        lambda: construct_total_labeling(2, 4, 2, TotalVariant.AS_PRINTED),
    ],
)
def test_labeling_roundtrip_is_identical(build):
    original = build()
    restored = roundtrip_labeling(original)
    assert restored.kind == original.kind
    assert restored.k == original.k
    assert (restored.m, restored.n) == (original.m, original.n)
    assert dict(restored.labels) == dict(original.labels)


def test_labeling_json_orders_vertices_then_edges():
    data = labeling_to_json_dict(construct_total_labeling(2, 3, 2))
    tags = [next(iter(entry["element"])) for entry in data["labels"]]
    assert tags == ["v"] * 6 + ["e"] * 7
    vertex_entries = [e["element"]["v"] for e in data["labels"][:6]]
    assert vertex_entries == sorted(vertex_entries)
    edge_entries = [e["element"]["e"] for e in data["labels"][6:]]
    assert edge_entries == sorted(edge_entries)


def test_load_preserves_out_of_range_labels():
    # range enforcement is the verifier's job, not the loader's
    data = labeling_to_json_dict(construct_vertex_labeling(2, 3, 2))
    data["labels"][0]["label"] = 99
    restored = labeling_from_json_dict(data)
    assert 99 in restored.labels.values()


@pytest.mark.parametrize(
    "mutate",
    [
        lambda d: d.pop("kind"),
        lambda d: d.update(kind="diagonal"),
        lambda d: d.update(k=0),
        lambda d: d.update(m="two"),
        lambda d: d.update(labels={"not": "a list"}),
        lambda d: d["labels"].append({"element": {"x": [1, 1]}, "label": 1}),
        lambda d: d["labels"].append({"element": {"v": [0, 1]}, "label": 1}),
        lambda d: d["labels"].append({"element": {"v": [1]}, "label": 1}),
        lambda d: d["labels"].append(dict(d["labels"][0])),
        lambda d: d["labels"].append(
            {"element": {"e": [[1, 1], [1, 1]]}, "label": 1}
        ),
        lambda d: d["labels"][0].update(label="three"),
    ],
)
def test_malformed_labeling_files_rejected(mutate):
    data = labeling_to_json_dict(construct_vertex_labeling(2, 3, 2))
    mutate(data)
    with pytest.raises(FormatError):
        labeling_from_json_dict(data)


def test_load_labeling_rejects_invalid_json():
    with pytest.raises(FormatError):
        load_labeling(stdio.StringIO("{not json"))


def test_family_roundtrip_window_family():
    family = enumerate_windows(make_grid(GridSpec(3, 5)), 3)
    buf = stdio.StringIO()
    dump_family(family, buf)
    buf.seek(0)
    assert load_family(buf) == family


def test_grid_host_uses_shorthand():
    family = enumerate_windows(make_grid(GridSpec(2, 3)), 2)
    data = family_to_json_dict(family)
    assert data["host"] == {"grid": [2, 3]}
    assert len(data["members"]) == 2


def test_non_grid_host_roundtrips_explicitly():
    # triangle via the single-row convention: i = 1, j = ordinal
    a, b, c = Vertex(1, 1), Vertex(1, 2), Vertex(1, 3)
    host = graph_from_elements(
        [a, b, c], [Edge(a, b), Edge(b, c), Edge(a, c)]
    )
    member = Subgraph(vertices=host.vertices, edges=host.edges)
    family = CoverFamily(host=host, members=(member,))
    data = family_to_json_dict(family)
    assert "grid" not in data["host"]
    assert sorted(map(tuple, data["host"]["vertices"])) == [
        (1, 1), (1, 2), (1, 3)
    ]
    restored = family_from_json_dict(json.loads(json.dumps(data)))
    assert restored == family


def test_graph_shorthand_parses():
    g = graph_from_json_dict({"grid": [2, 4]})
    assert g == make_grid(GridSpec(2, 4))
    assert graph_to_json_dict(g) == {"grid": [2, 4]}


@pytest.mark.parametrize(
    "data",
    [
        "not a dict",
        {"host": {"grid": [2, 3]}},
        {"host": {"grid": [0, 3]}, "members": []},
        {"host": {"grid": [2, 3]}, "members": []},
        {"host": {"grid": [2, 3]}, "members": [{"vertices": []}]},
        {"host": {}, "members": [{"vertices": [], "edges": []}]},
    ],
)
def test_malformed_family_files_rejected(data):
    with pytest.raises(FormatError):
        family_from_json_dict(data)


def test_dot_export_plain_grid():
    text = dot_export(make_grid(GridSpec(2, 2)))
    assert text.startswith("graph grid_2x2 {")
    assert text.rstrip().endswith("}")
    lines = text.splitlines()
    node_stmts = [l for l in lines if l.strip().endswith(";") and "--" not in l]
    edge_stmts = [l for l in lines if "--" in l]
    assert len(node_stmts) == 4
    assert len(edge_stmts) == 4


def test_dot_export_with_labels():
    lab = construct_total_labeling(2, 2, 2)
    text = dot_export(make_grid(GridSpec(2, 2)), lab)
    assert "v1_1 [label=1];" in text
    assert "v1_1 -- v1_2 [label=1];" in text


def test_dot_export_vertex_labeling_leaves_edges_bare():
    lab = construct_vertex_labeling(2, 3, 2)
    text = dot_export(make_grid(GridSpec(2, 3)), lab)
    assert "v1_3 [label=2];" in text
    assert "v1_1 -- v1_2;" in text


def test_exported_labeling_verifies_after_reload():
    host = make_grid(GridSpec(2, 5))
    family = enumerate_windows(host, 2)
    lab = construct_edge_labeling(2, 5, 2)
    restored = roundtrip_labeling(lab)
    assert verify_irregular(restored, family).accepted
