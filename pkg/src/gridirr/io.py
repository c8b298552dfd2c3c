"""JSON file formats and DOT export.

Labeling files::

    {
      "kind": "vertex" | "edge" | "total",
      "k": 2,
      "m": 2,
      "n": 3,
      "labels": [
        {"element": {"v": [1, 1]}, "label": 1},
        {"element": {"e": [[1, 1], [1, 2]]}, "label": 1},
        ...
      ]
    }

    Vertex entries come first in row-major order, then edges in canonical
    order.  Labels are not range-checked on load; out-of-range labels are
    the verifier's to report.

Family files::

    {
      "host": {"grid": [2, 3]},
      "members": [
        {"vertices": [[1, 1], ...], "edges": [[[1, 1], [1, 2]], ...]},
        ...
      ]
    }

    The host is either a grid shorthand {"grid": [m, n]} or an explicit
    graph {"vertices": [...], "edges": [...]}.  Non-grid hosts embed their
    vertex ids in the same (i, j) scheme, conventionally in a single row
    (i = 1, j = ordinal).

DOT output is export-only (never parsed back): element labels become
``label`` attributes; anything else rides in comments.
"""

from __future__ import annotations

import json
from typing import Any, IO, Optional

from .construct import Labeling, LabelingKind
from .covering import CoverFamily, Subgraph
from .errors import FormatError
from .grid import (
    Edge,
    Graph,
    GridSpec,
    Vertex,
    graph_from_elements,
    grid_dims,
    make_grid,
)


def _vertex_to_json(v: Vertex) -> list[int]:
    return [v.i, v.j]


def _edge_to_json(e: Edge) -> list[list[int]]:
    return [_vertex_to_json(e.a), _vertex_to_json(e.b)]


def _vertex_from_json(data: Any, where: str) -> Vertex:
    if (
        not isinstance(data, list)
        or len(data) != 2
        or not all(isinstance(x, int) and not isinstance(x, bool) for x in data)
    ):
        raise FormatError(f"{where}: expected a vertex as [i, j], got {data!r}")
    if data[0] < 1 or data[1] < 1:
        raise FormatError(f"{where}: vertex indices must be >= 1, got {data!r}")
    return Vertex(data[0], data[1])


def _edge_from_json(data: Any, where: str) -> Edge:
    if not isinstance(data, list) or len(data) != 2:
        raise FormatError(
            f"{where}: expected an edge as [[i, j], [i, j]], got {data!r}"
        )
    a = _vertex_from_json(data[0], where)
    b = _vertex_from_json(data[1], where)
    if a == b:
        raise FormatError(f"{where}: edge endpoints are equal: {data!r}")
    return Edge(a, b)


def labeling_to_json_dict(labeling: Labeling) -> dict[str, Any]:
    vertices = sorted(e for e in labeling.labels if isinstance(e, Vertex))
    edges = sorted(e for e in labeling.labels if isinstance(e, Edge))
    entries: list[dict[str, Any]] = []
    for v in vertices:
        entries.append(
            {"element": {"v": _vertex_to_json(v)}, "label": labeling.labels[v]}
        )
    for e in edges:
        entries.append(
            {"element": {"e": _edge_to_json(e)}, "label": labeling.labels[e]}
        )
    return {
        "kind": labeling.kind.value,
        "k": labeling.k,
        "m": labeling.m,
        "n": labeling.n,
        "labels": entries,
    }


def labeling_from_json_dict(data: Any) -> Labeling:
    if not isinstance(data, dict):
        raise FormatError("labeling file must contain a JSON object")
    for field in ("kind", "k", "m", "n", "labels"):
        if field not in data:
            raise FormatError(f"labeling file is missing the {field!r} field")
    try:
        kind = LabelingKind(data["kind"])
    except ValueError:
        raise FormatError(f"unknown labeling kind {data['kind']!r}") from None
    k, m, n = data["k"], data["m"], data["n"]
    for name, value in (("k", k), ("m", m), ("n", n)):
        if not isinstance(value, int) or isinstance(value, bool) or value < 1:
            raise FormatError(f"{name!r} must be a positive integer, got {value!r}")
    if not isinstance(data["labels"], list):
        raise FormatError("'labels' must be a list of entries")
    labels: dict[Any, int] = {}
    for pos, entry in enumerate(data["labels"]):
        where = f"labels[{pos}]"
        if not isinstance(entry, dict) or set(entry) != {"element", "label"}:
            raise FormatError(
                f"{where}: expected {{'element': ..., 'label': ...}}"
            )
        element_obj = entry["element"]
        if not isinstance(element_obj, dict) or len(element_obj) != 1:
            raise FormatError(
                f"{where}: element must be {{'v': [i, j]}} or "
                f"{{'e': [[i, j], [i, j]]}}"
            )
        ((tag, payload),) = element_obj.items()
        if tag == "v":
            element = _vertex_from_json(payload, where)
        elif tag == "e":
            element = _edge_from_json(payload, where)
        else:
            raise FormatError(f"{where}: unknown element tag {tag!r}")
        label = entry["label"]
        if not isinstance(label, int) or isinstance(label, bool):
            raise FormatError(f"{where}: label must be an integer, got {label!r}")
        if element in labels:
            raise FormatError(f"{where}: duplicate element {element}")
        labels[element] = label
    return Labeling(kind=kind, k=k, labels=labels, m=m, n=n)


def dump_labeling(labeling: Labeling, fp: IO[str]) -> None:
    json.dump(labeling_to_json_dict(labeling), fp, indent=2)
    fp.write("\n")


def load_labeling(fp: IO[str]) -> Labeling:
    try:
        data = json.load(fp)
    except json.JSONDecodeError as exc:
        raise FormatError(f"not valid JSON: {exc}") from None
    return labeling_from_json_dict(data)


def _is_full_grid(graph: Graph) -> bool:
    m, n = grid_dims(graph)
    return graph == make_grid(GridSpec(m, n))


def graph_to_json_dict(graph: Graph) -> dict[str, Any]:
    if graph.vertices and _is_full_grid(graph):
        m, n = grid_dims(graph)
        return {"grid": [m, n]}
    return {
        "vertices": [_vertex_to_json(v) for v in graph.sorted_vertices()],
        "edges": [_edge_to_json(e) for e in graph.sorted_edges()],
    }


def graph_from_json_dict(data: Any, where: str = "host") -> Graph:
    if not isinstance(data, dict):
        raise FormatError(f"{where}: expected a JSON object")
    if "grid" in data:
        shape = data["grid"]
        if (
            not isinstance(shape, list)
            or len(shape) != 2
            or not all(isinstance(x, int) and x >= 1 for x in shape)
        ):
            raise FormatError(
                f"{where}: 'grid' must be [m, n] with positive integers"
            )
        return make_grid(GridSpec(shape[0], shape[1]))
    if "vertices" not in data or "edges" not in data:
        raise FormatError(
            f"{where}: expected {{'grid': [m, n]}} or explicit "
            f"'vertices' and 'edges' lists"
        )
    vertices = [
        _vertex_from_json(v, f"{where}.vertices[{i}]")
        for i, v in enumerate(data["vertices"])
    ]
    edges = [
        _edge_from_json(e, f"{where}.edges[{i}]")
        for i, e in enumerate(data["edges"])
    ]
    return graph_from_elements(vertices, edges)


def family_to_json_dict(family: CoverFamily) -> dict[str, Any]:
    members = []
    for member in family.members:
        members.append(
            {
                "vertices": [
                    _vertex_to_json(v) for v in member.sorted_vertices()
                ],
                "edges": [_edge_to_json(e) for e in member.sorted_edges()],
            }
        )
    return {"host": graph_to_json_dict(family.host), "members": members}


def family_from_json_dict(data: Any) -> CoverFamily:
    if not isinstance(data, dict):
        raise FormatError("family file must contain a JSON object")
    if "host" not in data or "members" not in data:
        raise FormatError("family file needs 'host' and 'members' fields")
    host = graph_from_json_dict(data["host"])
    if not isinstance(data["members"], list) or not data["members"]:
        raise FormatError("'members' must be a nonempty list")
    members = []
    for pos, raw in enumerate(data["members"]):
        where = f"members[{pos}]"
        if (
            not isinstance(raw, dict)
            or "vertices" not in raw
            or "edges" not in raw
        ):
            raise FormatError(
                f"{where}: expected 'vertices' and 'edges' lists"
            )
        vertices = frozenset(
            _vertex_from_json(v, f"{where}.vertices[{i}]")
            for i, v in enumerate(raw["vertices"])
        )
        edges = frozenset(
            _edge_from_json(e, f"{where}.edges[{i}]")
            for i, e in enumerate(raw["edges"])
        )
        members.append(Subgraph(vertices=vertices, edges=edges))
    return CoverFamily(host=host, members=tuple(members))


def dump_family(family: CoverFamily, fp: IO[str]) -> None:
    json.dump(family_to_json_dict(family), fp, indent=2)
    fp.write("\n")


def load_family(fp: IO[str]) -> CoverFamily:
    try:
        data = json.load(fp)
    except json.JSONDecodeError as exc:
        raise FormatError(f"not valid JSON: {exc}") from None
    return family_from_json_dict(data)


def _node_id(v: Vertex) -> str:
    return f"v{v.i}_{v.j}"


def dot_export(graph: Graph, labeling: Optional[Labeling] = None) -> str:
    """Render the graph in DOT, labels (when given) as element attributes."""
    m, n = grid_dims(graph)
    lines = [f"graph grid_{m}x{n} {{"]
    lines.append(f"  // {m} rows x {n} columns")
    if labeling is not None:
        lines.append(
            f"  // {labeling.kind.value} labeling, budget k={labeling.k}"
        )
    for v in graph.sorted_vertices():
        if labeling is not None and v in labeling.labels:
            lines.append(f"  {_node_id(v)} [label={labeling.labels[v]}];")
        else:
            lines.append(f"  {_node_id(v)};")
    for e in graph.sorted_edges():
        stmt = f"  {_node_id(e.a)} -- {_node_id(e.b)}"
        if labeling is not None and e in labeling.labels:
            stmt += f" [label={labeling.labels[e]}]"
        lines.append(stmt + ";")
    lines.append("}")
    return "\n".join(lines) + "\n"
