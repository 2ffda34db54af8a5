"""JSON documents for graphs and certificates, and one-way DOT export.

Graph documents look like::

    {"vertices": ["a", "r"],
     "edges": [{"id": "e", "ends": [{"v": "a", "sign": "+"}, {"v": "r", "sign": "-"}]}]}

Serialization sorts vertices and edges, so equal graphs give identical bytes.
The order of the two end records is kept: it fixes the slots walks refer to.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .core import BidirectedGraph, Edge, End, Sign, Walk
from .construct import (
    AddRootEdge,
    AlmostStrongTree,
    Base,
    Certificate,
    Contact,
    EarProgram,
    Glue,
    LinearCore,
    ProgramEar,
    SublinearCore,
)
from .errors import GraphError, SchemaError, WalkError

FORMAT = "biradial-certificate"
VERSION = 1


# -- small schema helpers ---------------------------------------------------


def _get(obj: Any, key: str, path: str, kind: type | tuple[type, ...]) -> Any:
    if not isinstance(obj, dict):
        raise SchemaError(path, "expected an object")
    if key not in obj:
        raise SchemaError(f"{path}.{key}" if path else key, "missing")
    val = obj[key]
    if not isinstance(val, kind) or isinstance(val, bool):
        names = kind.__name__ if isinstance(kind, type) else " or ".join(k.__name__ for k in kind)
        raise SchemaError(f"{path}.{key}" if path else key, f"expected {names}, got {type(val).__name__}")
    return val


def _join(path: str, key: str) -> str:
    return f"{path}.{key}" if path else key


def _sign(value: Any, path: str) -> Sign:
    if value not in ("+", "-"):
        raise SchemaError(path, f'sign must be "+" or "-", got {value!r}')
    return Sign(value)


def _str_list(value: Any, path: str) -> list[str]:
    if not isinstance(value, list) or not all(isinstance(x, str) for x in value):
        raise SchemaError(path, "expected a list of strings")
    return value


# -- graphs ------------------------------------------------------------------


def edge_to_json(e: Edge) -> dict:
    return {"id": e.id, "ends": [{"v": end.vertex, "sign": end.sign.value} for end in e.ends]}


def edge_from_json(obj: Any, path: str) -> Edge:
    eid = _get(obj, "id", path, str)
    ends = _get(obj, "ends", path, list)
    if len(ends) != 2:
        raise SchemaError(_join(path, "ends"), f"exactly two end records required, got {len(ends)}")
    parsed = []
    for i, end in enumerate(ends):
        p = f"{_join(path, 'ends')}[{i}]"
        parsed.append(End(_get(end, "v", p, str), _sign(_get(end, "sign", p, str), _join(p, "sign"))))
    return Edge(eid, (parsed[0], parsed[1]))


def graph_to_json(G: BidirectedGraph) -> dict:
    return {"vertices": G.sorted_vertices(), "edges": [edge_to_json(e) for e in G]}


def graph_from_json(obj: Any, path: str = "") -> BidirectedGraph:
    vertices = _str_list(_get(obj, "vertices", path, list), _join(path, "vertices"))
    seen: set[str] = set()
    for i, v in enumerate(vertices):
        if v in seen:
            raise SchemaError(f"{_join(path, 'vertices')}[{i}]", f"duplicate vertex {v!r}")
        seen.add(v)
    edges = _edges_from_json(_get(obj, "edges", path, list), _join(path, "edges"), seen)
    return BidirectedGraph(vertices, edges)


def _edges_from_json(items: list, path: str, vertices: set[str] | None = None) -> list[Edge]:
    out, ids = [], set()
    for i, item in enumerate(items):
        p = f"{path}[{i}]"
        e = edge_from_json(item, p)
        if e.id in ids:
            raise SchemaError(_join(p, "id"), f"duplicate edge id {e.id!r}")
        ids.add(e.id)
        if vertices is not None:
            for j, end in enumerate(e.ends):
                if end.vertex not in vertices:
                    raise SchemaError(f"{p}.ends[{j}].v", f"unknown vertex {end.vertex!r}")
        out.append(e)
    return out


def dumps(obj: dict) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"line {exc.lineno} column {exc.colno}", exc.msg) from None


def parse_graph(text: str) -> BidirectedGraph:
    return graph_from_json(_loads(text))


def serialize_graph(G: BidirectedGraph) -> str:
    return dumps(graph_to_json(G))


def read_graph(path: str | Path) -> BidirectedGraph:
    return parse_graph(Path(path).read_text())


def write_graph(G: BidirectedGraph, path: str | Path) -> None:
    Path(path).write_text(serialize_graph(G))


# -- certificates ------------------------------------------------------------


def _walk_to_json(W: Walk) -> dict:
    return {"terms": list(W.terms), "slots": list(W.slots)}


def _walk_from_json(obj: Any, path: str) -> Walk:
    terms = _str_list(_get(obj, "terms", path, list), _join(path, "terms"))
    slots = _get(obj, "slots", path, list)
    try:
        return Walk(tuple(terms), tuple(slots))
    except WalkError as exc:
        raise SchemaError(path, str(exc)) from None


def _ear_to_json(ear: ProgramEar) -> dict:
    return {
        "kind": ear.kind,
        "grip": ear.grip,
        "walk": _walk_to_json(ear.walk),
        "edges": [edge_to_json(e) for e in ear.edges],
    }


def _ear_from_json(obj: Any, path: str) -> ProgramEar:
    kind = _get(obj, "kind", path, str)
    if kind not in ("simple", "scoop"):
        raise SchemaError(_join(path, "kind"), f"unknown ear kind {kind!r}")
    grip = obj.get("grip")
    if grip is not None and not isinstance(grip, str):
        raise SchemaError(_join(path, "grip"), "expected a string or null")
    walk = _walk_from_json(_get(obj, "walk", path, dict), _join(path, "walk"))
    edges = _edges_from_json(_get(obj, "edges", path, list), _join(path, "edges"))
    return ProgramEar(walk, tuple(edges), kind, grip)


def _alpha_to_json(a: Sign | None) -> str | None:
    return a.value if a is not None else None


def _alpha_from_json(obj: dict, path: str, required: bool = True) -> Sign | None:
    a = obj.get("alpha")
    if a is None and not required:
        return None
    return _sign(a, _join(path, "alpha"))


def _program_to_json(p: EarProgram) -> dict:
    return {
        "kind": "ear_program",
        "root": p.root,
        "alpha": _alpha_to_json(p.alpha),
        "initial": _ear_to_json(p.initial) if p.initial else None,
        "ears": [_ear_to_json(e) for e in p.ears],
    }


def _program_from_json(obj: Any, path: str) -> EarProgram:
    root = _get(obj, "root", path, str)
    initial = obj.get("initial")
    alpha = _alpha_from_json(obj, path, required=initial is not None)
    ears = _get(obj, "ears", path, list)
    return EarProgram(
        root,
        tuple(_ear_from_json(e, f"{_join(path, 'ears')}[{i}]") for i, e in enumerate(ears)),
        _ear_from_json(initial, _join(path, "initial")) if initial is not None else None,
        alpha,
    )


def _node_to_json(node) -> dict:
    if isinstance(node, Base):
        return {"rule": "base", "edge": edge_to_json(node.edge), "program": _program_to_json(node.program)}
    if isinstance(node, AddRootEdge):
        return {"rule": "add_root_edge", "edge": edge_to_json(node.edge), "child": _node_to_json(node.child)}
    if isinstance(node, Glue):
        return {"rule": "glue", "children": [_node_to_json(c) for c in node.children]}
    raise TypeError(f"unknown node {node!r}")


def _node_from_json(obj: Any, path: str):
    rule = _get(obj, "rule", path, str)
    if rule == "base":
        return Base(
            edge_from_json(_get(obj, "edge", path, dict), _join(path, "edge")),
            _program_from_json(_get(obj, "program", path, dict), _join(path, "program")),
        )
    if rule == "add_root_edge":
        return AddRootEdge(
            edge_from_json(_get(obj, "edge", path, dict), _join(path, "edge")),
            _node_from_json(_get(obj, "child", path, dict), _join(path, "child")),
        )
    if rule == "glue":
        kids = _get(obj, "children", path, list)
        return Glue(tuple(_node_from_json(c, f"{_join(path, 'children')}[{i}]") for i, c in enumerate(kids)))
    raise SchemaError(_join(path, "rule"), f"unknown rule {rule!r}")


def certificate_to_json(cert: Certificate, **meta: Any) -> dict:
    """Certificate document; ``meta`` (class, seed, size, ...) is recorded alongside."""
    if isinstance(cert, EarProgram):
        body = _program_to_json(cert)
    elif isinstance(cert, AlmostStrongTree):
        body = {
            "kind": "almost_strong_tree",
            "root": cert.root,
            "alpha": cert.alpha.value,
            "node": _node_to_json(cert.node),
        }
    elif isinstance(cert, LinearCore):
        body = {
            "kind": "linear_core",
            "root": cert.root,
            "alpha": cert.alpha.value,
            "base": graph_to_json(cert.base),
            "contacts": [{"component": sorted(c.component), "edge": edge_to_json(c.edge)} for c in cert.contacts],
            "root_arcs": [edge_to_json(e) for e in cert.root_arcs],
            "added": [edge_to_json(e) for e in cert.added],
        }
    elif isinstance(cert, SublinearCore):
        body = {
            "kind": "sublinear_core",
            "root": cert.root,
            "alpha": cert.alpha.value,
            "base": graph_to_json(cert.base),
            "added": [edge_to_json(e) for e in cert.added],
        }
    else:
        raise TypeError(f"not a certificate: {cert!r}")
    return {"format": FORMAT, "version": VERSION, "meta": meta, "certificate": body}


def certificate_from_json(doc: Any) -> Certificate:
    fmt = _get(doc, "format", "", str)
    if fmt != FORMAT:
        raise SchemaError("format", f"expected {FORMAT!r}, got {fmt!r}")
    if _get(doc, "version", "", int) != VERSION:
        raise SchemaError("version", f"unsupported version {doc['version']}")
    body = _get(doc, "certificate", "", dict)
    path = "certificate"
    kind = _get(body, "kind", path, str)
    if kind not in ("ear_program", "almost_strong_tree", "linear_core", "sublinear_core"):
        raise SchemaError(_join(path, "kind"), f"unknown certificate kind {kind!r}")
    if kind == "ear_program":
        return _program_from_json(body, path)
    root = _get(body, "root", path, str)
    alpha = _alpha_from_json(body, path)
    if kind == "almost_strong_tree":
        return AlmostStrongTree(root, alpha, _node_from_json(_get(body, "node", path, dict), _join(path, "node")))
    if kind in ("linear_core", "sublinear_core"):
        base = graph_from_json(_get(body, "base", path, dict), _join(path, "base"))
        added = tuple(_edges_from_json(_get(body, "added", path, list), _join(path, "added")))
        if kind == "sublinear_core":
            return SublinearCore(root, alpha, base, added)
        contacts = []
        for i, c in enumerate(_get(body, "contacts", path, list)):
            p = f"{path}.contacts[{i}]"
            comp = frozenset(_str_list(_get(c, "component", p, list), _join(p, "component")))
            contacts.append(Contact(comp, edge_from_json(_get(c, "edge", p, dict), _join(p, "edge"))))
        arcs = tuple(_edges_from_json(_get(body, "root_arcs", path, list), _join(path, "root_arcs")))
        return LinearCore(root, alpha, base, tuple(contacts), arcs, added)


def parse_certificate(text: str) -> Certificate:
    return certificate_from_json(_loads(text))


def serialize_certificate(cert: Certificate, **meta: Any) -> str:
    return dumps(certificate_to_json(cert, **meta))


# -- DOT ---------------------------------------------------------------------


def _q(s: str) -> str:
    return json.dumps(s)


def to_dot(G: BidirectedGraph, name: str = "G") -> str:
    """Undirected DOT drawing with each end's sign written next to its vertex."""
    lines = [f"graph {_q(name)} {{"]
    lines += [f"  {_q(v)};" for v in G.sorted_vertices()]
    for e in G:
        (u, su), (v, sv) = e.ends
        lines.append(
            f"  {_q(u)} -- {_q(v)} [label={_q(e.id)}, taillabel={_q(su.value)}, headlabel={_q(sv.value)}];"
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


__all__ = [
    "GraphError",
    "SchemaError",
    "certificate_from_json",
    "certificate_to_json",
    "graph_from_json",
    "graph_to_json",
    "parse_certificate",
    "parse_graph",
    "read_graph",
    "serialize_certificate",
    "serialize_graph",
    "to_dot",
    "write_graph",
]
