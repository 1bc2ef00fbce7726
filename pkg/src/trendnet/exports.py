"""Graph and tree serialization: DOT, GraphML, and a JSON schema.

All three formats list nodes in canonical order and write weights with 17
significant digits, enough to round-trip IEEE doubles exactly.  JSON is the
only one parsed back (it is the interchange format between CLI stages).
"""

from __future__ import annotations

import json
from xml.sax.saxutils import escape, quoteattr

from .errors import ParseError, UnsupportedFormat
from .network import Edge, SpanningTree, WeightedGraph

FORMATS = ("dot", "graphml", "json")


def _weight(w: float) -> str:
    return format(w, ".17g")


def graph_to_dot(nodes: tuple[str, ...], edges: tuple[Edge, ...]) -> str:
    lines = ["graph trendnet {"]
    for node in nodes:
        lines.append(f'  "{node}";')
    for a, b, w in edges:
        lines.append(f'  "{a}" -- "{b}" [weight={_weight(w)}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_graphml(nodes: tuple[str, ...], edges: tuple[Edge, ...]) -> str:
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<graphml xmlns="http://graphml.graphdrawing.org/xmlns"',
        '         xmlns:xsi="http://www.w3.org/2001/XMLSchema-instance"',
        '         xsi:schemaLocation="http://graphml.graphdrawing.org/xmlns'
        ' http://graphml.graphdrawing.org/xmlns/1.0/graphml.xsd">',
        '  <key id="weight" for="edge" attr.name="weight" attr.type="double"/>',
        '  <graph id="G" edgedefault="undirected">',
    ]
    for node in nodes:
        lines.append(f"    <node id={quoteattr(node)}/>")
    for a, b, w in edges:
        lines.append(
            f"    <edge source={quoteattr(a)} target={quoteattr(b)}>"
            f'<data key="weight">{escape(_weight(w))}</data></edge>'
        )
    lines.append("  </graph>")
    lines.append("</graphml>")
    return "\n".join(lines) + "\n"


def graph_to_json(nodes: tuple[str, ...], edges: tuple[Edge, ...]) -> str:
    doc = {
        "nodes": list(nodes),
        "edges": [{"source": a, "target": b, "weight": w} for a, b, w in edges],
    }
    return json.dumps(doc, indent=2) + "\n"


def export_graph(graph: WeightedGraph | SpanningTree, format: str) -> str:
    """Serialize a graph or tree; format is one of dot | graphml | json."""
    if format == "dot":
        return graph_to_dot(graph.nodes, graph.edges)
    if format == "graphml":
        return graph_to_graphml(graph.nodes, graph.edges)
    if format == "json":
        return graph_to_json(graph.nodes, graph.edges)
    raise UnsupportedFormat(f"unknown graph format {format!r} (have {', '.join(FORMATS)})")


def parse_graph_json(text: str) -> tuple[tuple[str, ...], tuple[Edge, ...]]:
    """Inverse of graph_to_json; returns (nodes, edges)."""
    try:
        doc = json.loads(text)
        nodes = tuple(str(n) for n in doc["nodes"])
        edges = tuple(
            (str(e["source"]), str(e["target"]), float(e["weight"])) for e in doc["edges"]
        )
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as e:
        raise ParseError(f"not a graph JSON document: {e}") from e
    return nodes, edges


def tree_from_json(text: str) -> SpanningTree:
    nodes, edges = parse_graph_json(text)
    return SpanningTree(nodes, edges)


def graph_from_json(text: str) -> WeightedGraph:
    nodes, edges = parse_graph_json(text)
    return WeightedGraph(nodes, edges)
