"""Correlation graph, maximum spanning tree, centrality, and tree branches.

The spanning tree is extracted Kruskal-style: sort edges by descending weight
and grow a forest with union-find.  At the scale this package targets (dozens
of locations, ~1500 edges) asymptotics are irrelevant; the sort order doubles
as the deterministic tie-break, so equal inputs always give equal trees.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .correlation import CorrelationMatrix
from .errors import Disconnected, InvalidMatrix, InvalidValue, LabelMismatch

Edge = tuple[str, str, float]


class UnionFind:
    """Disjoint sets over hashable items, with path compression."""

    def __init__(self, items: Iterable[str]):
        self._parent = {item: item for item in items}
        self._rank = {item: 0 for item in self._parent}

    def find(self, item: str) -> str:
        root = item
        while self._parent[root] != root:
            root = self._parent[root]
        while self._parent[item] != root:
            self._parent[item], item = root, self._parent[item]
        return root

    def union(self, a: str, b: str) -> bool:
        """Merge the sets of a and b; False if they were already joined."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self._rank[ra] < self._rank[rb]:
            ra, rb = rb, ra
        self._parent[rb] = ra
        if self._rank[ra] == self._rank[rb]:
            self._rank[ra] += 1
        return True


def _canonical_edges(nodes: tuple[str, ...], edges: Iterable[Edge]) -> tuple[Edge, ...]:
    known = set(nodes)
    out = []
    seen = set()
    for a, b, w in edges:
        if a == b:
            raise InvalidValue(f"self-loop on {a!r}")
        if a not in known or b not in known:
            raise InvalidValue(f"edge ({a!r}, {b!r}) references an unknown node")
        if not math.isfinite(w):
            raise InvalidValue(f"non-finite weight on ({a!r}, {b!r})")
        if a > b:
            a, b = b, a
        if (a, b) in seen:
            raise InvalidValue(f"duplicate edge ({a!r}, {b!r})")
        seen.add((a, b))
        out.append((a, b, float(w)))
    out.sort(key=lambda e: (e[0], e[1]))
    return tuple(out)


@dataclass(frozen=True)
class WeightedGraph:
    """Undirected weighted graph over geo labels; edges stored with a < b."""

    nodes: tuple[str, ...]
    edges: tuple[Edge, ...]

    def __post_init__(self):
        object.__setattr__(self, "nodes", tuple(self.nodes))
        object.__setattr__(self, "edges", _canonical_edges(self.nodes, self.edges))

    def __len__(self) -> int:
        return len(self.nodes)


@dataclass(frozen=True)
class SpanningTree:
    """Acyclic, connected edge subset covering all nodes."""

    nodes: tuple[str, ...]
    edges: tuple[Edge, ...]

    def __post_init__(self):
        object.__setattr__(self, "nodes", tuple(self.nodes))
        edges = _canonical_edges(self.nodes, self.edges)
        object.__setattr__(self, "edges", edges)
        n = len(self.nodes)
        if len(edges) != n - 1:
            raise Disconnected(f"{len(edges)} edges cannot span {n} nodes (need {n - 1})")
        uf = UnionFind(self.nodes)
        for a, b, _ in edges:
            if not uf.union(a, b):
                raise Disconnected(f"cycle through ({a}, {b})")

    @property
    def total_weight(self) -> float:
        return sum(w for _, _, w in self.edges)

    def __len__(self) -> int:
        return len(self.nodes)

    def neighbors(self, node: str) -> tuple[str, ...]:
        out = []
        for a, b, _ in self.edges:
            if a == node:
                out.append(b)
            elif b == node:
                out.append(a)
        return tuple(sorted(out))


@dataclass(frozen=True)
class CentralityReport:
    """Degree per node within a tree, plus degree/(N-1) for rendering."""

    degrees: dict[str, int]
    normalized: dict[str, float]

    def __len__(self) -> int:
        return len(self.degrees)


@dataclass(frozen=True)
class BranchPartition:
    """Connected components left after removing the hub from a tree."""

    hub: str
    branches: tuple[tuple[str, ...], ...]


def graph_from_matrix(matrix: CorrelationMatrix) -> WeightedGraph:
    """Complete weighted graph with one edge per location pair.

    Negative correlations are carried through as-is; nothing in the pipeline
    assumes non-negative weights.
    """
    n = len(matrix)
    if n < 2:
        raise InvalidMatrix(f"need at least 2 labels, got {n}")
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            edges.append((matrix.labels[i], matrix.labels[j], matrix.rho[i][j]))
    return WeightedGraph(matrix.labels, tuple(edges))


def maximum_spanning_tree(graph: WeightedGraph) -> SpanningTree:
    """Spanning tree of maximal total weight.

    Ties are broken deterministically: edges are taken in (weight descending,
    smaller label, larger label) order, so the result never depends on how the
    input edges happened to be listed.
    """
    if len(graph) < 2:
        raise Disconnected(f"need at least 2 nodes, got {len(graph)}")
    ranked = sorted(graph.edges, key=lambda e: (-e[2], e[0], e[1]))
    uf = UnionFind(graph.nodes)
    chosen = []
    for a, b, w in ranked:
        if uf.union(a, b):
            chosen.append((a, b, w))
            if len(chosen) == len(graph.nodes) - 1:
                break
    if len(chosen) < len(graph.nodes) - 1:
        raise Disconnected(
            f"graph is disconnected: only {len(chosen)} of {len(graph.nodes) - 1} tree edges found"
        )
    return SpanningTree(graph.nodes, tuple(chosen))


def degree_centrality(tree: SpanningTree) -> CentralityReport:
    """Count of tree edges incident to each node."""
    degrees = {node: 0 for node in tree.nodes}
    for a, b, _ in tree.edges:
        degrees[a] += 1
        degrees[b] += 1
    denom = len(tree.nodes) - 1
    normalized = {node: deg / denom for node, deg in degrees.items()}
    return CentralityReport(degrees, normalized)


def extract_branches(tree: SpanningTree) -> BranchPartition:
    """Split a tree into the components hanging off its most connected node.

    The hub is the maximum-degree node (ties go to the lexicographically
    smallest label).  Branches are sorted by size descending, then by their
    smallest member.
    """
    report = degree_centrality(tree)
    hub = min(report.degrees, key=lambda node: (-report.degrees[node], node))

    uf = UnionFind(node for node in tree.nodes if node != hub)
    for a, b, _ in tree.edges:
        if a != hub and b != hub:
            uf.union(a, b)
    groups: dict[str, list[str]] = {}
    for node in tree.nodes:
        if node == hub:
            continue
        groups.setdefault(uf.find(node), []).append(node)
    branches = sorted(
        (tuple(sorted(members)) for members in groups.values()),
        key=lambda branch: (-len(branch), branch[0]),
    )
    return BranchPartition(hub, tuple(branches))


def check_labels_match(tree: SpanningTree, report: CentralityReport) -> None:
    """Raise LabelMismatch unless the report covers exactly the tree's nodes."""
    if set(report.degrees) != set(tree.nodes):
        raise LabelMismatch("centrality report labels differ from tree nodes")
