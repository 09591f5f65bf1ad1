"""Hypergraphs, their bipartite incidence (Levi) graphs, and DOT export."""

from __future__ import annotations

from dataclasses import dataclass


class Hypergraph:
    """A vertex set 0..num_vertices-1 plus an ordered multiset of hyperedges.

    Edges are kept in input order and never deduplicated: multiplicity is a
    quantity of interest downstream.
    """

    __slots__ = ("num_vertices", "edges")

    def __init__(self, num_vertices: int, edges):
        if num_vertices < 0:
            raise ValueError("vertex count must be nonnegative")
        norm = []
        for e in edges:
            vs = tuple(sorted(set(int(v) for v in e)))
            if not vs:
                raise ValueError("hyperedges must be non-empty")
            if vs[0] < 0 or vs[-1] >= num_vertices:
                raise ValueError(f"edge {vs} mentions a vertex outside 0..{num_vertices - 1}")
            norm.append(vs)
        self.num_vertices = num_vertices
        self.edges: tuple[tuple[int, ...], ...] = tuple(norm)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Hypergraph)
            and self.num_vertices == other.num_vertices
            and self.edges == other.edges
        )

    def __repr__(self) -> str:
        return f"Hypergraph({self.num_vertices} vertices, {self.num_edges} edges)"


@dataclass(frozen=True)
class LeviGraph:
    """Bipartite incidence graph: (v, e) pairs with v a vertex index and e
    an edge position in the source hypergraph's edge list."""

    left_count: int
    right_count: int
    pairs: tuple[tuple[int, int], ...]

    def vertex_degree(self, v: int) -> int:
        return sum(1 for (u, _) in self.pairs if u == v)

    def edge_degree(self, e: int) -> int:
        return sum(1 for (_, j) in self.pairs if j == e)


def levi_graph(hg: Hypergraph) -> LeviGraph:
    """Incidence pairs (v, e) for every v in edge e, ordered by (e, v)."""
    pairs = tuple((v, j) for j, edge in enumerate(hg.edges) for v in edge)
    return LeviGraph(hg.num_vertices, hg.num_edges, pairs)


def levi_dot(lg: LeviGraph) -> str:
    """Deterministic Graphviz text: filled circles v1..vN on the vertex
    side, squares e1..eM on the hyperedge side."""
    lines = ["graph levi {"]
    for v in range(lg.left_count):
        lines.append(f'  v{v + 1} [shape=circle, style=filled, label="v{v + 1}"];')
    for e in range(lg.right_count):
        lines.append(f'  e{e + 1} [shape=square, label="e{e + 1}"];')
    for v, e in sorted(lg.pairs, key=lambda p: (p[1], p[0])):
        lines.append(f"  v{v + 1} -- e{e + 1};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def hypergraph_to_dict(hg: Hypergraph) -> dict:
    return {"vertices": hg.num_vertices, "edges": [list(e) for e in hg.edges]}


def hypergraph_from_dict(data: dict) -> Hypergraph:
    if not isinstance(data, dict) or "vertices" not in data or "edges" not in data:
        raise ValueError('hypergraph JSON must have "vertices" and "edges" fields')
    return Hypergraph(int(data["vertices"]), data["edges"])
