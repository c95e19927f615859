"""Mutable undirected simple graph with set-based adjacency."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

Edge = tuple[int, int]


class GraphError(Exception):
    pass


class SelfLoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class MissingEdgeError(GraphError):
    pass


class MissingVertexError(GraphError):
    pass


class BatchError(GraphError):
    pass


def normalize_edge(u: int, v: int) -> Edge:
    """Return the edge as an ordered pair, rejecting self loops."""
    if u == v:
        raise SelfLoopError(f"self loop ({u},{v})")
    if u < 0 or v < 0:
        raise GraphError(f"negative vertex id in ({u},{v})")
    return (u, v) if u < v else (v, u)


class Graph:
    """Undirected simple graph over non-negative integer vertex ids.

    Isolated vertices are first-class: they survive edge removal and count
    as maximal cliques of size one.
    """

    __slots__ = ("_adj", "_num_edges")

    def __init__(self) -> None:
        self._adj: dict[int, set[int]] = {}
        self._num_edges = 0

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]],
                   vertices: Iterable[int] = ()) -> "Graph":
        g = cls()
        for v in vertices:
            g.add_vertex(v)
        for u, v in edges:
            g.add_edge(u, v)
        return g

    # -- vertices ------------------------------------------------------

    def add_vertex(self, v: int) -> None:
        if v < 0:
            raise GraphError(f"negative vertex id {v}")
        self._adj.setdefault(v, set())

    def has_vertex(self, v: int) -> bool:
        return v in self._adj

    def vertices(self) -> Iterator[int]:
        return iter(self._adj)

    def num_vertices(self) -> int:
        return len(self._adj)

    def neighbors(self, v: int) -> set[int]:
        try:
            return self._adj[v]
        except KeyError:
            raise MissingVertexError(f"unknown vertex {v}") from None

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    # -- edges ---------------------------------------------------------

    def add_edge(self, u: int, v: int) -> None:
        u, v = normalize_edge(u, v)
        if v in self._adj.get(u, ()):
            raise DuplicateEdgeError(f"edge ({u},{v}) already present")
        self._adj.setdefault(u, set()).add(v)
        self._adj.setdefault(v, set()).add(u)
        self._num_edges += 1

    def remove_edge(self, u: int, v: int) -> None:
        u, v = normalize_edge(u, v)
        if v not in self._adj.get(u, ()):
            raise MissingEdgeError(f"edge ({u},{v}) not present")
        self._adj[u].discard(v)
        self._adj[v].discard(u)
        self._num_edges -= 1

    def has_edge(self, u: int, v: int) -> bool:
        u, v = normalize_edge(u, v)
        return v in self._adj.get(u, ())

    def num_edges(self) -> int:
        return self._num_edges

    def edges(self) -> Iterator[Edge]:
        for u, nbrs in self._adj.items():
            for v in nbrs:
                if u < v:
                    yield (u, v)

    # -- queries -------------------------------------------------------

    def common_neighbors(self, u: int, v: int) -> list[int]:
        """Sorted intersection of the two neighborhoods, excluding u and v."""
        common = self.neighbors(u) & self.neighbors(v)
        common.discard(u)
        common.discard(v)
        return sorted(common)

    def induced_subgraph(self, vs: Iterable[int]) -> "Graph":
        keep = set(vs)
        for v in keep:
            if v not in self._adj:
                raise MissingVertexError(f"unknown vertex {v}")
        sub = Graph()
        for v in keep:
            sub._adj[v] = self._adj[v] & keep
        sub._num_edges = sum(len(n) for n in sub._adj.values()) // 2
        return sub

    def copy(self) -> "Graph":
        g = Graph()
        g._adj = {v: set(n) for v, n in self._adj.items()}
        g._num_edges = self._num_edges
        return g

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __repr__(self) -> str:
        return f"Graph(n={self.num_vertices()}, m={self.num_edges()})"


@dataclass(frozen=True)
class EdgeBatch:
    """Ordered list of normalized edges applied as one update.

    The order of ``edges`` is significant: it is the processing order used
    by the incremental enumerators.
    """

    edges: tuple[Edge, ...]
    mode: str = "insert"  # "insert" | "delete"

    def __post_init__(self) -> None:
        if self.mode not in ("insert", "delete"):
            raise BatchError(f"unknown batch mode {self.mode!r}")
        norm = tuple(normalize_edge(u, v) for u, v in self.edges)
        if len(set(norm)) != len(norm):
            raise BatchError("duplicate edge in batch")
        object.__setattr__(self, "edges", norm)

    @classmethod
    def insert(cls, edges: Iterable[tuple[int, int]]) -> "EdgeBatch":
        return cls(tuple(edges), "insert")

    @classmethod
    def delete(cls, edges: Iterable[tuple[int, int]]) -> "EdgeBatch":
        return cls(tuple(edges), "delete")

    def __len__(self) -> int:
        return len(self.edges)

    def validate(self, g: Graph) -> None:
        """Check the batch against its base graph before any mutation."""
        for u, v in self.edges:
            if self.mode == "insert":
                if g.has_vertex(u) and g.has_vertex(v) and g.has_edge(u, v):
                    raise BatchError(f"insert batch edge ({u},{v}) already in graph")
            else:
                if not (g.has_vertex(u) and g.has_vertex(v) and g.has_edge(u, v)):
                    raise BatchError(f"delete batch edge ({u},{v}) not in graph")
