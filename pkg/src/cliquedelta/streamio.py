"""Edge-list parsing and dynamic-stream generation.

A stream is an initial graph plus an ordered list of insert batches. Both
file formats are plain text; vertices exist only through the edges that
mention them, so a vertex isolated in the initial graph survives a
round-trip only if some batch edge touches it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .graph import Edge, EdgeBatch, Graph, GraphError, normalize_edge


class EdgeListParseError(GraphError):
    pass


class StreamFormatError(GraphError):
    pass


@dataclass
class ParseStats:
    self_loops: int = 0
    duplicates: int = 0


@dataclass(frozen=True)
class StreamConfig:
    retain_prob: float = 0.1
    batch_size: int = 1000
    seed: int = 0
    ordering: str = "random"  # "random" | "high_degree"
    high_degree_k: int = 100

    def __post_init__(self) -> None:
        if not 0.0 <= self.retain_prob <= 1.0:
            raise GraphError(f"retain_prob out of range: {self.retain_prob}")
        if self.batch_size < 1:
            raise GraphError(f"batch_size must be positive: {self.batch_size}")
        if self.ordering not in ("random", "high_degree"):
            raise GraphError(f"unknown ordering {self.ordering!r}")
        if self.high_degree_k < 1:
            raise GraphError(f"high_degree_k must be positive: {self.high_degree_k}")


@dataclass
class EdgeStream:
    initial_graph: Graph
    batches: list[EdgeBatch] = field(default_factory=list)


def parse_edge_list(data: str | bytes, stats: ParseStats | None = None) -> Graph:
    """Parse whitespace-separated integer pairs, one edge per line.

    Lines starting with '#' are comments; duplicates (in either direction)
    and self loops are dropped and counted in stats when given.
    """
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    g = Graph()
    for lineno, line in enumerate(data.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise EdgeListParseError(f"line {lineno}: expected two ids, got {line!r}")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise EdgeListParseError(
                f"line {lineno}: non-integer token in {line!r}") from None
        if u < 0 or v < 0:
            raise EdgeListParseError(f"line {lineno}: negative vertex id")
        if u == v:
            if stats is not None:
                stats.self_loops += 1
            continue
        if g.has_vertex(u) and g.has_vertex(v) and g.has_edge(u, v):
            if stats is not None:
                stats.duplicates += 1
            continue
        g.add_edge(u, v)
    return g


def gen_stream(g: Graph, cfg: StreamConfig) -> EdgeStream:
    """Split g into a retained initial graph and batches of streamed edges.

    Each edge is independently retained with cfg.retain_prob; the rest are
    shuffled (random ordering) or first restricted to edges incident to the
    cfg.high_degree_k highest-degree vertices of the initial graph, then
    shuffled. Identical inputs always yield the identical stream.
    """
    rng = random.Random(cfg.seed)
    initial = Graph()
    for v in sorted(g.vertices()):
        initial.add_vertex(v)
    streamed: list[Edge] = []
    for e in sorted(g.edges()):
        if rng.random() < cfg.retain_prob:
            initial.add_edge(*e)
        else:
            streamed.append(e)

    if cfg.ordering == "high_degree":
        top = sorted(initial.vertices(),
                     key=lambda v: (-initial.degree(v), v))[:cfg.high_degree_k]
        hot = set(top)
        streamed = [e for e in streamed if e[0] in hot or e[1] in hot]
    rng.shuffle(streamed)

    batches = [EdgeBatch.insert(streamed[i:i + cfg.batch_size])
               for i in range(0, len(streamed), cfg.batch_size)]
    return EdgeStream(initial, batches)


def write_stream(stream: EdgeStream) -> str:
    lines = [f"initial {stream.initial_graph.num_edges()}"]
    lines.extend(f"{u} {v}" for u, v in sorted(stream.initial_graph.edges()))
    for batch in stream.batches:
        lines.append(f"batch {len(batch)}")
        lines.extend(f"{u} {v}" for u, v in batch.edges)
    return "\n".join(lines) + "\n"


def read_stream(data: str | bytes) -> EdgeStream:
    """Inverse of write_stream.

    The initial vertex set is reconstructed from every edge in the file, so
    batch insertions never reference unknown vertices.
    """
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    lines = [ln.strip() for ln in data.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("initial "):
        raise StreamFormatError("missing 'initial <count>' header")
    try:
        initial_count = int(lines[0].split()[1])
    except (IndexError, ValueError):
        raise StreamFormatError(f"bad header {lines[0]!r}") from None

    def parse_pair(line: str) -> Edge:
        tokens = line.split()
        if len(tokens) != 2:
            raise StreamFormatError(f"expected edge line, got {line!r}")
        try:
            return normalize_edge(int(tokens[0]), int(tokens[1]))
        except ValueError:
            raise StreamFormatError(f"non-integer token in {line!r}") from None

    pos = 1
    initial_edges = []
    while pos < len(lines) and not lines[pos].startswith("batch "):
        initial_edges.append(parse_pair(lines[pos]))
        pos += 1
    if len(initial_edges) != initial_count:
        raise StreamFormatError(
            f"header declares {initial_count} initial edges, found {len(initial_edges)}")

    batch_edge_lists: list[list[Edge]] = []
    declared: list[int] = []
    while pos < len(lines):
        tokens = lines[pos].split()
        if tokens[0] != "batch" or len(tokens) != 2:
            raise StreamFormatError(f"expected batch separator, got {lines[pos]!r}")
        try:
            declared.append(int(tokens[1]))
        except ValueError:
            raise StreamFormatError(f"bad batch count in {lines[pos]!r}") from None
        batch_edge_lists.append([])
        pos += 1
        while pos < len(lines) and not lines[pos].startswith("batch "):
            batch_edge_lists[-1].append(parse_pair(lines[pos]))
            pos += 1

    for want, got in zip(declared, batch_edge_lists):
        if want != len(got):
            raise StreamFormatError(
                f"batch declares {want} edges, found {len(got)}")

    all_vertices: set[int] = set()
    for u, v in initial_edges:
        all_vertices.update((u, v))
    for edges in batch_edge_lists:
        for u, v in edges:
            all_vertices.update((u, v))
    initial = Graph.from_edges(initial_edges, vertices=all_vertices)
    return EdgeStream(initial, [EdgeBatch.insert(edges) for edges in batch_edge_lists])
