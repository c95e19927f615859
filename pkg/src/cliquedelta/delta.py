"""Change-sensitive enumeration of new and subsumed maximal cliques.

One batched update takes the graph from G to G' and reports only the
symmetric difference of the two maximal-clique sets: the newly maximal
cliques and the previously maximal cliques they subsume.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .enumeration import Clique, _ttt_ext_prebuilt, ttt
from .graph import Edge, EdgeBatch, Graph, BatchError
from .signatures import CliqueRegistry, canonical_string, murmur64, signature


@dataclass
class ChangeSet:
    """The two halves of the symmetric difference produced by one update."""

    new_cliques: list[Clique] = field(default_factory=list)
    del_cliques: list[Clique] = field(default_factory=list)

    def total_change_size(self) -> int:
        """Sum of internal edge counts k(k-1)/2 over all changed cliques."""
        return sum(len(c) * (len(c) - 1) // 2
                   for c in self.new_cliques + self.del_cliques)

    def is_empty(self) -> bool:
        return not self.new_cliques and not self.del_cliques


def _require_mode(h: EdgeBatch, mode: str) -> None:
    if h.mode != mode:
        raise BatchError(f"expected {mode}-mode batch, got {h.mode}")


def _edge_adjacency(edges: Iterable[Edge]) -> dict[int, set[int]]:
    adj: dict[int, set[int]] = {}
    for u, v in edges:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    return adj


def _contains_edge(cset: set[int], adj: dict[int, set[int]]) -> bool:
    for v in cset:
        partners = adj.get(v)
        if partners and not partners.isdisjoint(cset):
            return True
    return False


def enum_new(g: Graph, h: EdgeBatch) -> Iterator[Clique]:
    """Enumerate the newly maximal cliques of g + h, each exactly once.

    The batch is validated and applied up front; g holds G+H when this
    returns. Per batch edge, the enumeration runs over the subgraph induced
    by the edge's endpoints and their common neighborhood, suppressing any
    clique that contains an earlier batch edge.
    """
    _require_mode(h, "insert")
    h.validate(g)
    for u, v in h.edges:
        g.add_edge(u, v)

    def generate() -> Iterator[Clique]:
        earlier: dict[int, set[int]] = {}
        for u, v in h.edges:
            v_e = set(g.common_neighbors(u, v))
            v_e.update((u, v))
            sub = g.induced_subgraph(v_e)
            for c in ttt(sub):
                if not _contains_edge(set(c), earlier):
                    yield c
            earlier.setdefault(u, set()).add(v)
            earlier.setdefault(v, set()).add(u)

    return generate()


def enum_new_te(g: Graph, h: EdgeBatch) -> Iterator[Clique]:
    """Same output set as enum_new, but duplicates are never generated.

    Earlier batch edges are passed to the enumerator as excluded edges, so
    a clique spanning several batch edges is built only for the first one.
    """
    _require_mode(h, "insert")
    h.validate(g)
    for u, v in h.edges:
        g.add_edge(u, v)

    def generate() -> Iterator[Clique]:
        excl_adj: dict[int, set[int]] = {}
        for u, v in h.edges:
            cand = set(g.common_neighbors(u, v))
            sub = g.induced_subgraph(cand | {u, v})
            yield from _ttt_ext_prebuilt(sub, [u, v], cand, set(), excl_adj)
            excl_adj.setdefault(u, set()).add(v)
            excl_adj.setdefault(v, set()).add(u)

    return generate()


def split_candidates(c: Clique, h_edges: Iterable[Edge],
                     h_adj: dict[int, set[int]] | None = None) -> Iterator[set[Clique]]:
    """Iteratively split c along its batch edges, yielding the candidate set
    after each split.

    The final set holds exactly the maximal cliques of c with the batch
    edges removed; after processing k edges the set has at most 2^k members.
    h_adj is an optional precomputed adjacency of the batch edges.
    """
    if h_adj is None:
        h_adj = _edge_adjacency(h_edges)
    cset = set(c)
    inside = [(u, v) for u in c if u in h_adj
              for v in h_adj[u] if u < v and v in cset]
    s: set[Clique] = {c}
    yield s
    for u, v in inside:
        nxt: set[Clique] = set()
        for cand in s:
            if u in cand and v in cand:
                nxt.add(tuple(x for x in cand if x != u))
                nxt.add(tuple(x for x in cand if x != v))
            else:
                nxt.add(cand)
        s = nxt
        yield s


def enum_subsumed(g_prime: Graph, h: EdgeBatch, registry: CliqueRegistry,
                  new_cliques: Iterable[Clique]) -> Iterator[Clique]:
    """Enumerate the cliques of the pre-update graph subsumed by new_cliques.

    g_prime is the post-update graph and registry still holds the
    pre-update clique signatures; candidates are accepted by registry
    membership instead of a maximality check. Distinct new cliques can
    regenerate the same candidate, so emission is deduplicated.
    """
    h_adj = _edge_adjacency(h.edges)
    emitted: set[int] = set()
    for c in new_cliques:
        for s in split_candidates(c, h.edges, h_adj):
            final = s
        for cand in final:
            if cand == c:
                continue  # no batch edge inside c' means nothing was split off
            canon = canonical_string(cand)
            sig = signature(cand)
            if sig in emitted:
                continue
            if registry.contains_signature(sig, canon):
                emitted.add(sig)
                yield cand


def iter_insert_batch(g: Graph, h: EdgeBatch, registry: CliqueRegistry,
                      algo: str = "enumnte") -> Iterator[tuple[str, Clique]]:
    """Streaming form of apply_insert_batch.

    Yields ("new", c) and ("del", c) events; new cliques flow straight into
    subsumption splitting without being materialized. The registry is
    committed when the stream is exhausted, so abandoning the iterator
    mid-way leaves the registry at the pre-update state while the graph is
    already mutated.
    """
    if algo == "enumnte":
        new_stream = enum_new_te(g, h)
    elif algo == "enumn":
        new_stream = enum_new(g, h)
    else:
        raise ValueError(f"unknown algorithm {algo!r}")

    def events() -> Iterator[tuple[str, Clique]]:
        new_list: list[Clique] = []
        del_list: list[Clique] = []
        h_adj = _edge_adjacency(h.edges)
        emitted: set[int] = set()
        # interleave: each new clique is reported, then the cliques it subsumes
        for c in new_stream:
            new_list.append(c)
            yield ("new", c)
            for s in split_candidates(c, h.edges, h_adj):
                final = s
            for cand in final:
                if cand == c:
                    continue
                canon = canonical_string(cand)
                sig = murmur64(canon)
                if sig in emitted:
                    continue
                if registry.contains_signature(sig, canon):
                    emitted.add(sig)
                    del_list.append(cand)
                    yield ("del", cand)
        registry.update(new_list, del_list)

    return events()


def apply_insert_batch(g: Graph, h: EdgeBatch, registry: CliqueRegistry,
                       algo: str = "enumnte") -> ChangeSet:
    """Apply an insert batch, returning the change and committing graph and
    registry to the post-update state."""
    change = ChangeSet()
    for kind, c in iter_insert_batch(g, h, registry, algo=algo):
        (change.new_cliques if kind == "new" else change.del_cliques).append(c)
    return change


def _is_maximal(g: Graph, c: Clique) -> bool:
    common: set[int] | None = None
    for v in c:
        nbrs = g.neighbors(v)
        common = set(nbrs) if common is None else common & nbrs
        if not common:
            return True
    return not common


def apply_delete_batch(g: Graph, h: EdgeBatch, registry: CliqueRegistry) -> ChangeSet:
    """Apply a delete batch via the incremental/decremental duality.

    The vanished cliques are exactly the cliques of G containing a deleted
    edge, found by the same per-edge subgraph enumeration run on G itself.
    The cliques that become maximal are their split candidates that are
    maximal in G - H, checked directly against the mutated graph (the
    pre-update registry describes G, not G - H, so registry membership
    cannot decide maximality here).
    """
    _require_mode(h, "delete")
    h.validate(g)

    # cliques of G containing >=1 batch edge, each found exactly once
    del_cliques: list[Clique] = []
    excl_adj: dict[int, set[int]] = {}
    for u, v in h.edges:
        cand = set(g.common_neighbors(u, v))
        sub = g.induced_subgraph(cand | {u, v})
        del_cliques.extend(_ttt_ext_prebuilt(sub, [u, v], cand, set(), excl_adj))
        excl_adj.setdefault(u, set()).add(v)
        excl_adj.setdefault(v, set()).add(u)

    for u, v in h.edges:
        g.remove_edge(u, v)

    h_adj = _edge_adjacency(h.edges)
    new_cliques: list[Clique] = []
    seen: set[Clique] = set()
    for c in del_cliques:
        for s in split_candidates(c, h.edges, h_adj):
            final = s
        for cand in final:
            if cand in seen:
                continue
            seen.add(cand)
            if _is_maximal(g, cand):
                new_cliques.append(cand)

    registry.update(new_cliques, del_cliques)
    return ChangeSet(new_cliques, del_cliques)


def fully_dynamic(g: Graph, inserts: EdgeBatch, deletes: EdgeBatch,
                  registry: CliqueRegistry) -> ChangeSet:
    """Two-phase mixed update: all insertions, then all deletions.

    The returned change is the net symmetric difference between the clique
    sets before and after; cliques created by one phase and destroyed by
    the other cancel out.
    """
    _require_mode(inserts, "insert")
    _require_mode(deletes, "delete")
    if set(inserts.edges) & set(deletes.edges):
        raise BatchError("insert and delete batches overlap")
    deletes.validate(g)
    inserts.validate(g)

    phase1 = apply_insert_batch(g, inserts, registry)
    phase2 = apply_delete_batch(g, deletes, registry)

    n1, d1 = set(phase1.new_cliques), set(phase1.del_cliques)
    n2, d2 = set(phase2.new_cliques), set(phase2.del_cliques)
    net_new = [c for c in phase1.new_cliques if c not in d2]
    net_new += [c for c in phase2.new_cliques if c not in d1]
    net_del = [c for c in phase1.del_cliques if c not in n2]
    net_del += [c for c in phase2.del_cliques if c not in n1]
    return ChangeSet(net_new, net_del)
