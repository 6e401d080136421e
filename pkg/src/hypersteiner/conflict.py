"""Character conflicts, conflict graphs and vertex covers.

Two characters conflict when their value pairs over the terminal set
contain all of 01, 10 and 11: no tree can then mutate both exactly once.
With the all-zero root among the terminals this is the classic four-gamete
test.  The characters mutating more than once in any valid tree always form
a vertex cover of the conflict graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .instance import Arborescence, Instance
from .nodes import Node


@dataclass(frozen=True)
class ConflictGraph:
    """Undirected graph on character indices; an edge joins each
    conflicting pair."""

    m: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        for u, v in self.edges:
            if u == v:
                raise ValueError("conflict graph cannot have self-loops")
            if not (0 <= u < v < self.m):
                raise ValueError(f"edge ({u}, {v}) not in canonical form")

    def neighbors(self, c: int) -> set[int]:
        out = set()
        for u, v in self.edges:
            if u == c:
                out.add(v)
            elif v == c:
                out.add(u)
        return out

    @property
    def conflicting_chars(self) -> set[int]:
        out: set[int] = set()
        for u, v in self.edges:
            out.add(u)
            out.add(v)
        return out


def conflicts(terminals: Iterable[Node], u: int, v: int) -> bool:
    """Four-gamete style test: True iff the (t[u], t[v]) pairs over the
    terminals include all three of 01, 10 and 11."""
    if u == v:
        raise ValueError("a character cannot conflict with itself")
    seen = 0
    for t in terminals:
        bu = t.bits >> u & 1
        bv = t.bits >> v & 1
        if bu or bv:
            seen |= 1 << (bu * 2 + bv - 1)
            if seen == 0b111:
                return True
    return False


def build_cg(terminals: Iterable[Node], m: int) -> ConflictGraph:
    """Conflict graph of a terminal set over characters 0..m-1."""
    ts = list(terminals)
    edges = set()
    for u in range(m):
        for v in range(u + 1, m):
            if conflicts(ts, u, v):
                edges.add((u, v))
    return ConflictGraph(m, frozenset(edges))


def vc_2approx(cg: ConflictGraph) -> set[int]:
    """Both endpoints of a greedy maximal matching (edges scanned in
    ascending lexicographic order); at most twice the minimum cover."""
    cover: set[int] = set()
    for u, v in sorted(cg.edges):
        if u not in cover and v not in cover:
            cover.add(u)
            cover.add(v)
    return cover


def _covers(cg: ConflictGraph, vc: set[int]) -> bool:
    return all(u in vc or v in vc for u, v in cg.edges)


def make_minimal(cg: ConflictGraph, vc: set[int]) -> set[int]:
    """Drop redundant members (ascending index scan, repeated to fixpoint)
    so that every remaining member has a neighbor outside the cover."""
    if not _covers(cg, vc):
        raise ValueError("input is not a vertex cover of the conflict graph")
    cover = set(vc)
    changed = True
    while changed:
        changed = False
        for c in sorted(cover):
            if _covers(cg, cover - {c}):
                cover.remove(c)
                changed = True
    return cover


def min_vertex_cover_exact(edges: Iterable[tuple[int, int]]) -> set[int]:
    """Exact minimum vertex cover by include/exclude branching on a
    maximum-degree vertex.  Exponential in the worst case; intended for
    desk-scale graphs."""
    edge_list = [tuple(sorted(e)) for e in edges]

    def solve(remaining: list[tuple[int, int]]) -> set[int]:
        if not remaining:
            return set()
        deg: dict[int, int] = {}
        for u, v in remaining:
            deg[u] = deg.get(u, 0) + 1
            deg[v] = deg.get(v, 0) + 1
        pick = max(sorted(deg), key=lambda c: deg[c])
        # branch 1: pick is in the cover
        rest = [e for e in remaining if pick not in e]
        best = solve(rest) | {pick}
        # branch 2: pick is excluded, so all its neighbors are in
        nbrs = {u if v == pick else v for u, v in remaining if pick in (u, v)}
        rest = [e for e in remaining if not ({e[0], e[1]} & nbrs)]
        alt = solve(rest) | nbrs
        return alt if len(alt) < len(best) else best

    return solve(edge_list)


def perfect_arborescence(inst: Instance) -> Arborescence:
    """Cost-m tree for a conflict-free instance: every character mutates on
    exactly one edge.

    Conflict-freeness makes the characters' 1-sets laminar, so inserting
    each terminal's monotone path (bits ordered by decreasing 1-set size,
    ties ascending) into a prefix-shared tree never repeats a character.
    """
    cg = build_cg(inst.terminals, inst.m)
    if cg.edges:
        raise ValueError("instance has conflicting characters")
    if inst.is_trivial:
        return Arborescence.from_int_edges([], 0)
    sizes = [0] * inst.m
    for t in inst.terminals:
        for c in range(inst.m):
            if t.bits >> c & 1:
                sizes[c] += 1
    edges: set[tuple[int, int]] = set()
    for t in inst.terminals:
        chars = [c for c in range(inst.m) if t.bits >> c & 1]
        chars.sort(key=lambda c: (-sizes[c], c))
        cur = 0
        for c in chars:
            nxt = cur | (1 << c)
            edges.add((cur, nxt))
            cur = nxt
    return Arborescence.from_int_edges(edges, inst.m)
