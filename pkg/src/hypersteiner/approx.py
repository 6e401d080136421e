"""Approximation algorithms.

``solve_mvc`` zeroes out a minimal vertex cover of the conflict graph,
builds the cost-optimal tree on the remaining conflict-free characters and
re-attaches every terminal with an ordered monotone path; its cost is at
most (1 + 2 q_opt) times optimal.

``solve_mhs`` works level by level: the Steiner nodes one level down are a
hitting set of the current layer's parent sets, computed greedily and by a
take-whole-set rule, keeping the smaller outcome.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

from .conflict import build_cg, make_minimal, perfect_arborescence, vc_2approx
from .instance import Arborescence, Instance
from .nodes import Node, parents

HS_STRATEGIES = ("greedy", "take-all", "best")


def hitting_set(
    family: Sequence[set[Node]], strategy: str = "best"
) -> set[Node]:
    """A set of nodes intersecting every member of ``family``.

    greedy: repeatedly take the element hitting the most uncovered sets
    (ties broken toward the smallest node value) -- logarithmic ratio.
    take-all: walk the family in order and absorb every still-uncovered set
    wholesale -- ratio d when all sets have d elements.
    best: run both, return the smaller.
    """
    if strategy not in HS_STRATEGIES:
        raise ValueError(f"unknown hitting-set strategy {strategy!r}")
    family = list(family)
    if not family:
        return set()
    if any(not s for s in family):
        raise ValueError("family contains an empty set")
    if strategy == "best":
        greedy = hitting_set(family, "greedy")
        take = hitting_set(family, "take-all")
        return greedy if len(greedy) <= len(take) else take
    if strategy == "take-all":
        chosen: set[Node] = set()
        for s in family:
            if not s & chosen:
                chosen |= s
        return chosen
    # greedy
    chosen = set()
    uncovered = [set(s) for s in family]
    while uncovered:
        counts: dict[Node, int] = {}
        for s in uncovered:
            for e in s:
                counts[e] = counts.get(e, 0) + 1
        pick = min(counts, key=lambda e: (-counts[e], e.bits))
        chosen.add(pick)
        uncovered = [s for s in uncovered if pick not in s]
    return chosen


def min_hitting_set_exact(family: Sequence[set[Node]]) -> set[Node]:
    """Smallest hitting set by exhaustive search over the universe.
    Desk-scale only; used as a reference in bound checks."""
    family = list(family)
    if not family:
        return set()
    universe = sorted(set().union(*family), key=lambda n: n.bits)
    for k in range(1, len(universe) + 1):
        for combo in combinations(universe, k):
            cs = set(combo)
            if all(s & cs for s in family):
                return cs
    raise AssertionError("unreachable: the whole universe is a hitting set")


def _prune_leaves(
    edges: set[tuple[int, int]], keep: set[int], root: int = 0
) -> set[int]:
    """Iteratively drop edges into childless nodes outside ``keep``."""
    edges_left = set(edges)
    while True:
        out_deg: dict[int, int] = {}
        for u, _ in edges_left:
            out_deg[u] = out_deg.get(u, 0) + 1
        removable = [
            (u, v)
            for u, v in edges_left
            if v not in keep and not out_deg.get(v) and v != root
        ]
        if not removable:
            return edges_left
        edges_left -= set(removable)


def solve_level_slice(
    m: int, terminals_at_k: Iterable[Node], strategy: str = "best"
) -> Arborescence:
    """Tree spanning terminals that all share one level k >= 2.

    Steiner layers are built bottom-up: each layer is a hitting set of the
    parent sets of the layer above, down to level 1, which hangs off the
    root.  Every covered node receives exactly one in-edge, from its
    smallest covering parent.
    """
    layer = sorted(set(terminals_at_k), key=lambda n: n.bits)
    if not layer:
        raise ValueError("terminal set must be non-empty")
    ks = {t.bits.bit_count() for t in layer}
    if len(ks) != 1:
        raise ValueError("terminals must all share one level")
    k = ks.pop()
    if k < 2:
        raise ValueError("slice solver requires level at least 2")
    edges: set[tuple[int, int]] = set()
    terminal_bits = {t.bits for t in layer}
    for i in range(k - 1, 0, -1):
        family = [parents(t) for t in layer]
        hit = hitting_set(family, strategy)
        for t in layer:
            parent = min(
                (p for p in parents(t) if p in hit), key=lambda n: n.bits
            )
            edges.add((parent.bits, t.bits))
        layer = sorted(hit, key=lambda n: n.bits)
    for s in layer:
        edges.add((0, s.bits))
    edges = _prune_leaves(edges, terminal_bits)
    return Arborescence.from_int_edges(edges, m)


def solve_mhs(inst: Instance, strategy: str = "best") -> Arborescence:
    """Hitting-set based solver for terminals at arbitrary levels.

    Terminals whose parent is itself a terminal are chained directly
    (descending level sweep); survivors are partitioned by level and each
    level solved as a slice, then the slices are merged, keeping for every
    node the in-edge from the lowest-level slice, and non-terminal leaves
    are pruned."""
    if inst.is_trivial:
        return Arborescence.from_int_edges([], 0)
    m = inst.m
    terminal_bits = {t.bits for t in inst.terminals}
    # (priority, edge); sweep edges take priority 0, slices their level k
    candidates: list[tuple[int, tuple[int, int]]] = []
    survivors: list[Node] = []
    for t in sorted(
        (t for t in inst.terminals if t.bits),
        key=lambda n: (-n.bits.bit_count(), n.bits),
    ):
        terminal_parents = [
            p for p in parents(t) if p.bits in terminal_bits
        ]
        if terminal_parents:
            p = min(terminal_parents, key=lambda n: n.bits)
            candidates.append((0, (p.bits, t.bits)))
        else:
            survivors.append(t)
    by_level: dict[int, list[Node]] = {}
    for t in survivors:
        by_level.setdefault(t.bits.bit_count(), []).append(t)
    for k in sorted(by_level):
        # level-1 survivors cannot exist: the root is their terminal parent
        slice_tree = solve_level_slice(m, by_level[k], strategy)
        for u, v in slice_tree.edges:
            candidates.append((k, (u.bits, v.bits)))
    best_in_edge: dict[int, tuple[int, int]] = {}
    for prio, (u, v) in sorted(candidates):
        if v not in best_in_edge:
            best_in_edge[v] = (prio, u)
    edges = {(u, v) for v, (_, u) in best_in_edge.items()}
    edges = _prune_leaves(edges, terminal_bits)
    return Arborescence.from_int_edges(edges, m)


def solve_mvc(inst: Instance) -> Arborescence:
    """Vertex-cover based solver with ratio 1 + 2 q_opt.

    A minimal vertex cover of the conflict graph marks the characters
    allowed to mutate more than once.  Zeroing them leaves a conflict-free
    instance solved at cost m - |VC|; each original terminal is then
    reattached to its projection by flipping its cover bits in ascending
    order."""
    if inst.is_trivial:
        return Arborescence.from_int_edges([], 0)
    m = inst.m
    cg = build_cg(inst.terminals, m)
    vc = make_minimal(cg, vc_2approx(cg))
    vc_mask = 0
    for c in vc:
        vc_mask |= 1 << c
    free = [c for c in range(m) if not vc_mask >> c & 1]

    def project(bits: int) -> int:
        out = 0
        for i, c in enumerate(free):
            if bits >> c & 1:
                out |= 1 << i
        return out

    def embed(bits: int) -> int:
        out = 0
        for i, c in enumerate(free):
            if bits >> i & 1:
                out |= 1 << c
        return out

    reduced = Instance.from_terminals(
        len(free), {Node(project(t.bits), len(free)) for t in inst.terminals}
    )
    skeleton = perfect_arborescence(reduced)
    edges = {(embed(u.bits), embed(v.bits)) for u, v in skeleton.edges}
    for t in inst.terminals:
        anchor = t.bits & ~vc_mask
        cur = anchor
        for c in sorted(vc):
            if t.bits >> c & 1:
                nxt = cur | (1 << c)
                edges.add((cur, nxt))
                cur = nxt
    return Arborescence.from_int_edges(edges, m)
