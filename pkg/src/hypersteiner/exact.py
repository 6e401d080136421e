"""Exact solvers.

``solve_dw`` runs a subset dynamic program over terminal subsets keyed by
their lowest common ancestors (exponential in the number of terminals).
``oracle_solve`` is an independent ground-truth solver: a classical Steiner
dynamic program over the explicit hypercube DAG, exponential in the
dimension instead.  ``solve_level2`` handles the special case where all
non-root terminals sit at level at most two via an exact vertex cover.
"""

from __future__ import annotations

import numpy as np

from .conflict import min_vertex_cover_exact
from .errors import SolverRefusal
from .instance import Arborescence, Instance
from .nodes import Node

_INF = np.int64(1) << 40


def _single_node_tree(m: int) -> Arborescence:
    return Arborescence.from_int_edges([], m)


def solve_dw(
    inst: Instance, cap: int = 20, stats: dict | None = None
) -> Arborescence:
    """Optimal tree via the subset dynamic program.

    For every terminal subset the optimal cost is the best over nontrivial
    splits of the two halves' costs plus the hamming distances from the
    subset's lowest common ancestor to each half's.  Work grows roughly as
    3^|R|; instances with more than ``cap`` terminals are refused.

    ``stats``, if given, receives ``split_evaluations``: the number of
    table evaluations performed, one per (subset, split) pair examined plus
    one per subset for its base entry.
    """
    if len(inst.terminals) > cap:
        raise SolverRefusal(
            f"{len(inst.terminals)} terminals exceed the subset-DP cap of {cap}; "
            "use an approximation algorithm instead"
        )
    m = inst.m
    terms = sorted(t.bits for t in inst.terminals if t.bits != 0)
    n = len(terms)
    if stats is not None:
        stats.setdefault("split_evaluations", 0)
    if n == 0:
        return _single_node_tree(m)
    full = (1 << n) - 1
    lca_arr = [0] * (full + 1)
    cost = [0] * (full + 1)
    best_split = [0] * (full + 1)
    evals = 0
    for mask in sorted(range(1, full + 1), key=int.bit_count):
        lowest = mask & -mask
        i = lowest.bit_length() - 1
        rest = mask ^ lowest
        lca_arr[mask] = terms[i] if rest == 0 else terms[i] & lca_arr[rest]
        evals += 1  # base entry for this subset
        if rest == 0:
            continue
        lca_mask = lca_arr[mask]
        best = None
        best_x = 0
        s = (rest - 1) & rest  # proper subsets of rest, descending, incl. 0
        while True:
            x = lowest | s
            y = mask ^ x
            c = (
                cost[x]
                + cost[y]
                + (lca_arr[x] ^ lca_mask).bit_count()
                + (lca_arr[y] ^ lca_mask).bit_count()
            )
            evals += 1
            if best is None or c < best or (c == best and x < best_x):
                best = c
                best_x = x
            if s == 0:
                break
            s = (s - 1) & rest
        cost[mask] = best
        best_split[mask] = best_x
    if stats is not None:
        stats["split_evaluations"] += evals

    edges: set[tuple[int, int]] = set()

    def add_path(a: int, b: int) -> None:
        # ascending-index monotone path from a to b (a must be an ancestor)
        diff = b & ~a
        cur = a
        c = 0
        while diff:
            if diff & 1:
                nxt = cur | (1 << c)
                edges.add((cur, nxt))
                cur = nxt
            diff >>= 1
            c += 1

    def expand(mask: int) -> None:
        if mask & (mask - 1) == 0:
            return
        x = best_split[mask]
        y = mask ^ x
        add_path(lca_arr[mask], lca_arr[x])
        add_path(lca_arr[mask], lca_arr[y])
        expand(x)
        expand(y)

    add_path(0, lca_arr[full])
    expand(full)
    arb = Arborescence.from_int_edges(edges, m)
    expected = cost[full] + lca_arr[full].bit_count()
    if arb.cost != expected:
        raise AssertionError(
            f"materialized tree cost {arb.cost} != table cost {expected}"
        )
    return arb


def oracle_solve(
    inst: Instance, max_m: int = 12, max_terminals: int = 9
) -> Arborescence:
    """Provably optimal tree by exhaustive dynamic programming over every
    hypercube vertex.

    State (S, v): minimum cost of a tree rooted at v covering terminal
    subset S.  Subsets are merged at each vertex, then relaxed down the
    cube (one pass per bit computes the min over all descendants plus the
    walking distance).  Kept deliberately distinct from the subset-DP
    recursion so the two can cross-check each other.
    """
    m = inst.m
    n_terms = len(inst.terminals)
    if m > max_m or n_terms > max_terminals:
        raise SolverRefusal(
            f"oracle budget exceeded (m={m} > {max_m} or |R|={n_terms} > "
            f"{max_terminals})"
        )
    terms = sorted(t.bits for t in inst.terminals if t.bits != 0)
    n = len(terms)
    if n == 0:
        return _single_node_tree(m)
    size = 1 << m
    verts = np.arange(size, dtype=np.int64)
    levels = np.zeros(size, dtype=np.int64)
    for c in range(m):
        levels += (verts >> c) & 1
    bit_lo = [np.nonzero(((verts >> c) & 1) == 0)[0] for c in range(m)]

    def relax(arr: np.ndarray) -> np.ndarray:
        # min over descendants w of arr[w] + hamming(v, w)
        out = arr.copy()
        for c in range(m):
            lo = bit_lo[c]
            out[lo] = np.minimum(out[lo], out[lo + (1 << c)] + 1)
        return out

    full = (1 << n) - 1
    dp: list[np.ndarray | None] = [None] * (full + 1)
    for i, t in enumerate(terms):
        arr = np.where((verts & ~t) == 0, t.bit_count() - levels, _INF)
        dp[1 << i] = arr.astype(np.int64)
    for mask in sorted(range(1, full + 1), key=int.bit_count):
        if mask & (mask - 1) == 0:
            continue
        lowest = mask & -mask
        rest = mask ^ lowest
        merged = None
        s = rest
        while True:  # subsets of rest, excluding 0 (x = lowest|s proper)
            x = lowest | s
            y = mask ^ x
            if y:
                cand = dp[x] + dp[y]
                merged = cand if merged is None else np.minimum(merged, cand)
            if s == 0:
                break
            s = (s - 1) & rest
        dp[mask] = relax(merged)

    edges: set[tuple[int, int]] = set()

    def add_path(a: int, b: int) -> None:
        diff = b & ~a
        cur = a
        c = 0
        while diff:
            if diff & 1:
                nxt = cur | (1 << c)
                edges.add((cur, nxt))
                cur = nxt
            diff >>= 1
            c += 1

    def descendants(v: int) -> list[int]:
        free = [c for c in range(m) if not v >> c & 1]
        out = []
        for s in range(1 << len(free)):
            bits = v
            for i, c in enumerate(free):
                if s >> i & 1:
                    bits |= 1 << c
            out.append(bits)
        return out

    def reconstruct(mask: int, v: int) -> None:
        if mask & (mask - 1) == 0:
            t = terms[mask.bit_length() - 1]
            add_path(v, t)
            return
        target = dp[mask][v]
        lowest = mask & -mask
        rest = mask ^ lowest
        for w in sorted(descendants(v), key=lambda b: (b.bit_count(), b)):
            dist = w.bit_count() - v.bit_count()
            s = rest
            while True:
                x = lowest | s
                y = mask ^ x
                if y and dp[x][w] + dp[y][w] + dist == target:
                    add_path(v, w)
                    reconstruct(x, w)
                    reconstruct(y, w)
                    return
                if s == 0:
                    break
                s = (s - 1) & rest
        raise AssertionError("oracle reconstruction failed to find a split")

    reconstruct(full, 0)
    arb = Arborescence.from_int_edges(edges, m)
    if arb.cost != int(dp[full][0]):
        raise AssertionError(
            f"oracle tree cost {arb.cost} != table cost {int(dp[full][0])}"
        )
    return arb


def solve_level2(inst: Instance) -> Arborescence:
    """Exact solver when every non-root terminal is at level at most two.

    Level-2 terminals are edges of a graph on the characters; an exact
    minimum vertex cover of the edges not already covered by level-1
    terminals gives the cheapest set of level-1 nodes, each level-2
    terminal then hangs from one covering level-1 node.
    """
    m = inst.m
    level1: set[int] = set()
    level2: set[int] = set()
    for t in inst.terminals:
        lv = t.bits.bit_count()
        if lv > 2:
            raise ValueError(f"terminal {t} is above level 2")
        if lv == 1:
            level1.add(t.bits)
        elif lv == 2:
            level2.add(t.bits)
    forced = {b.bit_length() - 1 for b in level1}
    pair_edges = set()
    for bits in level2:
        lo = (bits & -bits).bit_length() - 1
        hi = bits.bit_length() - 1
        if lo not in forced and hi not in forced:
            pair_edges.add((lo, hi))
    cover = min_vertex_cover_exact(pair_edges)
    level1_chars = forced | cover
    edges: set[tuple[int, int]] = set()
    for c in sorted(level1_chars):
        edges.add((0, 1 << c))
    for bits in sorted(level2):
        c = min(c for c in level1_chars if bits >> c & 1)
        edges.add((1 << c, bits))
    return Arborescence.from_int_edges(edges, m)
