"""Instance generators: random terminal sets, graph gadgets and
conflict-free families."""

from __future__ import annotations

import math
import random
from typing import Iterable

from .instance import RawInstance
from .nodes import Node


def random_instance(
    m: int, n_terminals: int, max_level: int | None = None, seed: int = 0
) -> RawInstance:
    """Seeded uniform sample of distinct nodes with level at most
    ``max_level`` (defaults to m)."""
    if max_level is None:
        max_level = m
    max_level = min(max_level, m)
    available = sum(math.comb(m, k) for k in range(max_level + 1))
    if n_terminals > available:
        raise ValueError(
            f"cannot draw {n_terminals} distinct nodes of level <= {max_level} "
            f"in dimension {m} (only {available} exist)"
        )
    rng = random.Random(seed)
    chosen: set[int] = set()
    while len(chosen) < n_terminals:
        bits = rng.getrandbits(m)
        if bits.bit_count() <= max_level:
            chosen.add(bits)
    return RawInstance(m, frozenset(Node(b, m) for b in chosen))


def graph_gadget(edges: Iterable[tuple[int, int]], n: int) -> RawInstance:
    """Hardness gadget: one level-2 terminal per edge of a simple graph on
    vertices 1..n, with exactly the two endpoint bits set."""
    terminals = set()
    for u, v in edges:
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if not (1 <= u <= n and 1 <= v <= n):
            raise ValueError(f"edge ({u}, {v}) outside vertex range 1..{n}")
        terminals.add(Node((1 << (u - 1)) | (1 << (v - 1)), n))
    if not terminals:
        raise ValueError("graph has no edges")
    return RawInstance(n, frozenset(terminals))


def laminar_instance(
    m: int, seed: int = 0, extra_internal: int = 0, complete: bool = False
) -> RawInstance:
    """Conflict-free instance built from a random tree whose edges each
    introduce one fresh character, so no pair of characters ever conflicts.

    Terminals are the construction tree's leaves plus the root (plus
    ``extra_internal`` random internal nodes); every character varies.
    With ``complete=True`` every construction-tree node is a terminal, so
    each terminal has a terminal parent one level up."""
    rng = random.Random(seed)
    chars = list(range(m))
    rng.shuffle(chars)
    nodes = [0]
    parent_of: dict[int, int] = {}
    for c in chars:
        parent = rng.choice(nodes)
        child = parent | (1 << c)
        parent_of[child] = parent
        nodes.append(child)
    if complete:
        terminals = set(nodes)
    else:
        internal = set(parent_of.values())
        leaves = [v for v in nodes if v not in internal]
        terminals = {0, *leaves}
        candidates = [v for v in nodes if v in internal and v != 0]
        rng.shuffle(candidates)
        terminals.update(candidates[:extra_internal])
    return RawInstance(m, frozenset(Node(b, m) for b in terminals))
