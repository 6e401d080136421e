"""Partitioning terminal sets by partial character assignments.

A superset is the group of terminals agreeing with an assignment of bits to
some characters; its supernode is the minimum node consistent with the
assignment (assigned bits as given, everything else 0).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .nodes import Node


@dataclass(frozen=True)
class Superset:
    """Terminals agreeing with a partial character assignment."""

    m: int
    assignment: frozenset[tuple[int, int]]
    members: frozenset[Node]

    def __post_init__(self) -> None:
        chars = [c for c, _ in self.assignment]
        if len(chars) != len(set(chars)):
            raise ValueError("assignment repeats a character")
        for c, b in self.assignment:
            for t in self.members:
                if t.bits >> c & 1 != b:
                    raise ValueError(
                        f"member {t} disagrees with assignment ({c}, {b})"
                    )

    @property
    def supernode(self) -> Node:
        bits = 0
        for c, b in self.assignment:
            if b:
                bits |= 1 << c
        return Node(bits, self.m)

    @property
    def assigned_chars(self) -> frozenset[int]:
        return frozenset(c for c, _ in self.assignment)

    @property
    def free_chars(self) -> list[int]:
        assigned = self.assigned_chars
        return [c for c in range(self.m) if c not in assigned]

    def nonconstant_chars(self) -> list[int]:
        """Free characters taking both values among the members."""
        out = []
        for c in self.free_chars:
            vals = {t.bits >> c & 1 for t in self.members}
            if len(vals) == 2:
                out.append(c)
        return out


def partition(
    terminals: Iterable[Node], chars: Iterable[int], m: int
) -> list[Superset]:
    """Group terminals by their bit pattern restricted to ``chars``,
    ordered by supernode value ascending."""
    chars = sorted(set(chars))
    if any(not 0 <= c < m for c in chars):
        raise ValueError("character index out of range")
    groups: dict[tuple[int, ...], set[Node]] = {}
    for t in terminals:
        key = tuple(t.bits >> c & 1 for c in chars)
        groups.setdefault(key, set()).add(t)
    out = [
        Superset(
            m,
            frozenset(zip(chars, key)),
            frozenset(members),
        )
        for key, members in groups.items()
    ]
    out.sort(key=lambda ss: ss.supernode.bits)
    return out


def split(ss: Superset, c: int) -> tuple[Superset, Superset]:
    """Split a superset on character ``c`` into its (c,0) and (c,1)
    children.  The (c,0) child keeps the parent's supernode; the (c,1)
    child's supernode gains bit ``c``, so the connecting supernode edge is a
    unit hypercube edge."""
    if c in ss.assigned_chars:
        raise ValueError(f"character {c} is already assigned")
    zero = frozenset(t for t in ss.members if not t.bits >> c & 1)
    one = frozenset(t for t in ss.members if t.bits >> c & 1)
    if not zero or not one:
        raise ValueError(f"character {c} is constant within the superset")
    return (
        Superset(ss.m, ss.assignment | {(c, 0)}, zero),
        Superset(ss.m, ss.assignment | {(c, 1)}, one),
    )
