"""Bit-level primitives for vertices of the directed hypercube.

A vertex is an m-bit vector; edges of the directed hypercube flip exactly
one bit from 0 to 1, so all paths run from lower to higher levels (a node's
level is its number of set bits).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True, order=True)
class Node:
    """An m-bit hypercube vertex.

    Bit ``c`` (``bits >> c & 1``) holds the value of character ``c``.  The
    textual form is a '0'/'1' string of length ``m`` with character 0
    leftmost.  Dimensions up to a few thousand bits are fine since the bits
    live in an arbitrary-precision integer.
    """

    bits: int
    m: int

    def __post_init__(self) -> None:
        if self.m < 0:
            raise ValueError("dimension must be non-negative")
        if self.bits < 0 or self.bits >> self.m:
            raise ValueError(
                f"bits 0b{self.bits:b} do not fit in dimension {self.m}"
            )

    @classmethod
    def from_string(cls, s: str) -> "Node":
        bits = 0
        for c, ch in enumerate(s):
            if ch == "1":
                bits |= 1 << c
            elif ch != "0":
                raise ValueError(f"invalid node string {s!r}")
        return cls(bits, len(s))

    def __str__(self) -> str:
        return "".join("1" if self.bits >> c & 1 else "0" for c in range(self.m))

    def __getitem__(self, c: int) -> int:
        if not 0 <= c < self.m:
            raise IndexError(f"character {c} out of range for dimension {self.m}")
        return self.bits >> c & 1


def _check_same_dim(*nodes: Node) -> int:
    dims = {n.m for n in nodes}
    if len(dims) != 1:
        raise ValueError(f"nodes have mismatched dimensions {sorted(dims)}")
    return dims.pop()


def level(n: Node) -> int:
    """Number of set bits of ``n``."""
    return n.bits.bit_count()


def hamming(u: Node, v: Node) -> int:
    """Number of differing bit positions between two same-dimension nodes."""
    _check_same_dim(u, v)
    return (u.bits ^ v.bits).bit_count()


def lca(nodes: Iterable[Node]) -> Node:
    """Lowest common ancestor of a non-empty node set: the bitwise AND."""
    nodes = list(nodes)
    if not nodes:
        raise ValueError("lca of an empty set is undefined")
    m = _check_same_dim(*nodes)
    bits = nodes[0].bits
    for n in nodes[1:]:
        bits &= n.bits
    return Node(bits, m)


def parents(t: Node) -> set[Node]:
    """All nodes obtained by clearing exactly one set bit of ``t``."""
    return {
        Node(t.bits ^ (1 << c), t.m)
        for c in range(t.m)
        if t.bits >> c & 1
    }


def is_ancestor(a: Node, d: Node) -> bool:
    """True iff every set bit of ``a`` is also set in ``d``."""
    _check_same_dim(a, d)
    return a.bits & ~d.bits == 0


def ose(anchor: Node, target: Node, order: Sequence[int] | None = None) -> list[Node]:
    """Monotone path from ``anchor`` to ``target`` flipping the differing
    bits one at a time.

    ``order`` is a character priority sequence; differing characters that
    appear in it are flipped in that order, any remaining ones afterwards in
    ascending index.  With ``order=None`` all flips are ascending.
    """
    m = _check_same_dim(anchor, target)
    if anchor.bits & ~target.bits:
        raise ValueError("anchor is not an ancestor of target")
    diff = target.bits ^ anchor.bits
    chars = [c for c in range(m) if diff >> c & 1]
    if order is not None:
        pos = {c: i for i, c in enumerate(order)}
        fallback = len(pos)
        chars.sort(key=lambda c: (pos.get(c, fallback), c))
    path = [anchor]
    cur = anchor.bits
    for c in chars:
        cur |= 1 << c
        path.append(Node(cur, m))
    return path
