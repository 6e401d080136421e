"""Problem instances, normalization, arborescences and validation.

An instance is a terminal set on a directed hypercube.  Normalization drops
characters that are constant across all terminals (recording them so
solutions can be lifted back) and inserts the all-zero root into the
terminal set, after which every remaining character takes both values
somewhere in the terminal set.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .nodes import Node, hamming, lca, level


@dataclass(frozen=True)
class RawInstance:
    """A terminal set as supplied by the user: dimension plus nodes."""

    m: int
    terminals: frozenset[Node]

    def __post_init__(self) -> None:
        if not self.terminals:
            raise ValueError("terminal set must be non-empty")
        for t in self.terminals:
            if t.m != self.m:
                raise ValueError(
                    f"terminal {t} has dimension {t.m}, expected {self.m}"
                )

    @classmethod
    def from_nodes(cls, m: int, nodes: Iterable[Node]) -> "RawInstance":
        return cls(m, frozenset(nodes))

    @classmethod
    def from_strings(cls, strings: Iterable[str]) -> "RawInstance":
        nodes = frozenset(Node.from_string(s) for s in strings)
        m = next(iter(nodes)).m
        return cls(m, nodes)


@dataclass(frozen=True)
class NormalizationRecord:
    """How a raw instance was reduced, so solutions can be lifted back.

    ``position_map[i]`` is the original index of reduced character ``i``.
    """

    original_m: int
    dropped_zero: frozenset[int]
    dropped_one: frozenset[int]
    position_map: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.dropped_zero & self.dropped_one:
            raise ValueError("a character cannot be both constant-0 and constant-1")
        expected = self.original_m - len(self.dropped_zero) - len(self.dropped_one)
        if len(self.position_map) != expected:
            raise ValueError("position map inconsistent with dropped characters")

    @classmethod
    def identity(cls, m: int) -> "NormalizationRecord":
        return cls(m, frozenset(), frozenset(), tuple(range(m)))

    @property
    def is_identity(self) -> bool:
        return not self.dropped_zero and not self.dropped_one


@dataclass(frozen=True)
class Instance:
    """A normalized instance: every character varies and the root is a
    terminal, so the all-zero node is the lowest common ancestor of the
    terminal set."""

    m: int
    terminals: frozenset[Node]
    record: NormalizationRecord

    @property
    def root(self) -> Node:
        return Node(0, self.m)

    @property
    def is_trivial(self) -> bool:
        return self.m == 0

    def as_raw(self) -> RawInstance:
        return RawInstance(self.m, self.terminals)

    @classmethod
    def from_terminals(cls, m: int, terminals: Iterable[Node]) -> "Instance":
        """Wrap an already-normalized terminal set (root added if absent)."""
        ts = frozenset(terminals) | {Node(0, m)}
        return cls(m, ts, NormalizationRecord.identity(m))


@dataclass(frozen=True)
class Arborescence:
    """A rooted out-tree whose edges are unit hypercube edges."""

    root: Node
    edges: frozenset[tuple[Node, Node]]

    @property
    def m(self) -> int:
        return self.root.m

    @property
    def cost(self) -> int:
        return len(self.edges)

    @property
    def nodes(self) -> frozenset[Node]:
        ns = {self.root}
        for u, v in self.edges:
            ns.add(u)
            ns.add(v)
        return frozenset(ns)

    def penalty(self, m: int | None = None) -> int:
        return self.cost - (self.m if m is None else m)

    def steiner_count(self, terminals: Iterable[Node]) -> int:
        ts = set(terminals)
        return sum(1 for n in self.nodes if n not in ts)

    def mutation_counts(self) -> dict[int, int]:
        """How many tree edges flip each character."""
        counts: dict[int, int] = {}
        for u, v in self.edges:
            c = (u.bits ^ v.bits).bit_length() - 1
            counts[c] = counts.get(c, 0) + 1
        return counts

    @classmethod
    def from_int_edges(
        cls, edges: Iterable[tuple[int, int]], m: int, root_bits: int = 0
    ) -> "Arborescence":
        es = frozenset((Node(u, m), Node(v, m)) for u, v in edges)
        return cls(Node(root_bits, m), es)


def normalize(raw: RawInstance) -> Instance:
    """Drop constant characters, dedupe terminals and insert the root.

    An instance whose characters are all constant reduces to the trivial
    zero-dimension instance (single root node, cost 0 before lifting).
    """
    full = (1 << raw.m) - 1
    and_all = full
    or_all = 0
    for t in raw.terminals:
        and_all &= t.bits
        or_all |= t.bits
    dropped_one = frozenset(c for c in range(raw.m) if and_all >> c & 1)
    dropped_zero = frozenset(c for c in range(raw.m) if not (or_all >> c & 1))
    positions = tuple(
        c for c in range(raw.m) if c not in dropped_one and c not in dropped_zero
    )
    record = NormalizationRecord(raw.m, dropped_zero, dropped_one, positions)
    m2 = len(positions)
    reduced = {Node(0, m2)}
    for t in raw.terminals:
        bits = 0
        for i, c in enumerate(positions):
            if t.bits >> c & 1:
                bits |= 1 << i
        reduced.add(Node(bits, m2))
    return Instance(m2, frozenset(reduced), record)


def lift(arb: Arborescence, record: NormalizationRecord) -> Arborescence:
    """Re-insert dropped characters into a tree built on the reduced
    instance.

    Constant-0 characters stay 0 everywhere.  Constant-1 characters are
    introduced by a single chain of edges from the original root down to the
    image of the reduced root (one edge per character, ascending index),
    with the reduced tree grafted below it.
    """
    if arb.m != len(record.position_map):
        raise ValueError(
            f"tree dimension {arb.m} does not match record "
            f"({len(record.position_map)} reduced characters)"
        )
    if record.is_identity:
        return arb
    one_mask = 0
    for c in record.dropped_one:
        one_mask |= 1 << c

    def up(bits: int) -> int:
        out = one_mask
        for i, c in enumerate(record.position_map):
            if bits >> i & 1:
                out |= 1 << c
        return out

    edges: set[tuple[int, int]] = set()
    cur = 0
    for c in sorted(record.dropped_one):
        nxt = cur | (1 << c)
        edges.add((cur, nxt))
        cur = nxt
    for u, v in arb.edges:
        edges.add((up(u.bits), up(v.bits)))
    return Arborescence.from_int_edges(edges, record.original_m)


def validation_report(
    m: int, terminals: Iterable[Node], arb: Arborescence
) -> list[str]:
    """All violations that stop ``arb`` being a valid spanning arborescence
    for the given terminal set.  Empty list means valid."""
    report: list[str] = []
    if arb.m != m:
        return [f"tree dimension {arb.m} does not match instance dimension {m}"]
    if arb.root.bits != 0:
        report.append(f"root {arb.root} is not the all-zero node")
    indeg: dict[Node, int] = {}
    children: dict[Node, list[Node]] = {}
    for u, v in arb.edges:
        if u.m != m or v.m != m:
            report.append(f"edge ({u}, {v}) has wrong dimension")
            continue
        diff = u.bits ^ v.bits
        if diff.bit_count() != 1 or u.bits & ~v.bits:
            report.append(f"non-unit edge ({u}, {v})")
        indeg[v] = indeg.get(v, 0) + 1
        children.setdefault(u, []).append(v)
    for v, d in indeg.items():
        if d > 1:
            report.append(f"multiple in-edges into {v}")
    if indeg.get(arb.root):
        report.append("root has an in-edge")
    reached = {arb.root}
    stack = [arb.root]
    while stack:
        u = stack.pop()
        for v in children.get(u, ()):
            if v not in reached:
                reached.add(v)
                stack.append(v)
    for n in sorted(arb.nodes):
        if n not in reached:
            report.append(f"unreachable node {n}")
    for t in sorted(set(terminals)):
        if t not in arb.nodes:
            report.append(f"uncovered terminal {t}")
    return report


def validate(inst: Instance, arb: Arborescence) -> bool:
    """True when the tree is a valid arborescence covering the instance's
    terminals; see validation_report for the reasons when it is not."""
    return not validation_report(inst.m, inst.terminals, arb)


def lower_bound(inst: Instance) -> int:
    """Cost lower bound: a spanning tree needs one edge per non-root
    terminal and, with every character varying, one edge per character."""
    return max(len(inst.terminals) - 1, inst.m)


def mvc_lower_bound(inst: Instance, mvc_size: int) -> int:
    """Cost lower bound from a minimum vertex cover of the conflict graph:
    every cover character must mutate at least twice."""
    return inst.m + mvc_size
