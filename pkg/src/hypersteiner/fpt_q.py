"""Randomized solver parameterized by the cost penalty.

Characters that conflict with nothing inside a superset can be assumed to
mutate exactly once, so they are peeled off deterministically: the members
are grouped by their pattern on those characters and a perfect arborescence
over the group supernodes spends one edge per character.  While more than
``q_budget``
distinct conflicting characters remain, one is drawn uniformly at random
and split everywhere it conflicts.  The residual supersets are tiny (their
non-constant characters are all conflicting, at most ``q_budget`` of them)
and are finished off with an exact solver.  A run is optimal whenever every
randomly drawn character mutates exactly once in some optimal tree, which
happens with probability at least 4^-q.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, replace

from .conflict import conflicts, perfect_arborescence
from .errors import SolverRefusal
from .instance import Arborescence, Instance, RawInstance, lift, normalize
from .nodes import Node
from .supersets import Superset, split


@dataclass(frozen=True)
class RunConfig:
    """Knobs for the randomized solver and its repetition wrapper."""

    q_budget: int = 2
    seed: int = 0
    repetitions: int | None = None
    residual_solver: str = "dw"  # "dw" or "oracle"

    def __post_init__(self) -> None:
        if self.q_budget < 0:
            raise ValueError("q_budget must be non-negative")
        if self.repetitions is not None and self.repetitions < 1:
            raise ValueError("repetitions must be at least 1")
        if self.residual_solver not in ("dw", "oracle"):
            raise ValueError(f"unknown residual solver {self.residual_solver!r}")


def conflicting_chars_within(ss: Superset) -> set[int]:
    """Free characters that conflict with another free character among the
    superset's members."""
    nonconstant = ss.nonconstant_chars()
    out: set[int] = set()
    for i, u in enumerate(nonconstant):
        for v in nonconstant[i + 1 :]:
            if u in out and v in out:
                continue
            if conflicts(ss.members, u, v):
                out.add(u)
                out.add(v)
    return out


def peel(ss: Superset) -> tuple[set[tuple[int, int]], list[Superset]]:
    """Split off conflict-free non-constant characters until none remain.

    The members are grouped by their pattern on those characters, the
    pattern set is laminar, and a perfect arborescence over the group
    supernodes spends exactly one edge per peeled character.  Grouping can
    free further characters inside a group, so the reduction repeats until
    every non-constant free character of every leaf conflicts with another.

    Returns the skeleton edges added and the leaf supersets.
    """
    edges: set[tuple[int, int]] = set()
    leaves: list[Superset] = []
    stack = [ss]
    while stack:
        s = stack.pop()
        conflicting = conflicting_chars_within(s)
        peelable = [c for c in s.nonconstant_chars() if c not in conflicting]
        if not peelable:
            leaves.append(s)
            continue
        groups: dict[int, list[Node]] = {}
        for t in s.members:
            pat = sum(
                (t.bits >> c & 1) << i for i, c in enumerate(peelable)
            )
            groups.setdefault(pat, []).append(t)
        m_p = len(peelable)
        skeleton = perfect_arborescence(
            Instance.from_terminals(m_p, (Node(p, m_p) for p in groups))
        )
        sn = s.supernode.bits

        def embed(pat: int) -> int:
            out = sn
            for i, c in enumerate(peelable):
                if pat >> i & 1:
                    out |= 1 << c
            return out

        edges |= {(embed(u.bits), embed(v.bits)) for u, v in skeleton.edges}
        for pat, members in groups.items():
            assignment = s.assignment | {
                (c, pat >> i & 1) for i, c in enumerate(peelable)
            }
            stack.append(
                Superset(s.m, frozenset(assignment), frozenset(members))
            )
    return edges, leaves


def _residual_edges(leaf: Superset, solver: str) -> set[tuple[int, int]]:
    """Solve a leaf superset exactly and embed the tree at its supernode."""
    sn = leaf.supernode.bits
    free = leaf.free_chars
    patterns = {
        tuple(t.bits >> c & 1 for c in free) for t in leaf.members
    }
    if not free or patterns == {tuple([0] * len(free))}:
        return set()
    m_f = len(free)
    raw = RawInstance(
        m_f,
        frozenset(
            Node(sum(b << i for i, b in enumerate(pat)), m_f) for pat in patterns
        ),
    )
    sub = normalize(raw)
    if solver == "oracle":
        from .exact import oracle_solve

        sol = oracle_solve(sub)
    else:
        from .exact import solve_dw

        sol = solve_dw(sub)
    lifted = lift(sol, sub.record)

    def embed(bits: int) -> int:
        out = sn
        for i, c in enumerate(free):
            if bits >> i & 1:
                out |= 1 << c
        return out

    return {(embed(u.bits), embed(v.bits)) for u, v in lifted.edges}


def solve_randomized(
    inst: Instance, cfg: RunConfig, stats: dict | None = None
) -> Arborescence:
    """One randomized run.  Optimality is not guaranteed per run; unlucky
    runs whose conflicts cannot be brought under budget in ``q_budget``
    iterations are refused rather than patched up."""
    if inst.is_trivial:
        return Arborescence.from_int_edges([], 0)
    rng = random.Random(cfg.seed)
    root = Superset(inst.m, frozenset(), inst.terminals)
    edges, leaves = peel(root)
    conflict_sets = [conflicting_chars_within(s) for s in leaves]
    iterations = 0
    while True:
        distinct = sorted(set().union(*conflict_sets)) if conflict_sets else []
        if len(distinct) <= cfg.q_budget:
            break
        if iterations >= cfg.q_budget:
            raise SolverRefusal(
                f"still {len(distinct)} conflicting characters after "
                f"{iterations} iterations (budget {cfg.q_budget}); unlucky run"
            )
        c = rng.choice(distinct)
        next_leaves: list[Superset] = []
        next_conflicts: list[set[int]] = []
        for leaf, conf in zip(leaves, conflict_sets):
            if c not in conf:
                next_leaves.append(leaf)
                next_conflicts.append(conf)
                continue
            child0, child1 = split(leaf, c)
            edges.add((child0.supernode.bits, child1.supernode.bits))
            for child in (child0, child1):
                sub_edges, sub_leaves = peel(child)
                edges |= sub_edges
                next_leaves.extend(sub_leaves)
                next_conflicts.extend(
                    conflicting_chars_within(s) for s in sub_leaves
                )
        leaves = next_leaves
        conflict_sets = next_conflicts
        iterations += 1

    residuals = [
        (leaf, conf) for leaf, conf in zip(leaves, conflict_sets) if conf
    ]
    if iterations > cfg.q_budget:
        raise AssertionError("iteration bound violated")
    if len(residuals) > 2**cfg.q_budget:
        raise AssertionError(
            f"{len(residuals)} residual supersets exceed 2^q = {2**cfg.q_budget}"
        )
    for _, conf in residuals:
        if len(conf) > cfg.q_budget:
            raise AssertionError(
                f"residual superset has {len(conf)} conflicting characters "
                f"(budget {cfg.q_budget})"
            )
    if stats is not None:
        stats["iterations"] = iterations
        stats["residual_supersets"] = len(residuals)
        stats["residual_conflict_chars"] = (
            len(set().union(*(conf for _, conf in residuals)))
            if residuals
            else 0
        )
        stats["residual_max_members"] = max(
            (len(leaf.members) for leaf, _ in residuals), default=0
        )
    for leaf in leaves:
        edges |= _residual_edges(leaf, cfg.residual_solver)
    return Arborescence.from_int_edges(edges, inst.m)


def solve_derandomized(
    inst: Instance, cfg: RunConfig, stats: dict | None = None
) -> Arborescence:
    """Repeat the randomized solver with derived seeds and keep the
    cheapest valid output.  Defaults to ceil(4^q) trials, enough for a
    constant failure probability."""
    if inst.is_trivial:
        return Arborescence.from_int_edges([], 0)
    root = Superset(inst.m, frozenset(), inst.terminals)
    _, leaves = peel(root)
    conflict_count = len(
        set().union(*(conflicting_chars_within(s) for s in leaves))
        if leaves
        else set()
    )
    reps = cfg.repetitions
    if reps is None:
        reps = math.ceil(4**cfg.q_budget)
    if conflict_count <= cfg.q_budget:
        reps = 1  # the run is deterministic: no random draws happen
    rng = random.Random(cfg.seed)
    best: Arborescence | None = None
    failures = 0
    for _ in range(reps):
        trial_seed = rng.getrandbits(64)
        try:
            arb = solve_randomized(inst, replace(cfg, seed=trial_seed))
        except SolverRefusal:
            failures += 1
            continue
        if best is None or arb.cost < best.cost:
            best = arb
    if stats is not None:
        stats["trials"] = reps
        stats["refused_trials"] = failures
    if best is None:
        raise SolverRefusal(f"all {reps} randomized trials were refused")
    return best
