"""A scikit-learn style front end.

Terminal sets are naturally binary matrices (one row per terminal, one
column per character), so the solvers compose with sklearn pipelines and
parameter search through a small estimator wrapper."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator

from . import approx, exact, fpt_q
from .errors import SolverRefusal
from .instance import (
    Arborescence,
    RawInstance,
    lift,
    normalize,
    validation_report,
)
from .nodes import Node

ALGORITHMS = ("auto", "dw", "oracle", "fpt-q", "approx-mvc", "approx-mhs", "level2")


def check_binary_matrix(X) -> np.ndarray:
    """Validate and coerce input to a 2-D 0/1 integer array."""
    X = np.asarray(X)
    if X.ndim != 2 or X.shape[0] == 0 or X.shape[1] == 0:
        raise ValueError(f"expected a non-empty 2-D array, got shape {X.shape}")
    if not np.isin(X, (0, 1)).all():
        raise ValueError("terminal matrix must contain only 0s and 1s")
    return X.astype(np.int64)


def matrix_to_instance(X) -> RawInstance:
    X = check_binary_matrix(X)
    m = X.shape[1]
    nodes = frozenset(
        Node(int(sum(int(row[c]) << c for c in range(m))), m) for row in X
    )
    return RawInstance(m, nodes)


class SteinerArborescenceSolver(BaseEstimator):
    """Fits a minimum (or near-minimum) Steiner arborescence to a binary
    terminal matrix.

    Parameters
    ----------
    algorithm : which solver to run; "auto" picks the exhaustive solver
        when the instance is small enough, then the subset DP, then the
        vertex-cover approximation.
    q_budget, repetitions, seed : randomized-solver knobs ("fpt-q").
    hs_strategy : hitting-set strategy for "approx-mhs".
    terminal_cap : subset-DP guard on the number of terminals.

    Attributes after ``fit``: ``tree_`` (lifted back to the input
    dimension), ``cost_``, ``n_steiner_``, ``penalty_``.
    """

    def __init__(
        self,
        algorithm: str = "auto",
        q_budget: int = 2,
        repetitions: int | None = None,
        seed: int = 0,
        hs_strategy: str = "best",
        terminal_cap: int = 20,
    ):
        self.algorithm = algorithm
        self.q_budget = q_budget
        self.repetitions = repetitions
        self.seed = seed
        self.hs_strategy = hs_strategy
        self.terminal_cap = terminal_cap

    def fit(self, X, y=None) -> "SteinerArborescenceSolver":
        if self.algorithm not in ALGORITHMS:
            raise ValueError(f"unknown algorithm {self.algorithm!r}")
        raw = matrix_to_instance(X)
        inst = normalize(raw)
        algo = self.algorithm
        if algo == "auto":
            try:
                reduced = exact.oracle_solve(inst)
            except SolverRefusal:
                try:
                    reduced = exact.solve_dw(inst, cap=self.terminal_cap)
                except SolverRefusal:
                    reduced = approx.solve_mvc(inst)
        elif algo == "dw":
            reduced = exact.solve_dw(inst, cap=self.terminal_cap)
        elif algo == "oracle":
            reduced = exact.oracle_solve(inst)
        elif algo == "level2":
            reduced = exact.solve_level2(inst)
        elif algo == "fpt-q":
            cfg = fpt_q.RunConfig(
                q_budget=self.q_budget,
                seed=self.seed,
                repetitions=self.repetitions,
            )
            reduced = fpt_q.solve_derandomized(inst, cfg)
        elif algo == "approx-mvc":
            reduced = approx.solve_mvc(inst)
        else:  # approx-mhs
            reduced = approx.solve_mhs(inst, self.hs_strategy)
        tree = lift(reduced, inst.record)
        report = validation_report(
            raw.m, self._lifted_terminals(raw, inst), tree
        )
        if report:
            raise AssertionError(f"solver produced an invalid tree: {report}")
        self.tree_: Arborescence = tree
        self.cost_: int = tree.cost
        self.n_steiner_: int = tree.steiner_count(
            self._lifted_terminals(raw, inst)
        )
        self.penalty_: int = tree.cost - raw.m
        return self

    @staticmethod
    def _lifted_terminals(raw: RawInstance, inst) -> frozenset[Node]:
        # the root is always a terminal by convention
        return frozenset(raw.terminals | {Node(0, raw.m)})
