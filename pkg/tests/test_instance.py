import pytest

from hypersteiner import (
    Arborescence,
    RawInstance,
    lift,
    lower_bound,
    mvc_lower_bound,
    normalize,
    validate,
    validation_report,
)
from hypersteiner.exact import oracle_solve
from hypersteiner.nodes import Node

from conftest import make_instance


def n(s: str) -> Node:
    return Node.from_string(s)


class TestNormalize:
    def test_drops_constant_characters(self):
        raw = RawInstance.from_strings(["00110", "01110", "10110"])
        inst = normalize(raw)
        # columns 2 and 3 read 1 everywhere, column 4 reads 0 everywhere
        assert inst.record.dropped_one == frozenset({2, 3})
        assert inst.record.dropped_zero == frozenset({4})
        assert inst.m == 2
        assert inst.record.position_map == (0, 1)
        assert Node(0, 2) in inst.terminals

    def test_already_normalized_unchanged(self, triangle):
        assert triangle.m == 3
        assert triangle.record.is_identity
        assert len(triangle.terminals) == 4

    def test_single_terminal_reduces_to_trivial(self):
        inst = normalize(RawInstance.from_strings(["11"]))
        assert inst.m == 0
        assert inst.is_trivial
        assert inst.record.dropped_one == frozenset({0, 1})

    def test_idempotent(self):
        raw = RawInstance.from_strings(["0010", "0110", "1110"])
        once = normalize(raw)
        twice = normalize(once.as_raw())
        assert twice.m == once.m
        assert twice.terminals == once.terminals

    def test_root_always_added(self):
        inst = normalize(RawInstance.from_strings(["01", "10"]))
        assert inst.root in inst.terminals


class TestLift:
    def test_identity_record_is_noop(self, triangle):
        tree = oracle_solve(triangle)
        assert lift(tree, triangle.record) is tree

    def test_dropped_one_chain(self):
        inst = normalize(RawInstance.from_strings(["11"]))
        tree = Arborescence.from_int_edges([], 0)
        lifted = lift(tree, inst.record)
        assert lifted.cost == 2
        assert (n("00"), n("10")) in lifted.edges
        assert (n("10"), n("11")) in lifted.edges

    def test_lift_cost_accounting(self):
        raw = RawInstance.from_strings(["0011", "0111", "1011"])
        inst = normalize(raw)
        tree = oracle_solve(inst)
        lifted = lift(tree, inst.record)
        assert lifted.cost == tree.cost + len(inst.record.dropped_one)
        terminals = raw.terminals | {Node(0, raw.m)}
        assert not validation_report(raw.m, terminals, lifted)

    def test_dimension_mismatch_rejected(self, triangle):
        tree = Arborescence.from_int_edges([], 2)
        inst = normalize(RawInstance.from_strings(["11"]))
        with pytest.raises(ValueError):
            lift(tree, inst.record)


class TestValidation:
    def test_oracle_output_valid(self, triangle):
        assert validate(triangle, oracle_solve(triangle))

    def test_uncovered_terminal_reported(self, triangle):
        tree = Arborescence.from_int_edges(
            [(0b000, 0b001), (0b001, 0b011), (0b001, 0b101)], 3
        )
        report = validation_report(3, triangle.terminals, tree)
        assert any("uncovered terminal 011" in line for line in report)

    def test_non_unit_edge_reported(self, triangle):
        tree = Arborescence.from_int_edges([(0b000, 0b110)], 3)
        report = validation_report(3, triangle.terminals, tree)
        assert any("non-unit edge" in line for line in report)

    def test_multiple_in_edges_reported(self):
        tree = Arborescence.from_int_edges(
            [(0b00, 0b01), (0b00, 0b10), (0b01, 0b11), (0b10, 0b11)], 2
        )
        report = validation_report(2, frozenset({Node(0, 2)}), tree)
        assert any("multiple in-edges" in line for line in report)

    def test_unreachable_node_reported(self):
        tree = Arborescence.from_int_edges([(0b01, 0b11)], 2)
        report = validation_report(2, frozenset({Node(0, 2)}), tree)
        assert any("unreachable" in line for line in report)


class TestBoundsAndAccounting:
    def test_lower_bound(self, triangle):
        assert lower_bound(triangle) == 3
        assert lower_bound(make_instance(["011", "100"])) == 3

    def test_lower_bound_terminal_count_dominates(self):
        inst = make_instance(["00", "01", "10", "11"])
        assert lower_bound(inst) == 3

    def test_mvc_lower_bound(self, triangle):
        assert mvc_lower_bound(triangle, 2) == 5
        assert mvc_lower_bound(triangle, 0) == 3

    def test_parameter_identity(self, triangle):
        tree = oracle_solve(triangle)
        p = tree.steiner_count(triangle.terminals)
        q = tree.cost - triangle.m
        assert len(triangle.terminals) - 1 + p == triangle.m + q == tree.cost

    def test_mutation_counts(self, chain):
        tree = oracle_solve(chain)
        assert tree.mutation_counts() == {0: 1, 1: 1, 2: 1}


class TestRawInstance:
    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            RawInstance(2, frozenset())

    def test_dimension_mismatch_rejected(self):
        with pytest.raises(ValueError):
            RawInstance(2, frozenset({n("011")}))
