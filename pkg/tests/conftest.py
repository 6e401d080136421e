"""Shared fixtures: canonical small instances used across the test suite."""

from __future__ import annotations

import pytest

from hypersteiner import Instance, RawInstance, normalize
from hypersteiner.nodes import Node


def make_instance(strings) -> Instance:
    """Normalized instance from node strings (character 0 leftmost)."""
    return normalize(RawInstance.from_strings(strings))


@pytest.fixture
def triangle():
    # pairwise-conflicting level-2 terminals; optimal cost 5
    return make_instance(["000", "011", "101", "110"])


@pytest.fixture
def chain():
    # nested 1-sets: the conflict-free chain, optimal cost 3
    return make_instance(["000", "100", "110", "111"])


@pytest.fixture
def square():
    # smallest conflicting instance: one character must mutate twice
    return make_instance(["00", "01", "10", "11"])
