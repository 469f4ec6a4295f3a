"""Shared helpers and fixtures for the test suite."""

from __future__ import annotations

from itertools import product

import pytest

from syncomp import Dfa, Transformation, minimize


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False,
                     help="run the long exhaustive-search tests too")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="long search; opt in with --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def dfa(rows, finals, alphabet=None, initial=0) -> Dfa:
    """Build a complete DFA from one image row per letter."""
    alphabet = tuple(alphabet) if alphabet else tuple("abcdef"[: len(rows)])
    delta = {a: Transformation(tuple(r)) for a, r in zip(alphabet, rows)}
    return Dfa(len(rows[0]), alphabet, delta, initial, frozenset(finals))


@pytest.fixture(scope="session")
def minimal_binary_3() -> list[Dfa]:
    """Every minimal DFA with 3 states, letters a/b, initial state 0.

    All 3^3 * 3^3 letter-action pairs are combined with the six nonempty
    proper final subsets and filtered for minimality (2056 survivors); a
    language with three quotients cannot have empty or full finals, so this
    covers every such language, some more than once.
    """
    out = []
    for ra, rb in product(product(range(3), repeat=3), repeat=2):
        delta = {"a": Transformation(ra), "b": Transformation(rb)}
        for mask in range(1, 7):
            finals = frozenset(q for q in range(3) if mask >> q & 1)
            d = Dfa(3, ("a", "b"), delta, 0, finals)
            if minimize(d).n == 3:
                out.append(d)
    assert len(out) == 2056
    return out
