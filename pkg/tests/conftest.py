"""Shared fixtures and independent brute-force oracles.

The oracles here deliberately avoid the library's own canonicalization and
extension machinery: isomorphism is decided by trying every bijection, and
embedding counts come from subset enumeration, so they can vouch for the
production paths.
"""

from __future__ import annotations

import itertools

import pytest

from orbitalgebra import (
    DisjointUnion,
    FiniteModel,
    LinearOrders,
    MultisetOver,
    Sets,
    TimesQ,
    colored,
    complete_graph,
)
from orbitalgebra.structures import FiniteStructure, induced_substructure


def apply_permutation(s: FiniteStructure, perm) -> FiniteStructure:
    """Relabel vertices: vertex v becomes perm[v]."""
    rels = tuple(
        frozenset((perm[a], perm[b]) for (a, b) in relset) for relset in s.relations
    )
    return FiniteStructure(s.signature, s.n, rels)


def brute_isomorphic(s: FiniteStructure, t: FiniteStructure) -> bool:
    if s.signature != t.signature or s.n != t.n:
        return False
    for perm in itertools.permutations(range(s.n)):
        if apply_permutation(s, perm).relations == t.relations:
            return True
    return False


def brute_embedding_count(s: FiniteStructure, t: FiniteStructure) -> int:
    """Injections preserving/reflecting relations, counted one by one."""
    count = 0
    for image in itertools.permutations(range(t.n), s.n):
        ok = True
        for rs, rt in zip(s.relations, t.relations):
            for a in range(s.n):
                for b in range(s.n):
                    if ((a, b) in rs) != ((image[a], image[b]) in rt):
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        if ok:
            count += 1
    return count


def subsets_matching(t: FiniteStructure, s: FiniteStructure) -> int:
    """Number of |s|-subsets of t inducing a structure isomorphic to s."""
    return sum(
        1
        for subset in itertools.combinations(range(t.n), s.n)
        if brute_isomorphic(induced_substructure(t, subset), s)
    )


@pytest.fixture(scope="session")
def fibonacci_age():
    return TimesQ(FiniteModel(complete_graph(2)))


@pytest.fixture(scope="session")
def tribonacci_age():
    return TimesQ(FiniteModel(complete_graph(3)))


@pytest.fixture(scope="session")
def partitions_age():
    return MultisetOver(LinearOrders())


@pytest.fixture(scope="session")
def three_colored_sets():
    return colored(Sets(), 3)


def builtin_age_roster():
    """Ages exercised by blanket invariant tests."""
    from orbitalgebra import Scalar

    return [
        Sets(),
        LinearOrders(),
        FiniteModel(complete_graph(2)),
        FiniteModel(complete_graph(3)),
        DisjointUnion((Sets(), Sets(Scalar.from_fraction("7/2")))),
        DisjointUnion((FiniteModel(complete_graph(2)), Sets())),
        TimesQ(FiniteModel(complete_graph(2))),
        TimesQ(FiniteModel(complete_graph(3))),
        MultisetOver(LinearOrders()),
        colored(Sets(), 3),
    ]
