"""Shared helpers: independent brute-force re-checks used as test oracles.

Everything here is deliberately naive (full triple loops, unpruned
enumeration) and separate from the library's own code paths.
"""

from __future__ import annotations

import itertools

import pytest

from ptchain.core import ABSENT, E1, E2, PtGraph


def triple_loop_pseudo_ok(g: PtGraph) -> bool:
    """Quantified pseudo-transitivity rule, checked by a full triple loop."""
    for a in range(g.n):
        for b in range(g.n):
            if g.cls[a, b] != E1:
                continue
            for c in range(g.n):
                if g.cls[b, c] != ABSENT and g.cls[a, c] == ABSENT:
                    return False
    return True


def triple_loop_strong_ok(g: PtGraph) -> bool:
    if not triple_loop_pseudo_ok(g):
        return False
    for cls_code in (E1, E2):
        for a in range(g.n):
            for b in range(g.n):
                if g.cls[a, b] != cls_code:
                    continue
                for c in range(g.n):
                    if g.cls[b, c] == cls_code and g.cls[a, c] != cls_code:
                        return False
    return True


def all_chains(g: PtGraph, min_len: int = 1):
    """Every chain of the graph, by unpruned subset filtering (the oracle
    side: check each pi-sorted vertex subset for pairwise adjacency)."""
    order = sorted(range(g.n), key=lambda v: g.pi[v])
    found = []
    for r in range(min_len, g.n + 1):
        for combo in itertools.combinations(order, r):
            if all(
                g.cls[combo[i], combo[j]] != ABSENT
                for i in range(r)
                for j in range(i + 1, r)
            ):
                found.append(combo)
    return found


def is_degenerate_seq(g: PtGraph, chain) -> bool:
    """Definitional check: no internal vertex receives E1 from all earlier."""
    if len(chain) < 3:
        return True
    for j in range(1, len(chain) - 1):
        if all(g.cls[chain[i], chain[j]] == E1 for i in range(j)):
            return False
    return True


@pytest.fixture
def closed_triple():
    """Smallest closed pseudo-transitive triple: 0->1 in E1, rest in E2."""
    from ptchain.core import build_graph

    return build_graph([(0, 1)], [(1, 2), (0, 2)], [1, 1, 1])


@pytest.fixture
def interval_instance():
    """Four chord intervals P=[0,10], Q=[1,4], R=[5,9], S=[11,12]."""
    from ptchain.geometry import CHORDS, ChordInterval, make_instance

    return make_instance(
        CHORDS,
        [ChordInterval(0, 10), ChordInterval(1, 4), ChordInterval(5, 9), ChordInterval(11, 12)],
    )
