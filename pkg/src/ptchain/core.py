"""Two-class vertex-weighted DAGs, topological indexing, and chain machinery.

A graph holds a distinguished edge subset (class E1) whose defining property
is: ``ab`` in E1 and ``bc`` in E imply ``ac`` in E.  The remaining edges form
class E2.  Chains are vertex sequences that are pairwise adjacent and strictly
increasing in topological index.
"""

from __future__ import annotations

import heapq
import json
from dataclasses import dataclass

import numpy as np

from .errors import PtError

ABSENT = 0
E1 = 1
E2 = 2

DEGENERATE = "DEGENERATE"
SPLITABLE = "SPLITABLE"


@dataclass(frozen=True)
class Violation:
    rule: str  # ACYCLICITY | PSEUDO_TRANS | E1_TRANSITIVE | E2_TRANSITIVE | ANTIPARALLEL | SELF_LOOP
    witness: tuple


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[Violation, ...]

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "violations": [
                {"rule": v.rule, "witness": list(v.witness)} for v in self.violations
            ],
        }


@dataclass(frozen=True)
class ChainClass:
    kind: str  # DEGENERATE | SPLITABLE
    splitting_elements: tuple[int, ...]
    last_split: int | None


class PtGraph:
    """Immutable DAG with edges classified E1/E2 and non-negative integer weights.

    Stores both a dense class table (O(1) edge-class lookups) and sorted
    out-adjacency lists.  ``pi`` is a fixed topological index, a bijection
    onto 1..n, deterministic by vertex-id tie-break.
    """

    __slots__ = ("n", "weight", "cls", "out_adj", "pi", "w64",
                 "vertices_by_pi", "out_by_pi", "m")

    def __init__(self, n, weight, cls, out_adj, pi):
        self.n = n
        self.weight = tuple(weight)
        self.cls = cls
        self.cls.setflags(write=False)
        self.out_adj = tuple(tuple(a) for a in out_adj)
        self.pi = tuple(pi)
        self.w64 = np.asarray(weight, dtype=np.int64)
        self.vertices_by_pi = tuple(sorted(range(n), key=lambda v: self.pi[v]))
        self.out_by_pi = tuple(
            tuple(sorted(a, key=lambda v: self.pi[v])) for a in self.out_adj
        )
        self.m = sum(len(a) for a in self.out_adj)

    def edge_class(self, u: int, v: int) -> int:
        return int(self.cls[u, v])

    def has_edge(self, u: int, v: int) -> bool:
        return self.cls[u, v] != ABSENT

    def deg(self, v: int) -> int:
        """Total (in + out) degree."""
        return int((self.cls[v] != ABSENT).sum() + (self.cls[:, v] != ABSENT).sum())

    def edges(self):
        for u in range(self.n):
            for v in self.out_adj[u]:
                yield u, v

    def e1_edges(self):
        return [(u, v) for u, v in self.edges() if self.cls[u, v] == E1]

    def e2_edges(self):
        return [(u, v) for u, v in self.edges() if self.cls[u, v] == E2]


def _toposort_index(n, out_adj) -> list[int]:
    """Kahn's algorithm; among simultaneously available vertices the lower id
    receives the lower index."""
    indeg = [0] * n
    for u in range(n):
        for v in out_adj[u]:
            indeg[v] += 1
    heap = [v for v in range(n) if indeg[v] == 0]
    heapq.heapify(heap)
    pi = [0] * n
    nxt = 1
    while heap:
        u = heapq.heappop(heap)
        pi[u] = nxt
        nxt += 1
        for v in out_adj[u]:
            indeg[v] -= 1
            if indeg[v] == 0:
                heapq.heappush(heap, v)
    if nxt != n + 1:
        raise PtError("CYCLE", "edge set is not acyclic")
    return pi


def build_graph(e1_edges, e2_edges, weights) -> PtGraph:
    """Build and fully check a PtGraph from two classified edge lists."""
    weights = [int(w) for w in weights]
    n = len(weights)
    for w in weights:
        if w < 0:
            raise PtError("BAD_WEIGHT", f"negative weight {w}")
    cls = np.zeros((n, n), dtype=np.uint8)
    for edge_list, code in ((e1_edges, E1), (e2_edges, E2)):
        for u, v in edge_list:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise PtError("UNKNOWN_VERTEX", f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise PtError("SELF_LOOP", f"self-loop at {u}")
            if cls[u, v] != ABSENT:
                raise PtError("DUPLICATE_EDGE", f"edge ({u},{v}) listed twice")
            if cls[v, u] != ABSENT:
                raise PtError("ANTIPARALLEL", f"both ({u},{v}) and ({v},{u}) present")
            cls[u, v] = code
    out_adj = [tuple(int(v) for v in np.flatnonzero(cls[u])) for u in range(n)]
    pi = _toposort_index(n, out_adj)
    return PtGraph(n, weights, cls, out_adj, pi)


def topological_index(g: PtGraph) -> list[int]:
    """Recompute the deterministic topological index from the adjacency."""
    return _toposort_index(g.n, g.out_adj)


def _witnesses(mask, left, right, rule, limit=None):
    """Recover (a, b, c) witness triples for each flagged (a, c) pair."""
    out = []
    for a, c in np.argwhere(mask):
        bs = np.flatnonzero(left[a] & right[:, c])
        out.append(Violation(rule, (int(a), int(bs[0]), int(c))))
        if limit is not None and len(out) >= limit:
            break
    return out


def validate_pseudo_transitive(g: PtGraph) -> ValidationReport:
    """Check: ab in E1 and bc in E imply ac in E (any class, either rule-forced
    direction is ruled out by acyclicity, so the edge must be a->c)."""
    if g.n == 0:
        return ValidationReport(True, ())
    a_all = g.cls != ABSENT
    a1 = g.cls == E1
    two_step = (a1.astype(np.float32) @ a_all.astype(np.float32)) > 0.5
    bad = two_step & ~a_all
    viols = _witnesses(bad, a1, a_all, "PSEUDO_TRANS")
    return ValidationReport(not viols, tuple(viols))


def validate_strong(g: PtGraph) -> ValidationReport:
    """Pseudo-transitivity plus transitivity of E1 and of E2 separately."""
    viols = list(validate_pseudo_transitive(g).violations)
    if g.n > 0:
        a1 = g.cls == E1
        a2 = g.cls == E2
        f1 = a1.astype(np.float32)
        f2 = a2.astype(np.float32)
        viols += _witnesses(((f1 @ f1) > 0.5) & ~a1, a1, a1, "E1_TRANSITIVE")
        viols += _witnesses(((f2 @ f2) > 0.5) & ~a2, a2, a2, "E2_TRANSITIVE")
    return ValidationReport(not viols, tuple(viols))


def verify_chain(g: PtGraph, vertices) -> bool:
    """True iff the sequence is strictly pi-increasing and pairwise adjacent.

    Single vertices and the empty sequence are chains.
    """
    vs = [int(v) for v in vertices]
    for v in vs:
        if not 0 <= v < g.n:
            raise PtError("UNKNOWN_VERTEX", f"vertex {v} not in graph (n={g.n})")
    if len(vs) < 2:
        return True
    for i in range(len(vs) - 1):
        if g.pi[vs[i]] >= g.pi[vs[i + 1]]:
            return False
    sub = g.cls[np.ix_(vs, vs)]
    iu = np.triu_indices(len(vs), k=1)
    return bool((sub[iu] != ABSENT).all())


def classify_chain(g: PtGraph, vertices) -> ChainClass:
    """Classify a chain of length >= 3 as SPLITABLE or DEGENERATE.

    A splitting element is an internal vertex receiving E1 edges from every
    earlier chain vertex.  Semantics assume the graph is strongly
    pseudo-transitive (caller's precondition).
    """
    vs = [int(v) for v in vertices]
    if len(vs) < 3:
        raise PtError("TOO_SHORT", "classification needs a chain of length >= 3")
    if not verify_chain(g, vs):
        raise PtError("NOT_A_CHAIN", f"{vs} is not a chain")
    splits = [
        vs[j]
        for j in range(1, len(vs) - 1)
        if all(g.cls[vs[i], vs[j]] == E1 for i in range(j))
    ]
    if splits:
        return ChainClass(SPLITABLE, tuple(splits), splits[-1])
    return ChainClass(DEGENERATE, (), None)


def chain_weight(g: PtGraph, vertices) -> int:
    return sum(g.weight[v] for v in vertices)


# -- instance file (JSON) ----------------------------------------------------

def graph_to_json(g: PtGraph) -> dict:
    return {
        "n": g.n,
        "weights": list(g.weight),
        "e1": sorted([list(e) for e in g.e1_edges()]),
        "e2": sorted([list(e) for e in g.e2_edges()]),
    }


def graph_from_json(data: dict) -> PtGraph:
    try:
        n = int(data["n"])
        weights = list(data["weights"])
        e1 = [tuple(e) for e in data["e1"]]
        e2 = [tuple(e) for e in data["e2"]]
    except (KeyError, TypeError) as exc:
        raise PtError("BAD_INPUT", f"malformed graph record: {exc}") from exc
    if n != len(weights):
        raise PtError("BAD_INPUT", f"n={n} but {len(weights)} weights")
    return build_graph(e1, e2, weights)


def load_graph(path) -> PtGraph:
    with open(path) as fh:
        return graph_from_json(json.load(fh))


def save_graph(g: PtGraph, path) -> None:
    with open(path, "w") as fh:
        json.dump(graph_to_json(g), fh, sort_keys=True, separators=(",", ":"))
        fh.write("\n")
