"""Longest (cardinality) chain in a general pseudo-transitive graph.

Three stages: brute-force the longest chain k living entirely in E2, then
enumerate all (k+1)-chains, connect them by pivot-replacement steps into a
transition DAG, and read the answer off its longest path.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import ABSENT, E1, E2, PtGraph, validate_pseudo_transitive, verify_chain
from .errors import BudgetExceeded, InternalError, PtError

DEFAULT_CHECK_BUDGET = 100_000_000
DEFAULT_NODE_BUDGET = 5_000_000


class _Work:
    """Adjacency-check counter with a hard limit."""

    __slots__ = ("used", "limit", "best")

    def __init__(self, limit: int):
        self.used = 0
        self.limit = limit
        self.best = None

    def spend(self, k: int = 1):
        self.used += k
        if self.used > self.limit:
            raise BudgetExceeded(
                f"adjacency-check budget {self.limit} exhausted"
                + (f"; best lower bound so far: {self.best}" if self.best is not None else ""),
                best=self.best,
            )


def _g2_longest(g: PtGraph, work: _Work):
    """Longest all-E2 chain by ordered depth-first extension.

    Returns (k, witness).  Deterministic: starts and extensions are taken in
    pi order, so the first chain of the final best length is pi-lex smallest.
    """
    best_len = 0
    best_chain: tuple[int, ...] = ()
    cls = g.cls

    def extend(chain):
        nonlocal best_len, best_chain
        if len(chain) > best_len:
            best_len = len(chain)
            best_chain = tuple(chain)
            work.best = best_len
        last = chain[-1]
        for v in g.out_by_pi[last]:
            work.spend(len(chain))
            if all(cls[u, v] == E2 for u in chain):
                chain.append(v)
                extend(chain)
                chain.pop()

    for v in g.vertices_by_pi:
        extend([v])
    return best_len, best_chain


def omega_g2(g: PtGraph, budget: int = DEFAULT_CHECK_BUDGET) -> int:
    """Length of the longest chain using only E2 edges."""
    if g.n < 1:
        raise PtError("EMPTY_GRAPH", "no vertices")
    k, _ = _g2_longest(g, _Work(budget))
    return k


def _enumerate(g: PtGraph, r: int, work: _Work) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []
    cls = g.cls

    def extend(chain):
        if len(chain) == r:
            out.append(tuple(chain))
            return
        last = chain[-1]
        for v in g.out_by_pi[last]:
            work.spend(len(chain))
            if all(cls[u, v] != ABSENT for u in chain):
                chain.append(v)
                extend(chain)
                chain.pop()

    if r >= 1:
        for v in g.vertices_by_pi:
            extend([v])
    return out


def enumerate_chains(g: PtGraph, r: int, budget: int = DEFAULT_CHECK_BUDGET):
    """All r-vertex chains, each once, as pi-ordered tuples in pi-lex order."""
    if not 1 <= r <= g.n:
        raise PtError("BAD_INPUT", f"chain size {r} out of range 1..{g.n}")
    return _enumerate(g, r, _Work(budget))


@dataclass(frozen=True)
class TransitionGraph:
    k: int
    nodes: tuple[tuple[int, ...], ...]
    pivot: tuple[int, ...]
    edges: tuple[tuple[tuple[int, int], ...], ...]  # per node: (successor id, appended vertex)

    @property
    def n_edges(self) -> int:
        return sum(len(e) for e in self.edges)


def _pivot(g: PtGraph, chain: tuple[int, ...]) -> int:
    """Smallest-pi chain member with an E1 edge to a later member."""
    for i, a in enumerate(chain):
        if any(g.cls[a, b] == E1 for b in chain[i + 1:]):
            return a
    raise InternalError(
        f"(k+1)-chain {chain} has no internal E1 edge; "
        "it would be a longer chain in G2"
    )


def build_transition_graph(
    g: PtGraph,
    k: int,
    budget: int = DEFAULT_CHECK_BUDGET,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> TransitionGraph:
    work = _Work(budget)
    return _build_transition(g, k, work, node_budget)


def _build_transition(g: PtGraph, k: int, work: _Work, node_budget: int) -> TransitionGraph:
    nodes = _enumerate(g, k + 1, work)
    if len(nodes) > node_budget:
        raise BudgetExceeded(f"node budget {node_budget} exhausted ({len(nodes)} chains)")
    if not nodes:
        raise PtError("BAD_INPUT", f"no ({k + 1})-chain exists")
    return _connect_nodes(g, k, nodes, work)


@dataclass(frozen=True)
class TransitionResult:
    value: int
    chain: tuple[int, ...]
    omega_g2: int
    nodes: int
    edges: int
    checks: int

    def to_json(self) -> dict:
        return {
            "algorithm": "transition",
            "omega_g2": self.omega_g2,
            "value": self.value,
            "chain": [int(v) for v in self.chain],
            "nodes": self.nodes,
            "edges": self.edges,
        }


def longest_chain_transition(
    g: PtGraph,
    budget: int = DEFAULT_CHECK_BUDGET,
    node_budget: int = DEFAULT_NODE_BUDGET,
    *,
    validate: bool = True,
) -> TransitionResult:
    """Compute the longest-chain length and a witness via the transition DAG."""
    if g.n == 0:
        raise PtError("EMPTY_GRAPH", "no vertices")
    if validate:
        report = validate_pseudo_transitive(g)
        if not report.ok:
            first = report.violations[0]
            raise PtError(
                "NOT_PSEUDO_TRANSITIVE",
                f"{first.rule} witness {first.witness}",
            )
    work = _Work(budget)
    k, k_chain = _g2_longest(g, work)
    if k + 1 > g.n:
        return TransitionResult(k, k_chain, k, 0, 0, work.used)
    nodes = _enumerate(g, k + 1, work)
    if not nodes:
        return TransitionResult(k, k_chain, k, 0, 0, work.used)
    if len(nodes) > node_budget:
        raise BudgetExceeded(
            f"node budget {node_budget} exhausted ({len(nodes)} chains)", best=k + 1
        )
    tg = _connect_nodes(g, k, nodes, work)
    # longest path over a topological order (pi-sum strictly increases along edges)
    order = sorted(
        range(len(tg.nodes)),
        key=lambda i: (sum(g.pi[v] for v in tg.nodes[i]), tuple(g.pi[v] for v in tg.nodes[i])),
    )
    length = [0] * len(tg.nodes)
    for i in reversed(order):
        for j, _ in tg.edges[i]:
            if length[j] + 1 > length[i]:
                length[i] = length[j] + 1
    best = max(
        range(len(tg.nodes)),
        key=lambda i: (length[i], tuple(-g.pi[v] for v in tg.nodes[i])),
    )
    path_appends = []
    cur = best
    while length[cur] > 0:
        for j, a_star in tg.edges[cur]:
            if length[j] == length[cur] - 1:
                path_appends.append(a_star)
                cur = j
                break
    witness = tg.nodes[best] + tuple(path_appends)
    value = k + 1 + length[best]
    if len(witness) != value or not verify_chain(g, witness):
        raise InternalError(f"transition witness {witness} fails verification")
    return TransitionResult(value, witness, k, len(tg.nodes), tg.n_edges, work.used)


def _connect_nodes(g, k, nodes, work):
    """Add the pivot-replacement edges over an enumerated node list."""
    index = {c: i for i, c in enumerate(nodes)}
    pivots = tuple(_pivot(g, c) for c in nodes)
    cls = g.cls
    edges = []
    for node, pivot in zip(nodes, pivots):
        succs = []
        last = node[-1]
        pivot_pi = g.pi[pivot]
        for a_star in g.out_by_pi[last]:
            work.spend(len(node))
            if all(cls[u, a_star] != ABSENT for u in node):
                succ = tuple(v for v in node if v != pivot) + (a_star,)
                sid = index.get(succ)
                if sid is None:
                    raise InternalError(
                        f"generated tuple {succ} is not a chain; "
                        "input is not pseudo-transitive"
                    )
                if g.pi[a_star] <= pivot_pi:
                    raise PtError("INTERNAL_CYCLE", f"edge {node}->{succ} does not advance")
                succs.append((sid, a_star))
        edges.append(tuple(succs))
    return TransitionGraph(k, tuple(nodes), pivots, tuple(edges))
