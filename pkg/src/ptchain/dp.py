"""Maximum-weight chain in strongly pseudo-transitive graphs.

Four edge-indexed value tables are filled in ascending topological span
pi(y) - pi(x), so every referenced entry is already final:

  W[x,y]  -- best chain from x to y
  W1[x,y] -- best chain from x to y whose every element z != y has zy in E1
             (defined only for E1 edges)
  D[x,y]  -- best degenerate chain from x to y
  D1[x,y] -- best degenerate chain from x to y whose every element k != x,y
             has ky in E1

Each table entry carries a back-pointer for witness reconstruction.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numba import njit

from .core import PtGraph, validate_strong, verify_chain
from .errors import InternalError, PtError

# back-pointer term codes
BASE = 0      # the bare 2-chain x,y
SPLIT = 1     # glued at an intermediate vertex t
PREPEND = 2   # x prepended to a chain starting at t
FROM_DEGEN = 3  # W/W1 falling back to D/D1 for the same edge


@njit(cache=True)
def _solve(n, w, cls, indptr, nbrs, ex, ey):  # pragma: no cover - compiled
    neg = np.int64(-1)
    W = np.full((n, n), neg)
    W1 = np.full((n, n), neg)
    D = np.full((n, n), neg)
    D1 = np.full((n, n), neg)
    tm = np.zeros((4, n, n), dtype=np.int8)    # term per table (W, W1, D, D1)
    tv = np.full((4, n, n), -1, dtype=np.int64)  # intermediate vertex per table
    insp = np.int64(0)
    for e in range(ex.shape[0]):
        x = ex[e]
        y = ey[e]
        base = w[x] + w[y]
        exy1 = cls[x, y] == 1
        bD1s = neg; tD1s = -1
        bD1p = neg; tD1p = -1
        bDs = neg; tDs = -1
        bDp = neg; tDp = -1
        bW1s = neg; tW1s = -1
        bWs = neg; tWs = -1
        # One shared scan over out-neighbors of x evaluates the candidate
        # terms of all four recurrences; entries (x,t) and (t,y) have
        # strictly smaller span and are final.
        for i in range(indptr[x], indptr[x + 1]):
            t = nbrs[i]
            insp += 1
            cty = cls[t, y]
            cxt = cls[x, t]
            if cxt == 2:
                if cty != 0:
                    v = D1[x, t] + D[t, y] - w[t]
                    if v > bDs:
                        bDs = v; tDs = t
                    # The prepend term is kept as a separate case even though
                    # the split term with a 2-chain prefix dominates it.
                    v = D1[t, y] + w[x]
                    if v > bDp:
                        bDp = v; tDp = t
                    if cty == 1:
                        v = D1[x, t] + D1[t, y] - w[t]
                        if v > bD1s:
                            bD1s = v; tD1s = t
                        v = D1[t, y] + w[x]
                        if v > bD1p:
                            bD1p = v; tD1p = t
            elif cxt == 1:
                if cty != 0:
                    v = W1[x, t] + W[t, y] - w[t]
                    if v > bWs:
                        bWs = v; tWs = t
                    if cty == 1 and exy1:
                        v = W1[x, t] + W1[t, y] - w[t]
                        if v > bW1s:
                            bW1s = v; tW1s = t
        # D1: base, then split, then prepend; strict > keeps the preferred term
        v = base; term = 0; mid = -1
        if bD1s > v:
            v = bD1s; term = 1; mid = tD1s
        if bD1p > v:
            v = bD1p; term = 2; mid = tD1p
        D1[x, y] = v; tm[3, x, y] = term; tv[3, x, y] = mid
        # D
        v = base; term = 0; mid = -1
        if bDs > v:
            v = bDs; term = 1; mid = tDs
        if bDp > v:
            v = bDp; term = 2; mid = tDp
        D[x, y] = v; tm[2, x, y] = term; tv[2, x, y] = mid
        # W1 (E1 edges only): degenerate fallback, then split
        if exy1:
            v = D1[x, y]; term = 3; mid = -1
            if bW1s > v:
                v = bW1s; term = 1; mid = tW1s
            W1[x, y] = v; tm[1, x, y] = term; tv[1, x, y] = mid
        # W
        v = D[x, y]; term = 3; mid = -1
        if bWs > v:
            v = bWs; term = 1; mid = tWs
        W[x, y] = v; tm[0, x, y] = term; tv[0, x, y] = mid
    return W, W1, D, D1, tm, tv, insp


_TABLE_INDEX = {"W": 0, "W1": 1, "D": 2, "D1": 3}
# split glues (left table, right table); prepend always recurses into D1
_SPLIT_PARTS = {"W": ("W1", "W"), "W1": ("W1", "W1"), "D": ("D1", "D"), "D1": ("D1", "D1")}


@dataclass(frozen=True)
class DpTables:
    graph: PtGraph
    W: np.ndarray
    W1: np.ndarray
    D: np.ndarray
    D1: np.ndarray
    term: np.ndarray
    mid: np.ndarray
    inspections: int

    def _arr(self, table: str) -> np.ndarray:
        return {"W": self.W, "W1": self.W1, "D": self.D, "D1": self.D1}[table]

    def value(self, table: str, x: int, y: int):
        """Table value for edge (x, y), or None where undefined."""
        v = int(self._arr(table)[x, y])
        return None if v < 0 else v

    def chain(self, table: str, x: int, y: int) -> tuple[int, ...]:
        """Reconstruct the witness chain behind entry (x, y) of a table."""
        if self._arr(table)[x, y] < 0:
            raise InternalError(f"no {table} entry for edge ({x},{y})")
        ti = _TABLE_INDEX[table]
        term = int(self.term[ti, x, y])
        t = int(self.mid[ti, x, y])
        if term == BASE:
            return (x, y)
        if term == FROM_DEGEN:
            return self.chain("D" if table == "W" else "D1", x, y)
        if term == PREPEND:
            return (x,) + self.chain("D1", t, y)
        left, right = _SPLIT_PARTS[table]
        return self.chain(left, x, t) + self.chain(right, t, y)[1:]


def sum_deg_sq(g: PtGraph) -> int:
    """Sum over vertices of squared total degree (the DP work bound)."""
    out = (g.cls != 0).sum(axis=1)
    inn = (g.cls != 0).sum(axis=0)
    return int(((out + inn) ** 2).sum())


def dp_tables(g: PtGraph, *, validate: bool = True) -> DpTables:
    """Fill the four tables over all edges, scheduled by ascending span."""
    if validate:
        report = validate_strong(g)
        if not report.ok:
            first = report.violations[0]
            raise PtError(
                "NOT_STRONG",
                f"graph is not strongly pseudo-transitive: "
                f"{first.rule} witness {first.witness}",
            )
    n = g.n
    pi = np.asarray(g.pi, dtype=np.int64)
    xs, ys = np.nonzero(g.cls)
    xs = xs.astype(np.int64)
    ys = ys.astype(np.int64)
    span = pi[ys] - pi[xs]
    order = np.lexsort((pi[ys], pi[xs], span))
    xs, ys = xs[order], ys[order]
    indptr = np.zeros(n + 1, dtype=np.int64)
    for u in range(n):
        indptr[u + 1] = indptr[u] + len(g.out_adj[u])
    nbrs = (
        np.concatenate([np.asarray(a, dtype=np.int64) for a in g.out_adj])
        if indptr[n] > 0
        else np.zeros(0, dtype=np.int64)
    )
    W, W1, D, D1, tm, tv, insp = _solve(n, g.w64, g.cls, indptr, nbrs, xs, ys)
    return DpTables(g, W, W1, D, D1, tm, tv, int(insp))


def max_weight_chain_dp(g: PtGraph, *, validate: bool = True):
    """Maximum total-weight chain; returns (value, chain).

    Ties among witnesses are broken by lexicographically smallest pi-sequence.
    """
    if g.n == 0:
        raise PtError("EMPTY_GRAPH", "no vertices")
    tables = dp_tables(g, validate=validate)
    best_single = max(g.weight)
    best = best_single
    if g.m > 0:
        best = max(best, int(tables.W.max()))

    def pi_key(chain):
        return tuple(g.pi[v] for v in chain)

    candidates = []
    if best_single == best:
        v = min((u for u in range(g.n) if g.weight[u] == best), key=lambda u: g.pi[u])
        candidates.append((v,))
    for x, y in zip(*np.nonzero(tables.W == best)):
        candidates.append(tables.chain("W", int(x), int(y)))
    chain = min(candidates, key=pi_key)
    if not verify_chain(g, chain) or sum(g.weight[v] for v in chain) != best:
        raise InternalError(f"reconstructed witness {chain} fails verification")
    return best, tuple(chain)


def result_record(value: int, chain) -> dict:
    return {"algorithm": "dp", "value": int(value), "chain": [int(v) for v in chain]}
