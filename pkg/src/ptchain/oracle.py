"""Brute-force references and seeded instance generators.

The brute-force routines enumerate candidate solutions directly from the
disjointness / adjacency predicates and never touch the DP or transition
code paths; every algorithm in the package is tested against them.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .core import ABSENT, PtGraph, build_graph, validate_strong
from .errors import PtError
from .geometry import (
    CHORDS,
    GROUNDED_SEGMENTS,
    RECTS,
    SEGMENTS,
    ChordInterval,
    GeomInstance,
    Rect,
    Segment,
    disjoint,
    make_instance,
)

RAW_E2_TOURNAMENT = "raw_e2_tournament"

BRUTE_CHAIN_CAP = 24
BRUTE_MIS_CAP = 20


@dataclass(frozen=True)
class GenSpec:
    kind: str
    n: int
    seed: int
    coordinate_range: int = 100
    weight_range: tuple[int, int] = (1, 1)
    lean: str = "acute"  # grounded segments only: acute | mixed

    def __post_init__(self):
        if self.n < 1:
            raise PtError("BAD_SPEC", f"n must be >= 1, got {self.n}")
        if self.kind not in (SEGMENTS, GROUNDED_SEGMENTS, RECTS, CHORDS, RAW_E2_TOURNAMENT):
            raise PtError("BAD_SPEC", f"unknown kind {self.kind!r}")
        if self.coordinate_range < 1:
            raise PtError("BAD_SPEC", "coordinate_range must be positive")
        lo, hi = self.weight_range
        if not (0 <= lo <= hi):
            raise PtError("BAD_SPEC", f"bad weight_range {self.weight_range}")
        if self.lean not in ("acute", "mixed"):
            raise PtError("BAD_SPEC", f"lean must be acute or mixed, got {self.lean!r}")


def brute_max_weight_chain(g: PtGraph):
    """Exhaustive maximum-weight chain by ordered extension.

    Returns (weight, chain); ties resolved to the pi-lexicographically
    smallest witness (depth-first preorder in pi order visits chains in
    exactly that order, so a strict improvement test suffices).
    """
    if g.n == 0:
        raise PtError("EMPTY_GRAPH", "no vertices")
    if g.n > BRUTE_CHAIN_CAP:
        raise PtError("TOO_LARGE", f"n={g.n} exceeds brute-force cap {BRUTE_CHAIN_CAP}")
    cls = g.cls
    best_w = -1
    best_c: tuple[int, ...] = ()

    def extend(chain, total):
        nonlocal best_w, best_c
        if total > best_w:
            best_w = total
            best_c = tuple(chain)
        last = chain[-1]
        for v in g.out_by_pi[last]:
            if all(cls[u, v] != ABSENT for u in chain):
                chain.append(v)
                extend(chain, total + g.weight[v])
                chain.pop()

    for v in g.vertices_by_pi:
        extend([v], g.weight[v])
    return best_w, best_c


def brute_mis(inst: GeomInstance):
    """Exhaustive maximum independent set over all subsets.

    Returns (size, indices); ties resolved to the lexicographically smallest
    index set.
    """
    items = inst.items
    n = len(items)
    if n > BRUTE_MIS_CAP:
        raise PtError("TOO_LARGE", f"n={n} exceeds brute-force cap {BRUTE_MIS_CAP}")
    conflict = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if not disjoint(items[i], items[j]):
                conflict[i] |= 1 << j
                conflict[j] |= 1 << i
    best_size = 0
    best_set: tuple[int, ...] = ()
    for mask in range(1 << n):
        members = [i for i in range(n) if mask >> i & 1]
        if len(members) < best_size:
            continue
        if any(mask & conflict[i] for i in members):
            continue
        cand = tuple(members)
        if len(cand) > best_size or (len(cand) == best_size and cand < best_set):
            best_size = len(cand)
            best_set = cand
    return best_size, best_set


# -- generators --------------------------------------------------------------

def _gen_chords(rng, n, coord_range):
    if coord_range < 2 * n:
        raise PtError("BAD_SPEC", f"coordinate_range {coord_range} < 2n = {2 * n}")
    positions = rng.sample(range(coord_range), 2 * n)
    items = [
        ChordInterval(min(positions[2 * i], positions[2 * i + 1]),
                      max(positions[2 * i], positions[2 * i + 1]))
        for i in range(n)
    ]
    return make_instance(CHORDS, items)


def _gen_grounded(rng, n, coord_range, lean):
    slope = max(1, coord_range // 4)
    items = set()
    while len(items) < n:
        bx = rng.randint(0, coord_range)
        ty = rng.randint(1, coord_range)
        if lean == "acute":
            dx = rng.randint(1, slope)
        else:
            dx = rng.randint(-slope, slope)
        items.add(Segment(bx, 0, bx + dx, ty))
    return make_instance(GROUNDED_SEGMENTS, sorted(items))


def _gen_segments(rng, n, coord_range):
    items = set()
    while len(items) < n:
        bx = rng.randint(0, coord_range)
        by = rng.randint(0, coord_range)
        tx = rng.randint(0, coord_range)
        ty = rng.randint(0, coord_range)
        if (bx, by) != (tx, ty):
            items.add(Segment(bx, by, tx, ty))
    return make_instance(SEGMENTS, sorted(items))


def _gen_rects(rng, n, coord_range, height=2):
    width = max(1, coord_range // 4)
    items = set()
    while len(items) < n:
        xmin = rng.randint(0, coord_range)
        xmax = xmin + rng.randint(1, width)
        ymin = rng.randint(0, coord_range)
        items.add(Rect(xmin, xmax, ymin, ymin + height))
    return make_instance(RECTS, sorted(items))


def _gen_tournament(rng, n, weight_range):
    """Transitive tournament all in E2, with a random subset of pairs promoted
    to E1 whenever the promotion keeps both validators green."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    order = pairs[:]
    rng.shuffle(order)
    e1 = set()
    weights = [rng.randint(*weight_range) for _ in range(n)]
    for p in order:
        if rng.random() < 0.4:
            continue
        trial = e1 | {p}
        g = build_graph(sorted(trial), sorted(set(pairs) - trial), weights)
        if validate_strong(g).ok:
            e1 = trial
    return build_graph(sorted(e1), sorted(set(pairs) - e1), weights)


def generate(spec: GenSpec):
    """Deterministic pseudo-random instance for a spec; same spec, same bytes."""
    rng = random.Random(spec.seed)
    if spec.kind == CHORDS:
        return _gen_chords(rng, spec.n, spec.coordinate_range)
    if spec.kind == GROUNDED_SEGMENTS:
        return _gen_grounded(rng, spec.n, spec.coordinate_range, spec.lean)
    if spec.kind == SEGMENTS:
        return _gen_segments(rng, spec.n, spec.coordinate_range)
    if spec.kind == RECTS:
        return _gen_rects(rng, spec.n, spec.coordinate_range)
    return _gen_tournament(rng, spec.n, spec.weight_range)


def random_weights(n: int, seed: int, weight_range=(0, 20)) -> list[int]:
    """Seeded weight vector for weighted-DP suites."""
    rng = random.Random(seed)
    return [rng.randint(*weight_range) for _ in range(n)]
