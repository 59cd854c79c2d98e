"""Planar objects, exact integer disjointness predicates, and the order
construction that turns disjointness into a pseudo-transitive DAG.

Objects are closed sets: boundary contact counts as intersection.  The
separating direction is fixed as vertical; callers pre-rotate if needed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .core import PtGraph, build_graph, validate_strong
from .dp import max_weight_chain_dp
from .errors import InternalError, PtError
from .transition import (
    DEFAULT_CHECK_BUDGET,
    DEFAULT_NODE_BUDGET,
    longest_chain_transition,
)

SEGMENTS = "segments"
GROUNDED_SEGMENTS = "grounded_segments"
RECTS = "rects"
CHORDS = "chords"
KINDS = (SEGMENTS, GROUNDED_SEGMENTS, RECTS, CHORDS)


@dataclass(frozen=True, order=True)
class Segment:
    bx: int
    by: int
    tx: int
    ty: int

    def __post_init__(self):
        if (self.bx, self.by) == (self.tx, self.ty):
            raise PtError("BAD_INPUT", "degenerate segment (base == top)")


@dataclass(frozen=True, order=True)
class Rect:
    xmin: int
    xmax: int
    ymin: int
    ymax: int

    def __post_init__(self):
        if not (self.xmin < self.xmax and self.ymin < self.ymax):
            raise PtError("BAD_INPUT", f"empty rectangle {self}")


@dataclass(frozen=True, order=True)
class ChordInterval:
    """A chord of a circle, cut open into an interval [l, r] of endpoint positions."""

    l: int
    r: int

    def __post_init__(self):
        if not self.l < self.r:
            raise PtError("BAD_INPUT", f"chord needs l < r, got {self}")


@dataclass(frozen=True)
class GeomInstance:
    kind: str
    items: tuple


def make_instance(kind: str, items) -> GeomInstance:
    items = tuple(items)
    if kind not in KINDS:
        raise PtError("BAD_INPUT", f"unknown kind {kind!r}")
    if len(set(items)) != len(items):
        raise PtError("DUPLICATE_OBJECT", "instance items must be distinct")
    if kind == GROUNDED_SEGMENTS:
        for s in items:
            if not (s.by == 0 and s.ty > 0):
                raise PtError("NOT_GROUNDED", f"segment {s} is not grounded on y=0")
    if kind == CHORDS:
        endpoints = [v for c in items for v in (c.l, c.r)]
        if len(set(endpoints)) != len(endpoints):
            raise PtError("BAD_CHORDS", "chord endpoint positions must be distinct")
    return GeomInstance(kind, items)


# -- predicates --------------------------------------------------------------

def _sign(v: int) -> int:
    return (v > 0) - (v < 0)


def _orient(ax, ay, bx, by, cx, cy) -> int:
    return _sign((bx - ax) * (cy - ay) - (by - ay) * (cx - ax))


def _on_segment(ax, ay, bx, by, px, py) -> bool:
    """p collinear with ab; is p inside ab's bounding box."""
    return min(ax, bx) <= px <= max(ax, bx) and min(ay, by) <= py <= max(ay, by)


def _segments_intersect(s: Segment, t: Segment) -> bool:
    a = (s.bx, s.by)
    b = (s.tx, s.ty)
    c = (t.bx, t.by)
    d = (t.tx, t.ty)
    o1 = _orient(*a, *b, *c)
    o2 = _orient(*a, *b, *d)
    o3 = _orient(*c, *d, *a)
    o4 = _orient(*c, *d, *b)
    if o1 != o2 and o3 != o4:
        return True
    if o1 == 0 and _on_segment(*a, *b, *c):
        return True
    if o2 == 0 and _on_segment(*a, *b, *d):
        return True
    if o3 == 0 and _on_segment(*c, *d, *a):
        return True
    if o4 == 0 and _on_segment(*c, *d, *b):
        return True
    return False


def disjoint(a, b) -> bool:
    """Exact closed-set disjointness for two objects of the same kind."""
    if type(a) is not type(b):
        raise PtError("KIND_MISMATCH", f"{type(a).__name__} vs {type(b).__name__}")
    if isinstance(a, Segment):
        return not _segments_intersect(a, b)
    if isinstance(a, Rect):
        overlap_x = a.xmin <= b.xmax and b.xmin <= a.xmax
        overlap_y = a.ymin <= b.ymax and b.ymin <= a.ymax
        return not (overlap_x and overlap_y)
    if isinstance(a, ChordInterval):
        if a.r < b.l or b.r < a.l:
            return True  # intervals disjoint
        nested = (a.l < b.l and b.r < a.r) or (b.l < a.l and a.r < b.r)
        return nested  # interleaved intervals = crossing chords
    raise PtError("KIND_MISMATCH", f"unsupported object {a!r}")


def _x_extent(obj):
    if isinstance(obj, Segment):
        return min(obj.bx, obj.tx), max(obj.bx, obj.tx)
    if isinstance(obj, Rect):
        return obj.xmin, obj.xmax
    return obj.l, obj.r


# -- order construction ------------------------------------------------------

def build_order(inst: GeomInstance, weights=None) -> PtGraph:
    """Pseudo-transitive order over an instance: an (undirected) edge exists
    iff the objects are disjoint.

    Generic kinds: E1 holds pairs strictly separated by a vertical line;
    every other disjoint pair gets an E2 edge oriented from smaller
    leftmost-x to larger, ties by smaller item index (a fixed acyclic
    completion).

    Grounded segments get a strictly stronger split.  A grounded segment
    meets every horizontal line at most once, so two disjoint ones keep one
    left-right order at all shared heights, fixed by their base x.  Orient
    from smaller base x; the edge is E1 when the left segment's top height
    does not exceed the right one's, E2 otherwise.  Both classes are then
    transitive (the vertical-separation split is not: a long low segment
    can pass over two separated short ones).
    """
    items = inst.items
    n = len(items)
    if len(set(items)) != len(items):
        raise PtError("DUPLICATE_OBJECT", "instance items must be distinct")
    e1, e2 = [], []
    if inst.kind == GROUNDED_SEGMENTS:
        for i in range(n):
            for j in range(i + 1, n):
                if not disjoint(items[i], items[j]):
                    continue
                # disjoint grounded segments never share a base point
                a, b = (i, j) if items[i].bx < items[j].bx else (j, i)
                if items[a].ty <= items[b].ty:
                    e1.append((a, b))
                else:
                    e2.append((a, b))
    else:
        extents = [_x_extent(o) for o in items]
        for i in range(n):
            for j in range(i + 1, n):
                if not disjoint(items[i], items[j]):
                    continue
                (imin, imax), (jmin, jmax) = extents[i], extents[j]
                if imax < jmin:
                    e1.append((i, j))
                elif jmax < imin:
                    e1.append((j, i))
                elif imin <= jmin:
                    e2.append((i, j))
                else:
                    e2.append((j, i))
    if weights is None:
        weights = [1] * n
    return build_graph(e1, e2, weights)


# -- maximum independent sets ------------------------------------------------

def _check_certificate(items, indices):
    idx = sorted(indices)
    for a in range(len(idx)):
        for b in range(a + 1, len(idx)):
            if not disjoint(items[idx[a]], items[idx[b]]):
                raise InternalError(
                    f"certificate failure: items {idx[a]} and {idx[b]} intersect"
                )
    return tuple(idx)


def _solve_strong(items, kind) -> tuple[int, ...]:
    """Exact MIS of a family whose order is strongly pseudo-transitive."""
    g = build_order(GeomInstance(kind, tuple(items)))
    report = validate_strong(g)
    if not report.ok:
        first = report.violations[0]
        raise PtError(
            "NOT_STRONG",
            f"order is not strongly pseudo-transitive: {first.rule} {first.witness}",
        )
    _, chain = max_weight_chain_dp(g, validate=False)
    return tuple(sorted(chain))


def _check_grounded(segments):
    for s in segments:
        if not (s.by == 0 and s.ty > 0):
            raise PtError("NOT_GROUNDED", f"segment {s} is not grounded on y=0")


def mis_grounded_segments_exact(segments) -> tuple[int, ...]:
    """Maximum set of pairwise-disjoint grounded segments, all leaning
    strictly right (the shared-acute-angle convention)."""
    segs = tuple(segments)
    _check_grounded(segs)
    for s in segs:
        if not s.tx > s.bx:
            raise PtError("NOT_ACUTE", f"segment {s} does not lean strictly right")
    if not segs:
        return ()
    result = _solve_strong(segs, GROUNDED_SEGMENTS)
    return _check_certificate(segs, result)


def _mirror(s: Segment) -> Segment:
    return Segment(-s.bx, s.by, -s.tx, s.ty)


def mis_grounded_segments_half(segments) -> tuple[int, ...]:
    """At-least-half-optimal independent set of grounded segments with
    arbitrary lean.

    Solves the right-leaning class (verticals included) and the mirrored
    left-leaning class exactly and keeps the larger answer; the optimum
    meets one class in at least half its size.
    """
    segs = tuple(segments)
    _check_grounded(segs)
    right = [i for i, s in enumerate(segs) if s.tx >= s.bx]
    left = [i for i, s in enumerate(segs) if s.tx < s.bx]
    right_sol: tuple[int, ...] = ()
    if right:
        sol = _solve_strong([segs[i] for i in right], GROUNDED_SEGMENTS)
        right_sol = tuple(right[i] for i in sol)
    left_sol: tuple[int, ...] = ()
    if left:
        sol = _solve_strong([_mirror(segs[i]) for i in left], GROUNDED_SEGMENTS)
        left_sol = tuple(left[i] for i in sol)
    best = right_sol if len(right_sol) >= len(left_sol) else left_sol
    return _check_certificate(segs, best)


def mis_circle(chords) -> tuple[int, ...]:
    """Maximum set of pairwise non-crossing chords (exact)."""
    items = tuple(chords)
    endpoints = [v for c in items for v in (c.l, c.r)]
    if len(set(endpoints)) != len(endpoints):
        raise PtError("BAD_CHORDS", "chord endpoint positions must be distinct")
    if not items:
        return ()
    result = _solve_strong(items, CHORDS)
    return _check_certificate(items, result)


def mis_rectangles(
    rects,
    budget: int = DEFAULT_CHECK_BUDGET,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> tuple[int, ...]:
    """Maximum set of pairwise-disjoint unit-height axis-parallel rectangles."""
    items = tuple(rects)
    heights = {r.ymax - r.ymin for r in items}
    if len(heights) > 1:
        raise PtError("NOT_UNIT_HEIGHT", f"rectangle heights differ: {sorted(heights)}")
    if not items:
        return ()
    g = build_order(GeomInstance(RECTS, items))
    result = longest_chain_transition(g, budget, node_budget)
    return _check_certificate(items, result.chain)


# -- instance files (JSON) ---------------------------------------------------

def instance_to_json(inst: GeomInstance) -> dict:
    if inst.kind in (SEGMENTS, GROUNDED_SEGMENTS):
        items = [[s.bx, s.by, s.tx, s.ty] for s in inst.items]
    elif inst.kind == RECTS:
        items = [[r.xmin, r.xmax, r.ymin, r.ymax] for r in inst.items]
    else:
        items = [[c.l, c.r] for c in inst.items]
    return {"kind": inst.kind, "items": items}


def instance_from_json(data: dict) -> GeomInstance:
    try:
        kind = data["kind"]
        raw = data["items"]
    except (KeyError, TypeError) as exc:
        raise PtError("BAD_INPUT", f"malformed instance record: {exc}") from exc
    if kind in (SEGMENTS, GROUNDED_SEGMENTS):
        items = [Segment(*map(int, it)) for it in raw]
    elif kind == RECTS:
        items = [Rect(*map(int, it)) for it in raw]
    elif kind == CHORDS:
        items = [ChordInterval(*map(int, it)) for it in raw]
    else:
        raise PtError("BAD_INPUT", f"unknown kind {kind!r}")
    return make_instance(kind, items)


def load_instance(path) -> GeomInstance:
    with open(path) as fh:
        return instance_from_json(json.load(fh))


def save_instance(inst: GeomInstance, path) -> None:
    with open(path, "w") as fh:
        json.dump(instance_to_json(inst), fh, sort_keys=True, separators=(",", ":"))
        fh.write("\n")
