"""Brute-force references and seeded generators."""

import pytest

from ptchain.core import build_graph, validate_strong, verify_chain
from ptchain.errors import PtError
from ptchain.geometry import (
    CHORDS,
    GROUNDED_SEGMENTS,
    RECTS,
    SEGMENTS,
    build_order,
    instance_to_json,
    mis_grounded_segments_exact,
)
from ptchain.oracle import (
    RAW_E2_TOURNAMENT,
    GenSpec,
    brute_max_weight_chain,
    brute_mis,
    generate,
    random_weights,
)


# -- brute_max_weight_chain ---------------------------------------------------

def test_brute_edgeless_picks_heaviest_vertex():
    g = build_graph([], [], [2, 7, 5])
    assert brute_max_weight_chain(g) == (7, (1,))


def test_brute_single_edge():
    g = build_graph([(0, 1)], [], [3, 4])
    assert brute_max_weight_chain(g) == (7, (0, 1))


def test_brute_tournament_whole_vertex_set():
    g = build_graph([], [(i, j) for i in range(4) for j in range(i + 1, 4)], [1] * 4)
    assert brute_max_weight_chain(g) == (4, (0, 1, 2, 3))


def test_brute_caps():
    with pytest.raises(PtError) as e:
        brute_max_weight_chain(build_graph([], [], [1] * 25))
    assert e.value.code == "TOO_LARGE"
    with pytest.raises(PtError) as e:
        brute_max_weight_chain(build_graph([], [], []))
    assert e.value.code == "EMPTY_GRAPH"


# -- brute_mis ----------------------------------------------------------------

def test_brute_mis_crossing_and_nested(interval_instance):
    from ptchain.geometry import ChordInterval, make_instance

    crossing = make_instance(
        CHORDS, [ChordInterval(0, 3), ChordInterval(1, 4), ChordInterval(2, 5)])
    assert brute_mis(crossing) == (1, (0,))
    nested = make_instance(
        CHORDS, [ChordInterval(0, 5), ChordInterval(1, 4), ChordInterval(2, 3)])
    assert brute_mis(nested) == (3, (0, 1, 2))
    assert brute_mis(interval_instance) == (4, (0, 1, 2, 3))


def test_brute_mis_cap():
    inst = generate(GenSpec(kind=CHORDS, n=21, seed=0, coordinate_range=60))
    with pytest.raises(PtError) as e:
        brute_mis(inst)
    assert e.value.code == "TOO_LARGE"


# -- generators ---------------------------------------------------------------

def test_generate_deterministic_bytes():
    for kind in (CHORDS, GROUNDED_SEGMENTS, RECTS, SEGMENTS):
        spec = GenSpec(kind=kind, n=8, seed=42, coordinate_range=40)
        a, b = generate(spec), generate(spec)
        assert instance_to_json(a) == instance_to_json(b)


def test_generate_tournament_deterministic_and_strong():
    for seed in range(10):
        spec = GenSpec(kind=RAW_E2_TOURNAMENT, n=8, seed=seed, weight_range=(0, 9))
        g1, g2 = generate(spec), generate(spec)
        assert g1.weight == g2.weight
        assert g1.e1_edges() == g2.e1_edges() and g1.e2_edges() == g2.e2_edges()
        assert validate_strong(g1).ok
        # the whole vertex set stays a chain under any promotion pattern
        assert verify_chain(g1, range(8))


def test_generated_chords_are_strong():
    for seed in range(100):
        inst = generate(GenSpec(kind=CHORDS, n=12, seed=seed, coordinate_range=48))
        assert validate_strong(build_order(inst)).ok


def test_generated_acute_grounded_accepted_by_exact_solver():
    for seed in range(100):
        inst = generate(GenSpec(kind=GROUNDED_SEGMENTS, n=10, seed=seed,
                                coordinate_range=30))
        for s in inst.items:
            assert s.by == 0 and s.ty > 0 and s.tx > s.bx
        got = mis_grounded_segments_exact(inst.items)
        assert 1 <= len(got) <= 10


def test_gen_spec_validation():
    cases = [
        dict(kind="blobs", n=4, seed=0),
        dict(kind=CHORDS, n=0, seed=0),
        dict(kind=CHORDS, n=4, seed=0, coordinate_range=0),
        dict(kind=CHORDS, n=4, seed=0, weight_range=(5, 2)),
        dict(kind=GROUNDED_SEGMENTS, n=4, seed=0, lean="up"),
    ]
    for kwargs in cases:
        with pytest.raises(PtError) as e:
            GenSpec(**kwargs)
        assert e.value.code == "BAD_SPEC"
    with pytest.raises(PtError) as e:
        generate(GenSpec(kind=CHORDS, n=10, seed=0, coordinate_range=12))
    assert e.value.code == "BAD_SPEC"  # needs 2n distinct endpoint positions


def test_random_weights_seeded():
    a = random_weights(6, 3)
    assert a == random_weights(6, 3)
    assert all(0 <= w <= 20 for w in a)
    assert random_weights(6, 4) != a
