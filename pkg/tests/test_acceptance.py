"""Acceptance gate: one test per release criterion, one printed verdict each.

Run with ``pytest tests/test_acceptance.py -s`` to see the per-criterion
lines.  Every criterion is exact (integer arithmetic, tolerance zero) except
the wall-clock bound, which is stated in seconds.
"""

import itertools
import time

from conftest import all_chains, is_degenerate_seq
from ptchain import cli
from ptchain.core import (
    DEGENERATE,
    E1,
    build_graph,
    chain_weight,
    classify_chain,
    validate_pseudo_transitive,
    validate_strong,
    verify_chain,
)
from ptchain.dp import dp_tables, max_weight_chain_dp, sum_deg_sq
from ptchain.geometry import (
    CHORDS,
    GROUNDED_SEGMENTS,
    RECTS,
    SEGMENTS,
    build_order,
    disjoint,
    save_instance,
)
from ptchain.oracle import (
    RAW_E2_TOURNAMENT,
    GenSpec,
    brute_max_weight_chain,
    brute_mis,
    generate,
    random_weights,
)
from ptchain.transition import (
    build_transition_graph,
    enumerate_chains,
    longest_chain_transition,
    omega_g2,
)


def _verdict(name, failures, extra=""):
    if failures:
        print(f"ACCEPTANCE {name}: FAIL "
              f"({len(failures)} violations; first: {failures[0]})")
    else:
        print(f"ACCEPTANCE {name}: PASS{extra}")
    assert not failures, f"{name}: first violations {failures[:3]}"


def _strong_suite():
    """>= 1000 strongly pseudo-transitive instances with n <= 12 and
    seeded weights in [0, 20]."""
    idx = 0
    for n in range(2, 13):
        for seed in range(40):
            for kind in (CHORDS, GROUNDED_SEGMENTS):
                inst = generate(GenSpec(kind=kind, n=n, seed=seed,
                                        coordinate_range=4 * n + 4))
                yield build_order(inst, random_weights(n, idx))
                idx += 1
    for n in range(3, 11):
        for seed in range(20):
            yield generate(GenSpec(kind=RAW_E2_TOURNAMENT, n=n, seed=seed,
                                   weight_range=(0, 20)))
            idx += 1
    # hand-crafted corners
    yield build_graph([(0, 1)], [(1, 2), (0, 2)], [20, 0, 7])
    yield build_graph([(0, 1), (0, 2), (1, 2)], [], [5, 5, 5])
    yield build_graph([], [], [13])
    yield build_graph([(0, 1)], [], [3, 4])


def test_dp_oracle_equivalence():
    failures, count = [], 0
    for g in _strong_suite():
        count += 1
        value, chain = max_weight_chain_dp(g)
        bvalue, _ = brute_max_weight_chain(g)
        if value != bvalue:
            failures.append((count, value, bvalue))
        elif not verify_chain(g, chain) or chain_weight(g, chain) != value:
            failures.append((count, "bad witness", chain))
    assert count >= 1000
    _verdict("dp-oracle-equivalence", failures, f" ({count} instances)")


def _transition_suite():
    """>= 300 pseudo-transitive instances, n <= 20, short longest all-E2
    chain (narrow rectangle families keep it at 3 or less)."""
    out = []
    for n in range(6, 21):
        for seed in range(30):
            inst = generate(GenSpec(kind=RECTS, n=n, seed=seed, coordinate_range=8))
            g = build_order(inst)
            if omega_g2(g) <= 3:
                out.append(g)
            if len(out) == 340:
                return out
    return out


def test_transition_oracle_equivalence():
    failures, count = [], 0
    gs = _transition_suite()
    assert len(gs) >= 300
    for g in gs:
        count += 1
        res = longest_chain_transition(g)
        bvalue, _ = brute_max_weight_chain(g)  # unit weights: weight = length
        if res.value != bvalue:
            failures.append((count, res.value, bvalue))
        elif len(res.chain) != res.value or not verify_chain(g, res.chain):
            failures.append((count, "bad witness", res.chain))
    _verdict("transition-oracle-equivalence", failures, f" ({count} instances)")


def test_dp_transition_agreement():
    failures, count = [], 0
    suites = [
        GenSpec(kind=CHORDS, n=n, seed=seed, coordinate_range=4 * n + 4)
        for n in range(4, 15) for seed in range(15)
    ] + [
        GenSpec(kind=GROUNDED_SEGMENTS, n=n, seed=seed, coordinate_range=3 * n)
        for n in range(4, 13) for seed in range(10)
    ]
    for spec in suites:
        g = build_order(generate(spec))
        if not validate_strong(g).ok:  # both preconditions must hold
            continue
        count += 1
        dp_value, _ = max_weight_chain_dp(g, validate=False)
        if dp_value != longest_chain_transition(g, validate=False).value:
            failures.append((spec.kind, spec.n, spec.seed))
    assert count >= 200
    _verdict("dp-transition-agreement", failures, f" ({count} instances)")


def test_order_construction_suite():
    failures, count = [], 0
    t0 = time.perf_counter()
    sizes = (10, 20, 30, 45, 60)
    kinds = (CHORDS, GROUNDED_SEGMENTS, SEGMENTS, RECTS)
    for n, kind in itertools.product(sizes, kinds):
        for seed in range(25):
            lean = "mixed" if kind == GROUNDED_SEGMENTS and seed % 2 else "acute"
            inst = generate(GenSpec(kind=kind, n=n, seed=seed,
                                    coordinate_range=3 * n, lean=lean))
            g = build_order(inst)
            count += 1
            if not validate_pseudo_transitive(g).ok:
                failures.append((kind, n, seed, "not pseudo-transitive"))
                continue
            for i in range(n):
                for j in range(i + 1, n):
                    und = g.has_edge(i, j) or g.has_edge(j, i)
                    if und != disjoint(inst.items[i], inst.items[j]):
                        failures.append((kind, n, seed, i, j))
    elapsed = time.perf_counter() - t0
    assert count >= 500
    if elapsed >= 120:
        failures.append(("runtime", elapsed))
    _verdict("order-construction-suite", failures,
             f" ({count} instances, {elapsed:.1f}s)")


def test_geometric_exactness():
    failures = []
    from ptchain.geometry import mis_circle, mis_grounded_segments_exact

    circle = 0
    for n in range(4, 13):
        for seed in range(34):
            inst = generate(GenSpec(kind=CHORDS, n=n, seed=seed,
                                    coordinate_range=4 * n))
            circle += 1
            opt, _ = brute_mis(inst)
            if len(mis_circle(inst.items)) != opt:
                failures.append((CHORDS, n, seed))
    grounded = 0
    for n in range(3, 11):
        for seed in range(25):
            inst = generate(GenSpec(kind=GROUNDED_SEGMENTS, n=n, seed=seed,
                                    coordinate_range=3 * n))
            grounded += 1
            opt, _ = brute_mis(inst)
            if len(mis_grounded_segments_exact(inst.items)) != opt:
                failures.append((GROUNDED_SEGMENTS, n, seed))
    assert circle >= 300 and grounded >= 200
    _verdict("geometric-exactness", failures,
             f" ({circle} chord + {grounded} grounded instances)")


def test_half_approximation_bound():
    from ptchain.geometry import mis_grounded_segments_half

    failures, count = [], 0
    for n in range(4, 15):
        for seed in range(19):
            inst = generate(GenSpec(kind=GROUNDED_SEGMENTS, n=n, seed=seed,
                                    coordinate_range=3 * n, lean="mixed"))
            count += 1
            opt, _ = brute_mis(inst)
            got = len(mis_grounded_segments_half(inst.items))
            if got < -(-opt // 2):
                failures.append((n, seed, got, opt))
    assert count >= 200
    _verdict("half-approximation-bound", failures, f" ({count} instances)")


def test_complexity_smoke():
    failures = []
    # warm the compiled kernel so the timing below measures the algorithm
    dp_tables(build_order(generate(
        GenSpec(kind=CHORDS, n=4, seed=0, coordinate_range=20))))
    for n in (50, 100, 200, 500):
        inst = generate(GenSpec(kind=CHORDS, n=n, seed=1, coordinate_range=4 * n + 4))
        g = build_order(inst)
        t0 = time.perf_counter()
        tables = dp_tables(g)
        value, chain = max_weight_chain_dp(g, validate=False)
        elapsed = time.perf_counter() - t0
        bound = 4 * (sum_deg_sq(g) + n * n)
        if tables.inspections > bound:
            failures.append((n, "counter", tables.inspections, bound))
        if chain_weight(g, chain) != value:
            failures.append((n, "witness"))
        if n == 500:
            if elapsed >= 5.0:
                failures.append((n, "wall time", elapsed))
            extra = f" (n=500: {elapsed:.2f}s, {tables.inspections} inspections)"
    _verdict("complexity-smoke", failures, extra)


def _lemma_failures(g, label):
    failures = []
    chains = all_chains(g, 1)
    by_start = {}
    for c in chains:
        by_start.setdefault(c[0], []).append(c)
    for c in chains:
        if len(c) < 3:
            continue
        cc = classify_chain(g, c)
        # degenerate iff no internal vertex receives only-E1 from all earlier
        if (cc.kind == DEGENERATE) != is_degenerate_seq(g, c):
            failures.append((label, "degenerate-iff", c))
        # the suffix from the last splitting element is degenerate or short
        if cc.kind != DEGENERATE:
            suffix = c[c.index(cc.last_split):]
            if len(suffix) >= 3 and classify_chain(g, suffix).kind != DEGENERATE:
                failures.append((label, "suffix-degenerate", c))
        # gluing: an all-E1-into-last prefix joins any chain leaving its last
        t = c[-1]
        if all(g.cls[z, t] == E1 for z in c[:-1]):
            for c2 in by_start.get(t, []):
                if not verify_chain(g, c + c2[1:]):
                    failures.append((label, "gluing", c, c2))
    # pivot removal: extendability is unchanged by dropping the pivot
    k = omega_g2(g)
    if k + 1 <= g.n and enumerate_chains(g, k + 1):
        tg = build_transition_graph(g, k)
        for node, pivot in zip(tg.nodes, tg.pivot):
            hi = max(g.pi[v] for v in node)
            reduced = tuple(v for v in node if v != pivot)
            for ext in chains:
                if min(g.pi[v] for v in ext) <= hi:
                    continue
                if verify_chain(g, node + ext) != verify_chain(g, reduced + ext):
                    failures.append((label, "pivot-removal", node, ext))
    return failures


def test_lemma_suites():
    failures, count = [], 0
    for kind, cr in ((CHORDS, 40), (GROUNDED_SEGMENTS, 27), (RECTS, 10)):
        for n in (7, 8, 9):  # exhaustive over every chain at these sizes
            for seed in range(6):
                g = build_order(generate(
                    GenSpec(kind=kind, n=n, seed=seed, coordinate_range=cr)))
                failures += _lemma_failures(g, (kind, n, seed))
                count += 1
    for seed in range(4):  # larger randomized instances
        g = build_order(generate(
            GenSpec(kind=CHORDS, n=12, seed=seed, coordinate_range=48)))
        failures += _lemma_failures(g, (CHORDS, 12, seed))
        count += 1
    _verdict("lemma-suites", failures, f" ({count} instances)")


def test_determinism(tmp_path, capsys):
    failures = []

    def stdout_of(argv):
        assert cli.main(argv) == 0
        return capsys.readouterr().out

    chord_path = str(tmp_path / "chords.json")
    save_instance(generate(GenSpec(kind=CHORDS, n=10, seed=11,
                                   coordinate_range=44)), chord_path)
    rect_path = str(tmp_path / "rects.json")
    save_instance(generate(GenSpec(kind=RECTS, n=10, seed=2,
                                   coordinate_range=10)), rect_path)
    commands = [
        ["validate", chord_path],
        ["chain", chord_path, "--algo", "dp"],
        ["chain", chord_path, "--algo", "brute"],
        ["chain", rect_path, "--algo", "transition"],
        ["mis", chord_path],
        ["gen", "--kind", "chords", "--n", "8", "--seed", "9",
         "--coord-range", "32", "--out", str(tmp_path / "g.json")],
    ]
    for argv in commands:
        if stdout_of(argv) != stdout_of(argv):
            failures.append(argv)
    # bench output is deterministic up to the measured-time column
    bench = ["bench", "--suite", "dp-scaling", "--sizes", "20,40", "--seed", "4"]
    strip = lambda out: [line.rsplit(",", 1)[0] for line in out.splitlines()]
    if strip(stdout_of(bench)) != strip(stdout_of(bench)):
        failures.append(bench)
    # a regenerated instance file is byte-identical too
    first = (tmp_path / "g.json").read_bytes()
    stdout_of(commands[-1])
    if (tmp_path / "g.json").read_bytes() != first:
        failures.append("gen bytes")
    _verdict("determinism", failures)
