"""Seeded property suites that cross-check constructions against the exact solver.

Each suite returns a :class:`SuiteResult`; ``failures`` holds a short
description of every violated instance (empty means pass). Instance
parameters are drawn from ``random.Random(seed)`` so a run is reproducible.
"""
from __future__ import annotations

import itertools
import random
import time
from fractions import Fraction
from dataclasses import dataclass, field
from typing import Callable

from . import generators as gen
from .bounds import (
    TABLE1_KS,
    beats_leafstrip,
    bound_branching,
    bound_power,
    caterpillar_lower_bound,
    ceil_sqrt,
    threshold_n,
)
from .burning import BurnSchedule, exact_burning_number, exact_modified_burning_number, is_valid, simulate
from .decomp import (
    check_split_certificate,
    find_split_vertex,
    min_leaf_count,
    min_order_for_internals,
)
from .graph import (
    Graph,
    Tree,
    contract_edge,
    diameter,
    distance_matrix,
    graph_power,
    induced_subgraph,
    internal_count,
    is_k_branching,
    leaf_count,
)
from .powers import burn_graph_power, extract_branching_spanning_tree
from .schedule import burn_branching_tree
from .spanning import _Counter, _spanning_trees, verify_no_branching_spanning_tree

FIGURE1_EDGES = [(0, 2), (1, 2), (2, 3), (3, 4), (3, 5), (5, 6), (5, 7), (7, 8)]
FIGURE1_LABELS = {f"v{i + 1}": i for i in range(9)}
TABLE1_VALUES = {3: 118, 4: 52, 5: 48, 6: 49, 7: 53, 8: 57, 9: 62, 10: 67, 20: 121, 50: 288, 100: 567, 200: 1127}


def figure1_tree() -> Tree:
    """The 9-vertex example tree; vertex ``v_i`` has id ``i - 1``."""
    g = Graph.from_edges(9, FIGURE1_EDGES)
    return Tree(g.n, g.adj)


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, msg: str) -> None:
        self.failures.append(msg)

    def to_json(self) -> dict:
        return {
            "suite": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "failures": self.failures[:20],
            "failure_count": len(self.failures),
        }


def all_sequences_fail(g: Graph, length: int) -> bool:
    """Exhaustively confirm no source sequence of ``length`` burns ``g``."""
    if length < 1:
        return True
    return not any(is_valid(g, BurnSchedule(seq)) for seq in itertools.product(range(g.n), repeat=length))


def suite_figure1(count: int = 1, seed: int = 0) -> SuiteResult:
    res = SuiteResult("figure1")
    t = figure1_tree()
    b, witness = exact_burning_number(t)
    res.checked += 1
    if b != 3 or not is_valid(t, witness):
        res.fail(f"exact burning number {b}, expected 3")
    trace = simulate(t, BurnSchedule((2, 5, 8)))
    expected = (2, 2, 1, 2, 3, 2, 3, 3, 3)
    if trace.burn_round != expected:
        res.fail(f"(v3, v6, v9) trace {trace.burn_round}, expected {expected}")
    if not all_sequences_fail(t, 2):
        res.fail("a length-2 schedule burns the tree")
    return res


def suite_table1(count: int = 1, seed: int = 0) -> SuiteResult:
    res = SuiteResult("table1")
    for k in TABLE1_KS:
        res.checked += 1
        got = threshold_n(k)
        if got != TABLE1_VALUES[k]:
            res.fail(f"k={k}: threshold {got}, expected {TABLE1_VALUES[k]}")
        if not beats_leafstrip(got, k) or beats_leafstrip(got + 1, k):
            res.fail(f"k={k}: boundary not sharp at {got}")
    return res


def _branching_instance(rng: random.Random, ks, n_max: int) -> tuple[Tree, int]:
    k = rng.choice(ks)
    n = rng.randint(k + 1, n_max)
    return gen.random_branching_tree(n, k, rng.randrange(2**32)), k


def suite_branching_schedule(count: int = 300, seed: int = 0, n_max: int = 80, exact_n: int = 16) -> SuiteResult:
    """Constructed schedules replay and respect the branching bound; exact b never exceeds them."""
    res = SuiteResult("branching-schedule")
    rng = random.Random(seed)
    for i in range(count):
        t, k = _branching_instance(rng, (3, 4, 5, 6), n_max)
        res.checked += 1
        cert = burn_branching_tree(t, k)
        bound = bound_branching(t.n, k)
        if not is_valid(t, cert.schedule):
            res.fail(f"#{i} n={t.n} k={k}: schedule does not burn the tree")
        if cert.claimed_rounds > bound:
            res.fail(f"#{i} n={t.n} k={k}: {cert.claimed_rounds} rounds > bound {bound}")
        for rec in cert.recursion_log:
            if rec.child_bound is not None and rec.child_bound > rec.bound - 1:
                res.fail(f"#{i}: recursion bound did not drop at depth {rec.depth}")
            if rec.case == "case1" and cert.claimed_rounds > internal_count(t) + 1 and rec.depth == 0:
                res.fail(f"#{i}: small-tree schedule longer than internals + 1")
        if t.n <= exact_n:
            b, _ = exact_burning_number(t)
            if b > cert.claimed_rounds:
                res.fail(f"#{i} n={t.n} k={k}: exact b={b} > schedule {cert.claimed_rounds}")
    return res


def _random_graph(rng: random.Random, n_lo: int, n_hi: int, m_hi: int | None = None) -> Graph:
    n = rng.randint(n_lo, n_hi)
    top = n * (n - 1) // 2 - 1  # keep diameter >= 2
    if m_hi is not None:
        top = min(top, m_hi)
    m = rng.randint(n - 1, max(n - 1, min(top, 2 * n)))
    return gen.random_connected_graph(n, m, rng.randrange(2**32))


def suite_square_power(count: int = 100, seed: int = 0, n_max: int = 20) -> SuiteResult:
    """Squares of connected graphs burn within ``ceil(sqrt(n))`` rounds, exactly and by construction."""
    res = SuiteResult("square-power")
    rng = random.Random(seed)
    for i in range(count):
        g = _random_graph(rng, 3, n_max)
        res.checked += 1
        target = ceil_sqrt(g.n)
        sq = graph_power(g, 2)
        b, _ = exact_burning_number(sq)
        if b > target:
            res.fail(f"#{i} n={g.n}: exact b(G^2)={b} > {target}")
        cert = burn_graph_power(g, 2)
        if not is_valid(sq, cert.schedule) or cert.claimed_rounds > target:
            res.fail(f"#{i} n={g.n}: pipeline {cert.claimed_rounds} rounds vs {target}")
        if b > cert.claimed_rounds:
            res.fail(f"#{i}: exact b exceeds the pipeline schedule")
    return res


def suite_graph_power(count: int = 60, seed: int = 0, n_max: int = 14) -> SuiteResult:
    """Pipeline certificates for ``k >= 2`` replay, meet their bound, and dominate exact b."""
    res = SuiteResult("graph-power")
    rng = random.Random(seed)
    while res.checked < count:
        g = _random_graph(rng, 4, n_max) if rng.random() < 0.5 else gen.random_tree(rng.randint(4, n_max), rng.randrange(2**32))
        d = diameter(g)
        if d < 2:
            continue
        k = rng.randint(2, d)
        res.checked += 1
        cert = burn_graph_power(g, k)
        power = graph_power(g, k)
        if not is_valid(power, cert.schedule) or cert.claimed_rounds > bound_power(g.n, k):
            res.fail(f"n={g.n} k={k}: certificate invalid or over bound")
        b, _ = exact_burning_number(power)
        if b > cert.claimed_rounds:
            res.fail(f"n={g.n} k={k}: exact {b} > certificate {cert.claimed_rounds}")
    return res


def suite_peeling(count: int = 200, seed: int = 0, n_max: int = 60) -> SuiteResult:
    """Extracted trees span, are ``(k+1)+``-branching, use only ``k``-hop edges, peel ``>= k`` per level."""
    res = SuiteResult("peeling")
    rng = random.Random(seed)
    for i in range(count):
        t = gen.random_tree(rng.randint(4, n_max), rng.randrange(2**32))
        d = diameter(t)
        dist = distance_matrix(t)
        for k in (2, 3, 4):
            if k > d - 1:
                continue
            res.checked += 1
            s, log = extract_branching_spanning_tree(t, k)
            if s.n != t.n or s.m != t.n - 1:
                res.fail(f"#{i} k={k}: not a spanning tree")
            if not is_k_branching(s, k + 1):
                res.fail(f"#{i} k={k}: not {k + 1}+-branching")
            if any(dist[u][v] > k for u, v in s.edges()):
                res.fail(f"#{i} k={k}: edge longer than {k} in the base tree")
            if any(len(lv.removed) < k for lv in log.levels):
                res.fail(f"#{i} k={k}: a level peeled fewer than {k} vertices")
            if len(log.levels) > t.n // k:
                res.fail(f"#{i} k={k}: {len(log.levels)} levels exceed n/k")
    return res


def suite_tightness(count: int = 1, seed: int = 0) -> SuiteResult:
    res = SuiteResult("tightness")
    cases = [
        (graph_power(gen.path(6), 2), 4, True, "P6^2 has no 4+-branching spanning tree"),
        (graph_power(gen.path(8), 3), 5, True, "P8^3 has no 5+-branching spanning tree"),
        (gen.star(6), 5, False, "star(6) is itself 5+-branching"),
    ]
    for g, kt, expected, label in cases:
        res.checked += 1
        if verify_no_branching_spanning_tree(g, kt) != expected:
            res.fail(label)
    return res


def contraction_instance(rng: random.Random, n_max: int = 13):
    """``(T, y, z)`` with ``T`` ``(k-1)+``-branching, ``y`` its only degree-``(k-1)`` vertex, ``z`` internal."""
    while True:
        k = rng.choice((3, 4))
        n0 = rng.randint(k + 3, n_max + 1)
        base = gen.random_branching_tree(n0, k, rng.randrange(2**32))
        options = []
        for y in range(base.n):
            deg = base.degree(y)
            if deg < k:
                continue
            leaves = [w for w in base.adj[y] if base.degree(w) == 1]
            inner = [w for w in base.adj[y] if base.degree(w) >= 2]
            drop = deg - (k - 1)
            if inner and len(leaves) >= drop:
                options.append((y, leaves[:drop], inner))
        if not options:
            continue
        y, drop, inner = rng.choice(options)
        keep = [v for v in range(base.n) if v not in set(drop)]
        t, relabel = induced_subgraph(base, keep)
        if t.n > n_max:
            continue
        z = relabel[rng.choice(inner)]
        return t, relabel[y], z, k


def suite_contraction(count: int = 100, seed: int = 0, n_max: int = 13) -> SuiteResult:
    """Burning ``y`` for free never costs more than burning the contracted tree."""
    res = SuiteResult("contraction")
    rng = random.Random(seed)
    for i in range(count):
        t, y, z, k = contraction_instance(rng, n_max)
        res.checked += 1
        low = [v for v in range(t.n) if 2 <= t.degree(v) < k]
        if low != [y] or t.degree(y) != k - 1 or t.degree(z) < 2:
            res.fail(f"#{i}: malformed instance")
            continue
        merged, _ = contract_edge(t, y, z)
        if not is_k_branching(merged, k):
            res.fail(f"#{i}: contracted tree is not {k}+-branching")
        bu, _ = exact_modified_burning_number(t, {y})
        b, _ = exact_burning_number(merged)
        if bu > b:
            res.fail(f"#{i} n={t.n} k={k}: b^y={bu} > b(T')={b}")
    return res


def suite_counting(count: int = 500, seed: int = 0, n_max: int = 80) -> SuiteResult:
    """Order versus internal count, and the leaf lower bound, on random branching trees."""
    res = SuiteResult("counting")
    rng = random.Random(seed)
    for i in range(count):
        t, k = _branching_instance(rng, (3, 4, 5), n_max)
        res.checked += 1
        internals, leaves = internal_count(t), leaf_count(t)
        if t.n < min_order_for_internals(internals, k):
            res.fail(f"#{i} n={t.n} k={k}: {internals} internals need {min_order_for_internals(internals, k)}")
        if leaves < min_leaf_count(t.n, k):
            res.fail(f"#{i} n={t.n} k={k}: {leaves} leaves < {min_leaf_count(t.n, k)}")
    return res


def suite_caterpillar(count: int = 50, seed: int = 0, n_max: int = 25) -> SuiteResult:
    """Branching caterpillars need at least ``ceil(sqrt(n/(k-1)))`` rounds."""
    res = SuiteResult("caterpillar")
    rng = random.Random(seed)
    for i in range(count):
        k = rng.choice((2, 3, 4))
        n = rng.randint(1 if k == 2 else k + 1, n_max)
        t = gen.caterpillar_branching(n, k, rng.randrange(2**32))
        res.checked += 1
        if not is_k_branching(t, k):
            res.fail(f"#{i}: caterpillar n={n} k={k} is not {k}+-branching")
        b, _ = exact_burning_number(t)
        lb = caterpillar_lower_bound(n, k)
        if b < lb:
            res.fail(f"#{i} n={n} k={k}: b={b} < {lb}")
    return res


def all_spanning_trees(g: Graph) -> list[Tree]:
    out = []
    for edges in _spanning_trees(list(range(g.n)), g, _Counter(10**9)):
        h = Graph.from_edges(g.n, edges)
        out.append(Tree(h.n, h.adj))
    return out


def suite_spanning_subtree(count: int = 30, seed: int = 0, n_max: int = 9, m_max: int = 12) -> SuiteResult:
    """``b(G)`` equals the minimum ``b(T)`` over spanning trees ``T``."""
    res = SuiteResult("spanning-subtree")
    rng = random.Random(seed)
    for i in range(count):
        n = rng.randint(2, n_max)
        m = rng.randint(n - 1, min(m_max, n * (n - 1) // 2))
        g = gen.random_connected_graph(n, m, rng.randrange(2**32))
        res.checked += 1
        b, _ = exact_burning_number(g)
        best = min(exact_burning_number(t)[0] for t in all_spanning_trees(g))
        if b != best:
            res.fail(f"#{i} n={n} m={m}: b(G)={b}, min over spanning trees {best}")
    return res


def suite_known_values(count: int = 1, seed: int = 0) -> SuiteResult:
    res = SuiteResult("known-values")
    for n in range(1, 26):
        res.checked += 1
        b, _ = exact_burning_number(gen.path(n))
        if b != ceil_sqrt(n):
            res.fail(f"b(P_{n})={b}, expected {ceil_sqrt(n)}")
    for n in range(2, 21):
        res.checked += 1
        b, _ = exact_burning_number(gen.star(n))
        if b != 2:
            res.fail(f"b(star({n}))={b}, expected 2")
    for n in range(2, 11):
        res.checked += 1
        b, _ = exact_burning_number(gen.complete_graph(n))
        if b != 2:
            res.fail(f"b(K_{n})={b}, expected 2")
    return res


def suite_split_vertex(count: int = 500, seed: int = 0, n_max: int = 60) -> SuiteResult:
    """Split certificates satisfy their inequalities for a spread of thresholds."""
    res = SuiteResult("split-vertex")
    rng = random.Random(seed)
    for i in range(count):
        t = gen.random_tree(rng.randint(3, n_max), rng.randrange(2**32))
        n = t.n
        for p in {Fraction(1), Fraction(n, 4), Fraction(n, 2), Fraction(n - 1) - Fraction(1, 1000)}:
            if not 1 <= p < n - 1:
                continue
            res.checked += 1
            try:
                check_split_certificate(t, find_split_vertex(t, p))
            except AssertionError as exc:
                res.fail(f"#{i} n={n} p={p}: {exc}")
    return res


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "figure1": suite_figure1,
    "table1": suite_table1,
    "branching-schedule": suite_branching_schedule,
    "square-power": suite_square_power,
    "graph-power": suite_graph_power,
    "peeling": suite_peeling,
    "tightness": suite_tightness,
    "contraction": suite_contraction,
    "counting": suite_counting,
    "caterpillar": suite_caterpillar,
    "spanning-subtree": suite_spanning_subtree,
    "known-values": suite_known_values,
    "split-vertex": suite_split_vertex,
}

# short names used in scripts and CI configs
ALIASES = {
    "theorem5": "branching-schedule",
    "corollary9": "square-power",
    "theorem8": "graph-power",
    "lemma1": "split-vertex",
    "lemma2": "peeling",
    "observation3": "tightness",
    "lemma4": "counting",
    "lemma11": "counting",
    "observation15": "caterpillar",
    "lemma7": "spanning-subtree",
}


def resolve_suite(name: str) -> str:
    name = ALIASES.get(name, name)
    if name not in SUITES:
        raise KeyError(name)
    return name


def run_suite(name: str, count: int | None = None, seed: int = 0) -> SuiteResult:
    fn = SUITES[resolve_suite(name)]
    start = time.perf_counter()
    res = fn(seed=seed) if count is None else fn(count=count, seed=seed)
    res.seconds = time.perf_counter() - start
    return res
