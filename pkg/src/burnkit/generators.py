"""Deterministic graph and tree families.

Every random generator takes an explicit ``seed`` and draws from its own
``random.Random`` instance, so outputs are reproducible within this
implementation.
"""
from __future__ import annotations

import heapq
import random

from .errors import DomainError, InputError
from .graph import Graph, Tree, relabel_graph


def _tree(n: int, edges) -> Tree:
    g = Graph.from_edges(n, edges)
    return Tree(g.n, g.adj)


def path(n: int) -> Tree:
    if n < 1:
        raise InputError(f"path needs n >= 1, got {n}")
    return _tree(n, [(i, i + 1) for i in range(n - 1)])


def star(n: int) -> Tree:
    """Star on ``n`` vertices with centre 0."""
    if n < 1:
        raise InputError(f"star needs n >= 1, got {n}")
    return _tree(n, [(0, i) for i in range(1, n)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise InputError(f"complete graph needs n >= 1, got {n}")
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise InputError(f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def spider(legs: int, leg_len: int) -> Tree:
    """Centre 0 with ``legs`` paths of ``leg_len`` vertices each."""
    if legs < 0 or (legs > 0 and leg_len < 1):
        raise InputError(f"bad spider parameters legs={legs}, leg_len={leg_len}")
    edges = []
    nxt = 1
    for _ in range(legs):
        prev = 0
        for _ in range(leg_len):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return _tree(nxt, edges)


def smallest_branching_order(n: int, k: int) -> int | None:
    """``None`` if a ``k+``-branching tree on ``n`` vertices exists, else the
    smallest order above 2 for which one does (``k + 1``, the star)."""
    if n in (1, 2) or k <= 2 or n >= k + 1:
        return None
    return k + 1


def _check_branching_feasible(n: int, k: int) -> None:
    if n < 1:
        raise InputError(f"n must be >= 1, got {n}")
    if k < 1:
        raise InputError(f"k must be >= 1, got {k}")
    low = smallest_branching_order(n, k)
    if low is not None:
        raise DomainError(
            f"no {k}+-branching tree has {n} vertices; the smallest feasible n above 2 is {low}"
        )


def caterpillar_branching(n: int, k: int, seed: int = 0) -> Tree:
    """``k+``-branching caterpillar with a spine of ``(n-2)//(k-1) + 2`` vertices.

    Spine vertices are ``0..t-1``. Each inner spine vertex carries ``k - 2``
    pendant leaves; the ``< k - 1`` leftover leaves go to seeded random
    inner spine vertices.
    """
    _check_branching_feasible(n, k)
    if n <= 2:
        return path(n)
    k = max(k, 2)
    inner = (n - 2) // (k - 1)
    t = inner + 2
    rng = random.Random(seed)
    edges = [(i, i + 1) for i in range(t - 1)]
    nxt = t
    extra = [k - 2] * inner
    for _ in range(n - (inner * (k - 1) + 2)):
        extra[rng.randrange(inner)] += 1
    for i, cnt in enumerate(extra):
        for _ in range(cnt):
            edges.append((i + 1, nxt))
            nxt += 1
    assert nxt == n
    return _tree(n, edges)


def prufer_to_tree(seq: list[int], n: int) -> Tree:
    if n == 1:
        return _tree(1, [])
    if len(seq) != n - 2:
        raise InputError(f"Prufer sequence for n={n} must have length {n - 2}")
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u, w = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, w))
    return _tree(n, edges)


def random_tree(n: int, seed: int = 0) -> Tree:
    """Uniform labelled tree via a random Prufer sequence."""
    if n < 1:
        raise InputError(f"n must be >= 1, got {n}")
    rng = random.Random(seed)
    return prufer_to_tree([rng.randrange(n) for _ in range(max(n - 2, 0))], n)


def random_branching_tree(n: int, k: int, seed: int = 0) -> Tree:
    """Random ``k+``-branching tree grown by leaf batches.

    Start from a star with ``k`` leaves; repeatedly pick a uniform leaf and
    give it a batch of at least ``k - 1`` new leaves; leftover vertices
    (fewer than ``k - 1``) go to uniform internal vertices. Labels are then
    shuffled.
    """
    _check_branching_feasible(n, k)
    if k <= 2 or n <= 2:
        return random_tree(n, seed)
    rng = random.Random(seed)
    edges = [(0, i) for i in range(1, k + 1)]
    leaves = list(range(1, k + 1))
    internal = [0]
    size = k + 1
    while n - size >= k - 1:
        left = n - size
        batch = rng.randint(k - 1, min(left, 2 * (k - 1)))
        if left - batch < k - 1 and rng.random() < 0.5:
            batch = left
        host = leaves.pop(rng.randrange(len(leaves)))
        internal.append(host)
        for v in range(size, size + batch):
            edges.append((host, v))
            leaves.append(v)
        size += batch
    for v in range(size, n):
        edges.append((rng.choice(internal), v))
    perm = list(range(n))
    rng.shuffle(perm)
    return relabel_graph(_tree(n, edges), perm)


def random_connected_graph(n: int, m: int, seed: int = 0) -> Graph:
    """Random spanning tree plus ``m - n + 1`` distinct extra edges."""
    if n < 1:
        raise InputError(f"n must be >= 1, got {n}")
    if not n - 1 <= m <= n * (n - 1) // 2:
        raise InputError(f"m={m} outside [{n - 1}, {n * (n - 1) // 2}] for n={n}")
    rng = random.Random(seed)
    tree = random_tree(n, rng.randrange(2**32))
    present = set(tree.edges())
    missing = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in present]
    extra = rng.sample(missing, m - (n - 1))
    return Graph.from_edges(n, list(present) + extra)
