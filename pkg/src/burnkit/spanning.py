"""Search for spanning trees whose internal vertices all have degree >= k.

A ``k+``-branching spanning tree is determined by its internal set ``I``
(connected and dominating in ``g``), a spanning tree of ``g[I]``, and an
assignment of every other vertex to an adjacent member of ``I`` that gives
each member at least ``k`` tree neighbours. The search enumerates
candidate sets ``I`` with at most ``(n - 2) // (k - 1)`` vertices (fewer
vertices cannot host that many hubs), then degree-constrained spanning
trees of ``g[I]``, then settles the leaf assignment as a bipartite
matching.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .bounds import combined_branch_bound
from .errors import BudgetExceeded, InputError
from .graph import Graph, Tree, bfs_spanning_tree, require_connected

DEFAULT_SEARCH_BUDGET = 2_000_000


class _Counter:
    def __init__(self, budget: int):
        self.left = budget

    def tick(self) -> None:
        self.left -= 1
        if self.left < 0:
            raise BudgetExceeded("spanning-tree search budget exhausted")


def _connected_sets(g: Graph, smax: int, counter: _Counter):
    """Connected vertex sets of size ``1..smax`` as bitmasks, each exactly once."""
    nb = [sum(1 << w for w in g.adj[v]) for v in range(g.n)]

    def grow(sub: int, ext: int, border: int, root: int, size: int):
        counter.tick()
        yield sub
        if size == smax:
            return
        while ext:
            w = (ext & -ext).bit_length() - 1
            ext &= ext - 1
            # neighbours of w not yet touched by sub, above the root
            fresh = nb[w] & ~border & ~sub & ~((1 << (root + 1)) - 1)
            yield from grow(sub | (1 << w), ext | fresh, border | nb[w], root, size + 1)

    for root in range(g.n):
        above = nb[root] & ~((1 << (root + 1)) - 1)
        yield from grow(1 << root, above, nb[root] | (1 << root), root, 1)


def _spanning_trees(vertices: list[int], g: Graph, counter: _Counter):
    """Edge lists of every spanning tree of ``g[vertices]``."""
    if len(vertices) == 1:
        yield []
        return
    inside = set(vertices)
    edges = [(u, v) for u in vertices for v in g.adj[u] if u < v and v in inside]
    need = len(vertices) - 1
    for chosen in combinations(edges, need):
        counter.tick()
        parent = {v: v for v in vertices}

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        ok = True
        for u, v in chosen:
            ru, rv = find(u), find(v)
            if ru == rv:
                ok = False
                break
            parent[ru] = rv
        if ok:
            yield list(chosen)


def _assign_leaves(g: Graph, hubs: list[int], demand: dict[int, int], counter: _Counter):
    """Map every non-hub to an adjacent hub meeting each hub's demand, or None."""
    hub_set = set(hubs)
    leaves = [v for v in range(g.n) if v not in hub_set]
    slots = [h for h in hubs for _ in range(demand[h])]
    if len(slots) > len(leaves):
        return None
    slot_of_leaf: dict[int, int] = {}
    leaf_of_slot: dict[int, int] = {}

    def augment(s: int, seen: set[int]) -> bool:
        for leaf in g.adj[slots[s]]:
            if leaf in hub_set or leaf in seen:
                continue
            seen.add(leaf)
            if leaf not in slot_of_leaf or augment(slot_of_leaf[leaf], seen):
                slot_of_leaf[leaf] = s
                leaf_of_slot[s] = leaf
                return True
        return False

    for s in range(len(slots)):
        counter.tick()
        if not augment(s, set()):
            return None
    owner = {}
    for leaf in leaves:
        if leaf in slot_of_leaf:
            owner[leaf] = slots[slot_of_leaf[leaf]]
        else:
            owner[leaf] = min(h for h in g.adj[leaf] if h in hub_set)
    return owner


def find_branching_spanning_tree(g: Graph, k: int, budget: int = DEFAULT_SEARCH_BUDGET) -> Tree | None:
    """A ``k+``-branching spanning tree of ``g``, or ``None`` if there is none."""
    require_connected(g)
    if k < 1:
        raise InputError(f"k must be >= 1, got {k}")
    n = g.n
    if n <= 2:
        g2 = Graph.from_edges(n, g.edges())
        return Tree(g2.n, g2.adj)
    if k <= 2:
        return bfs_spanning_tree(g, 0)
    smax = (n - 2) // (k - 1)
    if smax < 1:
        return None
    counter = _Counter(budget)
    full = (1 << n) - 1
    nb = [sum(1 << w for w in g.adj[v]) | (1 << v) for v in range(n)]
    for sub in _connected_sets(g, smax, counter):
        dominated = 0
        hubs = [v for v in range(n) if sub >> v & 1]
        for v in hubs:
            dominated |= nb[v]
        if dominated != full:
            continue
        for tree_edges in _spanning_trees(hubs, g, counter):
            deg = {h: 0 for h in hubs}
            for u, v in tree_edges:
                deg[u] += 1
                deg[v] += 1
            demand = {h: max(0, k - deg[h]) for h in hubs}
            owner = _assign_leaves(g, hubs, demand, counter)
            if owner is None:
                continue
            edges = tree_edges + [(leaf, hub) for leaf, hub in owner.items()]
            g2 = Graph.from_edges(n, edges)
            return Tree(g2.n, g2.adj)
    return None


def verify_no_branching_spanning_tree(g: Graph, k_target: int, budget: int = DEFAULT_SEARCH_BUDGET) -> bool:
    """True iff ``g`` has no spanning tree with every internal degree ``>= k_target``."""
    return find_branching_spanning_tree(g, k_target, budget) is None


@dataclass
class BranchResult:
    """``value`` is ``branch(G)`` when ``exact``, otherwise a proven lower bound."""

    value: int
    exact: bool
    witness: Tree | None = None
    bounds: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"branch": self.value, "exact": self.exact, "bounds": dict(self.bounds)}
        if self.witness is not None:
            out["witness_edges"] = [list(e) for e in self.witness.edges()]
        return out


def branch_number(g: Graph, budget: int = DEFAULT_SEARCH_BUDGET) -> BranchResult:
    """Largest ``k`` for which ``g`` has a ``k+``-branching spanning tree.

    Tries ``k`` downward from the maximum degree. Graphs on at most two
    vertices have no internal vertex at all; they are reported as 2.
    If the budget runs out, ``k`` is instead raised from 3 while witnesses
    keep being found, and the result is flagged inexact.
    """
    require_connected(g)
    n = g.n
    if n <= 2:
        return BranchResult(2, True, find_branching_spanning_tree(g, 2), combined_branch_bound(n, 2))
    top = max(g.degree(v) for v in range(n))
    try:
        for k in range(top, 2, -1):
            tree = find_branching_spanning_tree(g, k, budget)
            if tree is not None:
                return BranchResult(k, True, tree, combined_branch_bound(n, k))
    except BudgetExceeded:
        pass
    else:
        return BranchResult(2, True, find_branching_spanning_tree(g, 2), combined_branch_bound(n, 2))
    best, witness, exact = 2, find_branching_spanning_tree(g, 2), False
    for k in range(3, top + 1):
        try:
            tree = find_branching_spanning_tree(g, k, budget)
        except BudgetExceeded:
            break
        if tree is None:
            exact = True
            break
        best, witness = k, tree
    return BranchResult(best, exact, witness, combined_branch_bound(n, best))
