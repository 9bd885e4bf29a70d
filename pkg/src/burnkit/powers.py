"""High-branching spanning trees of tree powers, and burning graph powers."""
from __future__ import annotations

from dataclasses import dataclass

from .bounds import bound_power
from .burning import BurnSchedule, simulate
from .decomp import find_split_vertex
from .errors import DomainError, InputError
from .graph import (
    Graph,
    Tree,
    bfs_spanning_tree,
    center_vertex,
    component_on_edge_removal,
    diameter,
    eccentricities,
    graph_power,
    induced_subgraph,
    require_connected,
)
from .schedule import ScheduleCertificate, burn_branching_tree


@dataclass(frozen=True)
class PeelLevel:
    x: int
    removed: tuple[int, ...]


@dataclass(frozen=True)
class PeelingLog:
    """Peeled pieces in order (original labels) and the final star centre."""

    k: int
    levels: tuple[PeelLevel, ...]
    center: int

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "levels": [{"x": lv.x, "removed": list(lv.removed)} for lv in self.levels],
            "center": self.center,
        }


def extract_branching_spanning_tree(t: Tree, k: int) -> tuple[Tree, PeelingLog]:
    """A ``(k+1)+``-branching spanning tree of ``t^k``.

    While the remaining tree has radius above ``k``, a split vertex ``x``
    for threshold ``k`` is found and everything on ``x``'s side of its large
    edge (except ``x``) is peeled off; all of it lies within distance ``k``
    of ``x``. The last tree is spanned by a star from a central vertex, and
    every peeled piece is hung back on its ``x``.
    """
    if k < 1:
        raise InputError(f"k must be >= 1, got {k}")
    t = Tree.from_graph(t)
    d = diameter(t)
    if k >= d:
        raise DomainError(
            f"k={k} >= diam={d}: t^k is complete; burn it with any two sources instead"
        )
    alive = list(range(t.n))
    levels: list[PeelLevel] = []
    while True:
        cur, relabel = induced_subgraph(t, alive)
        back = alive  # relabel is order-preserving: new id i is alive[i]
        ecc = eccentricities(cur)
        if min(ecc) <= k:
            break
        if not (cur.n >= 3 and 1 <= k < cur.n - 1):
            raise AssertionError(f"peeling invariant broken at n={cur.n}, k={k}")
        cert = find_split_vertex(cur, k)
        side = component_on_edge_removal(cur, cert.x, cert.large)
        removed = sorted(back[v] for v in side if v != cert.x)
        levels.append(PeelLevel(back[cert.x], tuple(removed)))
        gone = set(removed)
        alive = [v for v in alive if v not in gone]
    center = back[center_vertex(cur)]
    edges = [(center, v) for v in alive if v != center]
    for lv in levels:
        edges.extend((lv.x, v) for v in lv.removed)
    g = Graph.from_edges(t.n, edges)
    return Tree(g.n, g.adj), PeelingLog(k, tuple(levels), center)


def burn_graph_power(g: Graph, k: int) -> ScheduleCertificate:
    """Schedule for ``g^k`` within ``ceil(sqrt(4(k-1)n/k^2))`` rounds.

    ``2 <= k <= diam(g)``. At ``k = diam(g)`` the power is complete and two
    sources suffice. Otherwise: BFS spanning tree from a central vertex,
    peel it into a ``(k+1)+``-branching spanning tree of its ``k``-th power,
    and burn that tree.
    """
    require_connected(g)
    d = diameter(g)
    if not 2 <= k <= d:
        raise InputError(f"k must lie in [2, diam(g)] = [2, {d}], got {k}")
    n = g.n
    power = graph_power(g, k)
    extra: dict = {"diameter": d}
    if k == d:
        sched = BurnSchedule((0, 1))
        log: tuple = ()
        extra["case"] = "complete"
    else:
        root = center_vertex(g)
        tree = bfs_spanning_tree(g, root)
        spanning, peel = extract_branching_spanning_tree(tree, k)
        inner = burn_branching_tree(spanning, k + 1)
        sched = inner.schedule
        log = inner.recursion_log
        extra.update(case="peeled", root=root, peeling=peel.to_json(),
                     spanning_edges=[list(e) for e in spanning.edges()])
    trace = simulate(power, sched)
    if not trace.complete:
        raise AssertionError(f"power schedule leaves {trace.unburned} unburned")
    cert = ScheduleCertificate(sched, sched.rounds, "power", bound_power(n, k), n, k, log, extra)
    if not cert.within_bound:
        raise AssertionError(f"{sched.rounds} rounds exceeds the guaranteed {cert.bound}")
    return cert
