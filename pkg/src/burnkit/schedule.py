"""Constructive burning schedules for ``k+``-branching trees.

:func:`burn_branching_tree` follows the inductive construction: small trees
burn every internal vertex and then one more source; larger trees burn a
split vertex ``x`` first (everything on its side of ``xy`` lies within
reach of that fire) and recurse on the far side of ``y``, which catches
fire in round 2 for free. When ``y`` is left with degree ``k - 1`` it is
merged into an internal neighbour ``z`` so the recursion stays inside the
``k+``-branching family.

Every certificate is replayed through :func:`burnkit.burning.simulate`
before it is returned.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .bounds import bound_branching, bound_leafstrip
from .burning import BurnSchedule, exact_burning_number, simulate
from .decomp import find_split_vertex, strip_leaves
from .errors import InputError
from .graph import (
    Tree,
    bfs_distances,
    component_on_edge_removal,
    contract_edge,
    induced_subgraph,
    is_k_branching,
)


@dataclass(frozen=True)
class LevelRecord:
    """One step of the recursion, in the labels of that level's tree."""

    depth: int
    n: int
    bound: int
    case: str  # trivial | case1 | star | split
    x: int | None = None
    y: int | None = None
    x_side: int | None = None
    y_side: int | None = None
    subcase: str | None = None  # terminal | contract | direct
    child_n: int | None = None
    child_bound: int | None = None

    def to_json(self) -> dict:
        return {k: v for k, v in self.__dict__.items() if v is not None}


@dataclass(frozen=True)
class ScheduleCertificate:
    schedule: BurnSchedule
    claimed_rounds: int
    bound_used: str  # branching | leafstrip | exact | power
    bound: int | None
    n: int
    k: int
    recursion_log: tuple[LevelRecord, ...] = field(default_factory=tuple)
    extra: dict = field(default_factory=dict)

    @property
    def within_bound(self) -> bool:
        return self.bound is None or self.claimed_rounds <= self.bound

    def to_json(self) -> dict:
        out = {
            "n": self.n,
            "k": self.k,
            "schedule": self.schedule.to_json(),
            "claimed_rounds": self.claimed_rounds,
            "bound_used": self.bound_used,
            "bound": self.bound,
            "within_bound": self.within_bound,
            "recursion_log": [r.to_json() for r in self.recursion_log],
        }
        out.update(self.extra)
        return out


def _replay(g, sched: BurnSchedule) -> None:
    trace = simulate(g, sched)
    if not trace.complete:
        raise AssertionError(f"constructed schedule leaves {trace.unburned} unburned")


def _branching_sources(t: Tree, k: int, depth: int, log: list[LevelRecord]) -> list[int]:
    n = t.n
    bound = bound_branching(n, k)
    if n == 1:
        log.append(LevelRecord(depth, n, bound, "trivial"))
        return [0]
    if n == 2:
        log.append(LevelRecord(depth, n, bound, "trivial"))
        return [0, 1]
    internal = [v for v in range(n) if len(t.adj[v]) >= 2]
    if n <= 4 * (k - 2) + 1:
        log.append(LevelRecord(depth, n, bound, "case1"))
        return internal + [t.leaves[0]]
    if len(internal) == 1:
        centre = internal[0]
        log.append(LevelRecord(depth, n, bound, "star", x=centre))
        return [centre, t.adj[centre][0]]

    p = (k - 1) * (bound - 1)
    if not 1 <= p < n - 1:
        raise AssertionError(f"split threshold {p} outside [1, {n - 1}) at n={n}, k={k}")
    cert = find_split_vertex(t, p)
    x, y = cert.x, cert.large
    x_side = component_on_edge_removal(t, x, y)
    dist = bfs_distances(t, x)
    reach = max(dist[v] for v in x_side)
    y_side = [v for v in range(n) if v not in x_side]
    sub, relabel = induced_subgraph(t, y_side)
    back = {new: old for old, new in relabel.items()}

    record = dict(depth=depth, n=n, bound=bound, case="split", x=x, y=y,
                  x_side=len(x_side), y_side=len(y_side))
    slot = len(log)
    log.append(None)  # filled once the subcase is known
    tail, subcase, child_n = _modified_sources(sub, k, relabel[y], depth + 1, log)
    child_bound = bound_branching(child_n, k) if subcase != "terminal" else None
    log[slot] = LevelRecord(**record, subcase=subcase, child_n=child_n, child_bound=child_bound)

    seq = [x] + [back[v] for v in tail]
    # x's fire needs reach + 1 rounds to sweep its own side
    while len(seq) < reach + 1:
        seq.append(x)
    return seq


def _modified_sources(t: Tree, k: int, y: int, depth: int, log: list[LevelRecord]):
    """Sources ``s_1..s_r`` such that ``({y, s_1}, s_2, .., s_r)`` burns ``t``.

    Returns ``(sources, subcase, size of the tree recursed on)``.
    """
    if t.n == 1:
        return [y], "terminal", 1
    if all(len(t.adj[w]) == 1 for w in t.adj[y]):
        return [y, y], "terminal", t.n
    if len(t.adj[y]) == k - 1:
        z = min(w for w in t.adj[y] if len(t.adj[w]) >= 2)
        merged, relabel = contract_edge(t, y, z)
        back = {new: old for old, new in relabel.items()}
        inner = _branching_sources(merged, k, depth, log)
        return [back[v] for v in inner], "contract", merged.n
    return _branching_sources(t, k, depth, log), "direct", t.n


def _check_k(k: int) -> None:
    if k < 3:
        raise InputError(f"branching schedules need k >= 3, got {k} (the constant vanishes at k = 2)")


def burn_branching_tree(t: Tree, k: int) -> ScheduleCertificate:
    """Schedule of at most ``ceil(sqrt(4(k-2)n/(k-1)^2))`` rounds for ``n >= 3``.

    On one or two vertices the optimal schedule is returned; for the single
    edge the formula undercounts once ``k >= 8``, and ``within_bound``
    reports that honestly.
    """
    _check_k(k)
    t = Tree.from_graph(t)
    if not is_k_branching(t, k):
        bad = [v for v in range(t.n) if 2 <= len(t.adj[v]) < k]
        raise InputError(f"tree is not {k}+-branching: vertices {bad} have degree in [2, {k - 1}]")
    log: list[LevelRecord] = []
    seq = _branching_sources(t, k, 0, log)
    sched = BurnSchedule(tuple(seq))
    _replay(t, sched)
    cert = ScheduleCertificate(sched, sched.rounds, "branching", bound_branching(t.n, k), t.n, k, tuple(log))
    if t.n >= 3 and not cert.within_bound:
        raise AssertionError(f"{sched.rounds} rounds exceeds the guaranteed {cert.bound}")
    return cert


def burn_branching_modified(t: Tree, k: int, y: int) -> ScheduleCertificate:
    """Modified schedule with ``{y}`` burned in round 1.

    ``t`` must be ``k+``-branching, or ``(k-1)+``-branching with ``y`` its
    only vertex of degree ``k - 1``. In the latter case ``y`` is merged
    into an internal neighbour (when it has one) and the schedule for the
    merged tree is reused unchanged.
    """
    _check_k(k)
    t = Tree.from_graph(t)
    t.check_vertex(y)
    low = [v for v in range(t.n) if 2 <= len(t.adj[v]) < k]
    if low and (low != [y] or len(t.adj[y]) != k - 1):
        raise InputError(
            f"need a {k}+-branching tree or a single degree-{k - 1} vertex at {y}; "
            f"offending vertices: {low}"
        )
    log: list[LevelRecord] = []
    seq, subcase, child_n = _modified_sources(t, k, y, 0, log)
    sched = BurnSchedule(tuple(seq), frozenset({y}))
    _replay(t, sched)
    bound = bound_branching(child_n, k) if subcase != "terminal" else None
    return ScheduleCertificate(
        sched, sched.rounds, "branching", bound, t.n, k, tuple(log), {"subcase": subcase}
    )


def _any_tree_sources(t: Tree) -> list[int]:
    """Valid schedule for an arbitrary tree, by branching recursion or leaf stripping."""
    if t.n <= 2:
        return [0] if t.n == 1 else [0, 1]
    k = min(len(t.adj[v]) for v in range(t.n) if len(t.adj[v]) >= 2)
    if k >= 3:
        return _branching_sources(t, k, 0, [])
    core, relabel = strip_leaves(t)
    back = {new: old for old, new in relabel.items()}
    inner = [back[v] for v in _any_tree_sources(core)]
    return inner + [inner[0]]


def leafstrip_schedule(t: Tree, k: int, inner: str = "exact") -> ScheduleCertificate:
    """Burn the internal core, then spend one extra round on the leaves.

    ``inner`` picks how the core is burned: ``"exact"`` (optimal, desk
    scale) or ``"recursive"``. The reported ``bound`` is the leaf-strip
    formula for comparison; it is not claimed by construction.
    """
    _check_k(k)
    t = Tree.from_graph(t)
    if not is_k_branching(t, k):
        raise InputError(f"tree is not {k}+-branching")
    core, relabel = strip_leaves(t)
    back = {new: old for old, new in relabel.items()}
    if inner == "exact":
        core_b, witness = exact_burning_number(core)
        core_seq = list(witness.sources)
    elif inner == "recursive":
        core_seq = _any_tree_sources(core)
        _replay(core, BurnSchedule(tuple(core_seq)))
        core_b = None
    else:
        raise InputError(f"unknown inner strategy {inner!r}; use 'exact' or 'recursive'")
    seq = [back[v] for v in core_seq]
    seq.append(seq[0])
    sched = BurnSchedule(tuple(seq))
    _replay(t, sched)
    extra = {"core_n": core.n, "core_rounds": len(core_seq), "inner": inner}
    if core_b is not None:
        extra["core_exact_b"] = core_b
    return ScheduleCertificate(sched, sched.rounds, "leafstrip", bound_leafstrip(t.n, k), t.n, k, (), extra)
