"""The burning process, schedule validation and exact burning numbers.

Exact search uses the ball-cover characterisation: a schedule of length
``t`` burns ``G`` iff the balls ``N_{t-i}[x_i]`` (``i = 1..t``) cover every
vertex. With a free set ``U`` burned in round 1 the balls ``N_{t-1}[u]``
for ``u`` in ``U`` are added.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Iterable

from .errors import BudgetExceeded, DomainError, InputError
from .graph import UNREACHABLE, Graph, distance_matrix

DEFAULT_EXACT_CAP = 128


@dataclass(frozen=True)
class BurnSchedule:
    """Sources ``b_1..b_t`` plus an optional set burned for free in round 1."""

    sources: tuple[int, ...]
    initial_set: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "sources", tuple(self.sources))
        object.__setattr__(self, "initial_set", frozenset(self.initial_set))
        if not self.sources:
            raise InputError("a burning schedule needs at least one source")

    @property
    def rounds(self) -> int:
        return len(self.sources)

    def to_json(self) -> dict:
        return {
            "sources": list(self.sources),
            "initial_set": sorted(self.initial_set),
            "rounds": self.rounds,
        }

    @classmethod
    def from_json(cls, data: dict) -> "BurnSchedule":
        try:
            sched = cls(tuple(data["sources"]), frozenset(data.get("initial_set", ())))
        except (KeyError, TypeError) as exc:
            raise InputError(f"bad schedule JSON: {exc}") from None
        if "rounds" in data and data["rounds"] != sched.rounds:
            raise InputError(f"schedule claims {data['rounds']} rounds but lists {sched.rounds} sources")
        return sched


@dataclass(frozen=True)
class BurnTrace:
    """First burn round per vertex (1-based, ``None`` if never burned)."""

    burn_round: tuple[int | None, ...]
    rounds_used: int

    @property
    def unburned(self) -> list[int]:
        return [v for v, r in enumerate(self.burn_round) if r is None]

    @property
    def complete(self) -> bool:
        return None not in self.burn_round

    def burned_in(self, r: int) -> list[int]:
        return [v for v, br in enumerate(self.burn_round) if br == r]


def _check_schedule(g: Graph, s: BurnSchedule) -> None:
    for v in s.sources:
        g.check_vertex(v)
    for v in s.initial_set:
        g.check_vertex(v)


def simulate(g: Graph, s: BurnSchedule) -> BurnTrace:
    """Run the process for ``len(s.sources)`` rounds."""
    _check_schedule(g, s)
    burn: list[int | None] = [None] * g.n
    frontier = set(s.initial_set) | {s.sources[0]}
    for v in frontier:
        burn[v] = 1
    for r, src in enumerate(s.sources[1:], start=2):
        new = set()
        for u in frontier:
            for w in g.adj[u]:
                if burn[w] is None:
                    new.add(w)
        if burn[src] is None:
            new.add(src)
        for v in new:
            burn[v] = r
        frontier = new
    return BurnTrace(tuple(burn), s.rounds)


def is_valid(g: Graph, s: BurnSchedule) -> bool:
    return simulate(g, s).complete


def exact_cap() -> int:
    raw = os.environ.get("BURNKIT_EXACT_CAP")
    if raw is None:
        return DEFAULT_EXACT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise InputError(f"BURNKIT_EXACT_CAP must be an integer, got {raw!r}") from None
    if cap < 1:
        raise InputError("BURNKIT_EXACT_CAP must be positive")
    return cap


class _BallCover:
    """Bitmask balls ``N_r[v]`` and the depth-first cover search."""

    def __init__(self, g: Graph):
        if g.n > exact_cap():
            raise InputError(
                f"exact solver is capped at {exact_cap()} vertices (n={g.n}); "
                "set BURNKIT_EXACT_CAP to raise it"
            )
        self.g = g
        self.n = g.n
        self.full = (1 << g.n) - 1
        self.dist = distance_matrix(g)
        if any(UNREACHABLE in row for row in self.dist):
            raise DomainError("exact burning number needs a connected graph")
        self._balls: list[list[int]] = []

    def balls(self, r: int) -> list[int]:
        while len(self._balls) <= r:
            rr = len(self._balls)
            self._balls.append(
                [sum(1 << u for u, d in enumerate(row) if d <= rr) for row in self.dist]
            )
        return self._balls[r]

    def covers(self, t: int, covered: int, lexicographic: bool) -> list[int] | None:
        """Centres ``x_1..x_t`` with radii ``t-1..0`` covering the rest, or None.

        ``lexicographic`` walks centres in ascending id (so the first hit is
        the lexicographically smallest sequence); otherwise centres with
        larger fresh coverage are tried first and useless ones skipped.
        """
        full = self.full
        radii = [t - 1 - i for i in range(t)]
        balls = [self.balls(r) for r in radii]
        dead: set[tuple[int, int]] = set()
        order = range(self.n)

        def reach_bound(i: int, uncovered: int) -> int:
            # most vertices the remaining balls could still add
            total = 0
            for j in range(i, t):
                total += max((b & uncovered).bit_count() for b in balls[j])
            return total

        def rec(i: int, covered: int) -> list[int] | None:
            if covered == full:
                return [0] * (t - i)
            if i == t or (i, covered) in dead:
                return None
            uncovered = full & ~covered
            if uncovered.bit_count() > reach_bound(i, uncovered):
                dead.add((i, covered))
                return None
            row = balls[i]
            if lexicographic:
                cands = order
            else:
                gains = [((row[v] & uncovered).bit_count(), v) for v in order]
                cands = [v for gain, v in sorted(gains, key=lambda p: (-p[0], p[1])) if gain]
            for v in cands:
                rest = rec(i + 1, covered | row[v])
                if rest is not None:
                    return [v] + rest
            dead.add((i, covered))
            return None

        return rec(0, covered)


def _exact(g: Graph, initial: frozenset[int], budget: int | None) -> tuple[int, BurnSchedule]:
    cover = _BallCover(g)
    if budget is None:
        budget = g.n
    if budget < 1:
        raise InputError(f"budget must be positive, got {budget}")
    for t in range(1, budget + 1):
        pre = 0
        if initial:
            ball = cover.balls(t - 1)
            for u in initial:
                pre |= ball[u]
        if cover.covers(t, pre, lexicographic=False) is None:
            continue
        seq = cover.covers(t, pre, lexicographic=True)
        assert seq is not None
        witness = BurnSchedule(tuple(seq), initial)
        if not is_valid(g, witness):  # pragma: no cover - internal consistency
            raise AssertionError(f"exact solver produced an invalid witness {witness}")
        return t, witness
    raise BudgetExceeded(f"no schedule with at most {budget} rounds", partial=budget + 1)


def exact_burning_number(g: Graph, budget: int | None = None) -> tuple[int, BurnSchedule]:
    """Minimum number of rounds, with the lexicographically smallest witness.

    ``budget`` caps the rounds tried (default ``n``, which always suffices);
    :class:`BudgetExceeded` carries the proven lower bound ``budget + 1``.
    """
    return _exact(g, frozenset(), budget)


def exact_modified_burning_number(
    g: Graph, initial: Iterable[int], budget: int | None = None
) -> tuple[int, BurnSchedule]:
    """Like :func:`exact_burning_number` with ``initial`` burned in round 1."""
    initial = frozenset(initial)
    if not initial:
        raise InputError("modified burning needs a nonempty initial set")
    for v in initial:
        g.check_vertex(v)
    return _exact(g, initial, budget)
