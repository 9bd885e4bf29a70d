"""Independent reference implementations used only by the tests.

Nothing here imports burnkit's algorithms; distances come from networkx and
the burning process is re-implemented from its round-by-round definition.
"""
from __future__ import annotations

import itertools
from decimal import Decimal, getcontext

import networkx as nx

getcontext().prec = 60


def to_nx(g) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def naive_burns(h: nx.Graph, sources, initial=()) -> bool:
    """Spread fire one round at a time; True if every vertex ends up burned."""
    burned = set(initial) | {sources[0]}
    for src in sources[1:]:
        spread = {w for u in burned for w in h[u]}
        burned |= spread | {src}
    return len(burned) == h.number_of_nodes()


def naive_burn_rounds(h: nx.Graph, sources, initial=()) -> dict[int, int]:
    rounds = {v: 1 for v in set(initial) | {sources[0]}}
    for r, src in enumerate(sources[1:], start=2):
        new = {w for u in rounds for w in h[u] if w not in rounds}
        if src not in rounds:
            new.add(src)
        rounds.update({v: r for v in new})
    return rounds


def naive_burning_number(h: nx.Graph, initial=()) -> int:
    """Smallest t such that some length-t sequence burns ``h`` (exhaustive)."""
    n = h.number_of_nodes()
    for t in range(1, n + 1):
        if any(naive_burns(h, seq, initial) for seq in itertools.product(range(n), repeat=t)):
            return t
    raise AssertionError("unreachable: n sources always suffice on a connected graph")


def decimal_ceil_sqrt(x: Decimal) -> int:
    r = x.sqrt()
    c = int(r.to_integral_value(rounding="ROUND_CEILING"))
    # guard against the last-digit rounding in sqrt
    while (c - 1) ** 2 >= x and c > 0:
        c -= 1
    while c * c < x:
        c += 1
    return c


def decimal_branching(n: int, k: int) -> int:
    return decimal_ceil_sqrt(Decimal(4 * (k - 2) * n) / Decimal((k - 1) ** 2))


def decimal_power(n: int, k: int) -> int:
    return decimal_ceil_sqrt(Decimal(4 * (k - 1) * n) / Decimal(k * k))


def decimal_leafstrip(n: int, k: int) -> int:
    return decimal_ceil_sqrt(Decimal(4 * n) / Decimal(3 * (k - 1))) + 2


def scan_threshold(k: int, limit: int = 5000) -> int:
    """Largest ``n`` with ``sqrt(X) <= sqrt(Y) + 2``, by a linear scan in high precision."""
    last = None
    for n in range(1, limit):
        x = Decimal(4 * n * (k - 2)) / Decimal((k - 1) ** 2)
        y = Decimal(4 * n) / Decimal(3 * (k - 1))
        if x.sqrt() <= y.sqrt() + 2:
            last = n
    return last
