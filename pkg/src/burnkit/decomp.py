"""Structural tree operations: split vertices, internal/leaf counting, leaf stripping."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from .errors import DomainError, InputError
from .graph import Graph, Tree, component_on_edge_removal, induced_subgraph, rooted_sizes


@dataclass(frozen=True)
class SplitCertificate:
    """A vertex ``x`` whose incident branches are all small except one.

    ``ordered_neighbors`` lists ``v_1..v_m``; ``side_sizes[i]`` is the size
    of the branch hanging off ``v_i`` for ``i < m`` and, in the last slot,
    the size of ``x``'s own side of the edge ``x v_m``.
    """

    x: int
    ordered_neighbors: tuple[int, ...]
    side_sizes: tuple[int, ...]
    p: Fraction

    @property
    def large(self) -> int:
        """``v_m``, the neighbour across the one large side."""
        return self.ordered_neighbors[-1]

    def to_json(self) -> dict:
        return {
            "x": self.x,
            "ordered_neighbors": list(self.ordered_neighbors),
            "side_sizes": list(self.side_sizes),
            "p": str(self.p),
        }


def _as_fraction(p) -> Fraction:
    if isinstance(p, float):
        return Fraction(p)
    if isinstance(p, (int, Rational)):
        return Fraction(p)
    if isinstance(p, str):
        try:
            return Fraction(p)
        except ValueError:
            raise InputError(f"threshold {p!r} is not a rational number") from None
    raise InputError(f"threshold {p!r} is not a rational number")


def find_split_vertex(t: Tree, p) -> SplitCertificate:
    """Locate ``x`` with ``|T_x(x v_m)| > p`` and every other branch ``<= p``.

    Roots the tree at its smallest-id leaf and descends into the child
    whose subtree exceeds ``p`` (smallest id on ties) until none does; the
    parent edge then plays the role of ``v_m``. Since the root is a leaf,
    the walk always moves at least once, so ``x`` has a parent and a child.
    """
    p = _as_fraction(p)
    if t.n < 3:
        raise InputError(f"split vertex needs n >= 3, got n={t.n}")
    if not 1 <= p < t.n - 1:
        raise InputError(f"threshold p={p} outside [1, {t.n - 1})")
    root = min(v for v in range(t.n) if len(t.adj[v]) == 1)
    _, parent, size = rooted_sizes(t, root)
    x = root
    while True:
        heavy = [c for c in t.adj[x] if c != parent[x] and size[c] > p]
        if not heavy:
            break
        x = min(heavy)
    children = sorted(c for c in t.adj[x] if c != parent[x])
    cert = SplitCertificate(
        x=x,
        ordered_neighbors=tuple(children) + (parent[x],),
        side_sizes=tuple(size[c] for c in children) + (size[x],),
        p=p,
    )
    check_split_certificate(t, cert)
    return cert


def check_split_certificate(t: Graph, cert: SplitCertificate) -> None:
    """Recompute every branch with a fresh traversal; raise on any mismatch."""
    nbrs = cert.ordered_neighbors
    if len(nbrs) < 2 or sorted(nbrs) != list(t.adj[cert.x]):
        raise AssertionError(f"certificate neighbours {nbrs} do not match N({cert.x})")
    seen = {cert.x}
    for v, claimed in zip(nbrs[:-1], cert.side_sizes[:-1]):
        side = component_on_edge_removal(t, v, cert.x)
        if len(side) != claimed or not len(side) <= cert.p:
            raise AssertionError(f"branch at {v} has {len(side)} vertices, claimed {claimed}, p={cert.p}")
        seen |= side
    big = component_on_edge_removal(t, cert.x, nbrs[-1])
    if len(big) != cert.side_sizes[-1] or not len(big) > cert.p:
        raise AssertionError(f"large side has {len(big)} vertices, claimed {cert.side_sizes[-1]}, p={cert.p}")
    if seen != big:
        raise AssertionError("small branches plus x do not make up the large side")


def min_order_for_internals(internals: int, k: int) -> int:
    """Fewest vertices of a ``k+``-branching tree with ``internals`` internal vertices."""
    if internals < 0 or k < 2:
        raise InputError(f"need internals >= 0 and k >= 2, got {internals}, {k}")
    return internals * (k - 1) + 2


def max_internals_for_order(n: int, k: int) -> int:
    """Largest internal count any ``k+``-branching tree on ``n >= 2`` vertices can have."""
    if n < 2 or k < 2:
        raise InputError(f"need n >= 2 and k >= 2, got {n}, {k}")
    return (n - 2) // (k - 1)


def min_leaf_count(n: int, k: int) -> int:
    """``ceil(n (k-2) / (k-1))`` in integer arithmetic."""
    if k < 3:
        raise InputError(f"leaf lower bound needs k >= 3, got {k}")
    return -(-n * (k - 2) // (k - 1))


def strip_leaves(t: Tree) -> tuple[Tree, dict[int, int]]:
    """Subtree induced by the internal vertices, with its ``old -> new`` map."""
    if t.n < 3:
        raise DomainError(f"a tree on {t.n} vertices has no internal vertex to keep")
    keep = [v for v in range(t.n) if len(t.adj[v]) >= 2]
    sub, relabel = induced_subgraph(t, keep)
    return sub, relabel
