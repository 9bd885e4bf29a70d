"""Simple undirected graphs and trees on dense integer vertex ids.

Vertices are always ``0..n-1``. Every operation that drops or renumbers
vertices returns an explicit ``old -> new`` mapping so schedules can be
carried back to the original labels.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .errors import DomainError, InputError

UNREACHABLE = -1


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph stored as sorted adjacency tuples."""

    n: int
    adj: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 1:
            raise InputError(f"graph needs at least one vertex, got n={self.n}")
        if len(self.adj) != self.n:
            raise InputError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        for u, row in enumerate(self.adj):
            if list(row) != sorted(set(row)):
                raise InputError(f"adjacency of {u} is not sorted and duplicate-free")
            for v in row:
                if not 0 <= v < self.n:
                    raise InputError(f"neighbour {v} of {u} out of range")
                if v == u:
                    raise InputError(f"self-loop at {u}")
                if u not in self.adj[v]:
                    raise InputError(f"edge {u}-{v} is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 1:
            raise InputError(f"graph needs at least one vertex, got n={n}")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InputError(f"self-loop at {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    @property
    def m(self) -> int:
        return sum(len(r) for r in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self.adj[u]

    def check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise InputError(f"vertex {v!r} out of range [0, {self.n})")


@dataclass(frozen=True)
class Tree(Graph):
    """A graph certified connected with exactly ``n - 1`` edges."""

    def __post_init__(self):
        super().__post_init__()
        if self.m != self.n - 1:
            raise DomainError(f"a tree on {self.n} vertices needs {self.n - 1} edges, got {self.m}")
        if not is_connected(self):
            raise DomainError("tree is not connected")

    @classmethod
    def from_graph(cls, g: Graph) -> "Tree":
        if isinstance(g, Tree):
            return g
        return cls(g.n, g.adj)

    @cached_property
    def leaves(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.n) if len(self.adj[v]) == 1)

    @cached_property
    def internal(self) -> tuple[int, ...]:
        # a lone vertex (degree 0) is counted as internal: "non-leaf"
        return tuple(v for v in range(self.n) if len(self.adj[v]) != 1)

    @cached_property
    def rooted(self) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
        """``(order, parent, size)`` for the tree rooted at vertex 0."""
        return rooted_sizes(self, 0)


def is_connected(g: Graph) -> bool:
    return UNREACHABLE not in bfs_distances(g, 0)


def require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise DomainError("graph is disconnected")


def bfs_distances(g: Graph, src: int) -> list[int]:
    """Hop distances from ``src``; unreachable vertices get ``UNREACHABLE``."""
    g.check_vertex(src)
    dist = [UNREACHABLE] * g.n
    dist[src] = 0
    queue = deque([src])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for v in g.adj[u]:
            if dist[v] == UNREACHABLE:
                dist[v] = du
                queue.append(v)
    return dist


def distance_matrix(g: Graph) -> list[list[int]]:
    return [bfs_distances(g, v) for v in range(g.n)]


def eccentricity(g: Graph, v: int) -> int:
    dist = bfs_distances(g, v)
    if UNREACHABLE in dist:
        raise DomainError("eccentricity is undefined on a disconnected graph")
    return max(dist)


def eccentricities(g: Graph) -> list[int]:
    return [eccentricity(g, v) for v in range(g.n)]


def radius(g: Graph) -> int:
    return min(eccentricities(g))


def diameter(g: Graph) -> int:
    return max(eccentricities(g))


def center_vertex(g: Graph) -> int:
    """Smallest-id vertex of minimum eccentricity."""
    ecc = eccentricities(g)
    return ecc.index(min(ecc))


def graph_power(g: Graph, k: int) -> Graph:
    """``g^k``: join every pair at distance ``1..k`` in ``g``."""
    if k < 1:
        raise InputError(f"graph power needs k >= 1, got {k}")
    require_connected(g)
    if k == 1:
        return Graph(g.n, g.adj)
    rows = []
    for u in range(g.n):
        dist = bfs_distances(g, u)
        rows.append(tuple(v for v in range(g.n) if 0 < dist[v] <= k))
    return Graph(g.n, tuple(rows))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph on ``vertices`` relabelled in ascending order.

    Returns the subgraph and the ``old -> new`` map. The result is a
    :class:`Tree` when ``g`` is one (callers must pass a connected subset).
    """
    keep = sorted(set(vertices))
    for v in keep:
        g.check_vertex(v)
    relabel = {old: new for new, old in enumerate(keep)}
    rows = tuple(tuple(relabel[w] for w in g.adj[v] if w in relabel) for v in keep)
    cls = Tree if isinstance(g, Tree) else Graph
    return cls(len(keep), rows), relabel


def component_on_edge_removal(t: Graph, x: int, y: int) -> frozenset[int]:
    """Vertices of the component containing ``x`` once edge ``xy`` is cut."""
    t.check_vertex(x)
    t.check_vertex(y)
    if not t.has_edge(x, y):
        raise InputError(f"{x}-{y} is not an edge")
    seen = {x}
    stack = [x]
    while stack:
        u = stack.pop()
        for v in t.adj[u]:
            if v not in seen and not (u == x and v == y):
                seen.add(v)
                stack.append(v)
    return frozenset(seen)


def contract_edge(t: Tree, y: int, z: int) -> tuple[Tree, dict[int, int]]:
    """Delete ``y`` and hang its other neighbours on ``z``.

    Surviving vertices keep their relative order; the returned map sends
    each old id (except ``y``) to its new id.
    """
    t.check_vertex(y)
    t.check_vertex(z)
    if not t.has_edge(y, z):
        raise InputError(f"{y}-{z} is not an edge")
    edges = []
    for u, v in t.edges():
        if y in (u, v):
            other = v if u == y else u
            if other != z:
                edges.append((z, other))
        else:
            edges.append((u, v))
    relabel = {old: (old if old < y else old - 1) for old in range(t.n) if old != y}
    g = Graph.from_edges(t.n - 1, [(relabel[u], relabel[v]) for u, v in edges])
    return Tree(g.n, g.adj), relabel


def rooted_sizes(t: Graph, root: int) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
    """BFS order, parent array (root's parent is -1) and subtree sizes."""
    parent = [-1] * t.n
    order = [root]
    seen = [False] * t.n
    seen[root] = True
    for u in order:
        for v in t.adj[u]:
            if not seen[v]:
                seen[v] = True
                parent[v] = u
                order.append(v)
    size = [1] * t.n
    for u in reversed(order[1:]):
        size[parent[u]] += size[u]
    return tuple(order), tuple(parent), tuple(size)


def bfs_spanning_tree(g: Graph, root: int) -> Tree:
    """BFS tree of a connected graph; neighbours visited in ascending id."""
    require_connected(g)
    _, parent, _ = rooted_sizes(g, root)
    g2 = Graph.from_edges(g.n, [(v, p) for v, p in enumerate(parent) if p >= 0])
    return Tree(g2.n, g2.adj)


def is_k_branching(t: Graph, k: int) -> bool:
    """True iff no vertex has degree in ``2..k-1`` (leaves and hubs only)."""
    return all(len(r) == 1 or len(r) >= k or len(r) == 0 for r in t.adj)


def leaf_count(t: Graph) -> int:
    return sum(1 for r in t.adj if len(r) == 1)


def internal_count(t: Graph) -> int:
    return t.n - leaf_count(t)


def relabel_graph(g: Graph, perm: Sequence[int] | Mapping[int, int]) -> Graph:
    """Apply a vertex permutation ``old -> perm[old]``."""
    g2 = Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])
    if isinstance(g, Tree):
        return Tree(g2.n, g2.adj)
    return g2
