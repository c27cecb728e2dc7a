"""Simple graphs on vertices ``0..n-1``, canonical labelling and enumeration."""

from __future__ import annotations

import enum
from collections import deque
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from . import kernels
from .errors import DomainError, check_limit
from .partitions import Partition

MAX_VERTICES = 16

CanonicalKey = bytes


class Graph:
    """Immutable simple undirected graph.

    Edges are stored as normalised ``(min, max)`` pairs; equality is equality
    of labelled graphs. Use :func:`canonical_key` to compare up to isomorphism.
    """

    __slots__ = ("n", "edges", "adj", "_hash")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise DomainError(f"vertex count must be non-negative: {n}")
        if n > MAX_VERTICES:
            raise DomainError(f"graphs are limited to {MAX_VERTICES} vertices, got {n}")
        norm = set()
        adj = [0] * n
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise DomainError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise DomainError(f"edge ({u},{v}) out of range for n={n}")
            if u > v:
                u, v = v, u
            norm.add((u, v))
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(norm))
        object.__setattr__(self, "adj", tuple(adj))
        object.__setattr__(self, "_hash", hash((n, self.edges)))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"

    def __reduce__(self):
        return (Graph, (self.n, self.sorted_edges()))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        a = self.adj[v]
        return [u for u in range(self.n) if a >> u & 1]

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def modified(self, remove: Iterable[Sequence[int]] = (), add: Iterable[Sequence[int]] = ()) -> "Graph":
        """Return a copy with edges removed and added (removals must exist)."""
        edges = set(self.edges)
        for u, v in remove:
            e = (min(u, v), max(u, v))
            if e not in edges:
                raise DomainError(f"cannot remove missing edge {e}")
            edges.remove(e)
        for u, v in add:
            edges.add((min(u, v), max(u, v)))
        return Graph(self.n, edges)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        return Graph(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph, vertices renumbered in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        return Graph(len(vertices), ((index[u], index[v]) for u, v in self.edges if u in index and v in index))

    def disjoint_union(self, other: "Graph") -> "Graph":
        shift = self.n
        return Graph(self.n + other.n, list(self.edges) + [(u + shift, v + shift) for u, v in other.edges])

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists, ordered by least vertex."""
        seen = 0
        out = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = 1 << s
            frontier = 1 << s
            while frontier:
                nxt = 0
                f = frontier
                while f:
                    low = f & -f
                    nxt |= self.adj[low.bit_length() - 1]
                    f ^= low
                frontier = nxt & ~comp
                comp |= nxt
            seen |= comp
            out.append([v for v in range(self.n) if comp >> v & 1])
        return out

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def is_forest(self) -> bool:
        return self.num_edges == self.n - len(self.components())

    def is_tree(self) -> bool:
        return self.n >= 1 and self.is_forest() and self.is_connected()


def part_of(g: Graph) -> Partition:
    """Partition of ``n`` given by the connected-component sizes."""
    return Partition.from_sizes(len(c) for c in g.components())


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle, or ``None`` for a forest."""
    best = None
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < best:
                        best = length
    return best


def shortest_cycle(g: Graph) -> list[int] | None:
    """Lexicographically least shortest cycle ``[v1, ..., vg]``.

    ``v1`` is the least vertex on the cycle and ``v2 < vg`` fixes the
    orientation.
    """
    g_len = girth(g)
    if g_len is None:
        return None
    for root in range(g.n):
        path = [root]

        def dfs(u):
            if len(path) == g_len:
                return g.has_edge(u, root) and path[1] < path[-1]
            for w in g.neighbors(u):
                if w > root and w not in path:
                    path.append(w)
                    if dfs(w):
                        return True
                    path.pop()
            return False

        if dfs(root):
            return path
    raise AssertionError("girth reported a cycle that was not found")


def find_triangle(g: Graph) -> tuple[int, int, int] | None:
    """Lexicographically least triangle ``(a, b, c)`` with ``a < b < c``."""
    for a, b in g.sorted_edges():
        common = g.adj[a] & g.adj[b] & ~((1 << (b + 1)) - 1)
        if common:
            return a, b, (common & -common).bit_length() - 1
    return None


def _key_from_rows(n: int, rows) -> CanonicalKey:
    return bytes([n]) + b"".join(r.to_bytes(2, "big") for r in rows)


@lru_cache(maxsize=1 << 18)
def canonical_form(g: Graph) -> tuple[CanonicalKey, tuple[int, ...]]:
    """Return ``(key, relabeling)``.

    ``key`` is equal for two graphs exactly when they are isomorphic and is
    totally ordered as ``bytes``. ``relabeling[v]`` is the label of ``v`` in
    the canonical representative.
    """
    rows, order = kernels.canonical_certificate(g.n, list(g.adj))
    key = _key_from_rows(g.n, rows)
    perm = [0] * g.n
    for p, v in enumerate(order):
        perm[v] = p
    return key, tuple(perm)


def canonical_key(g: Graph) -> CanonicalKey:
    return canonical_form(g)[0]


def canonical_graph(g: Graph) -> Graph:
    """The canonical representative of ``g``'s isomorphism class."""
    return g.relabel(canonical_form(g)[1])


def graph_from_key(key: CanonicalKey) -> Graph:
    n = key[0]
    rows = [int.from_bytes(key[1 + 2 * p: 3 + 2 * p], "big") for p in range(n)]
    return Graph(n, ((p, q) for p in range(n) for q in range(p + 1, n) if rows[p] >> q & 1))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return canonical_key(g) == canonical_key(h)


def isomorphism(g: Graph, h: Graph) -> tuple[int, ...]:
    """A vertex map ``phi`` with ``g.relabel(phi) == h``."""
    kg, pg = canonical_form(g)
    kh, ph = canonical_form(h)
    if kg != kh:
        raise DomainError("graphs are not isomorphic")
    inv_h = [0] * h.n
    for v, p in enumerate(ph):
        inv_h[p] = v
    return tuple(inv_h[pg[v]] for v in range(g.n))


# special graphs

def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def star_graph(n: int) -> Graph:
    """Star on ``n`` vertices centred at 0 (``ST1 = K1``, ``ST2 = K2``)."""
    return Graph(n, ((0, i) for i in range(1, n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise DomainError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def disjoint_union(*graphs: Graph) -> Graph:
    out = Graph(0)
    for g in graphs:
        out = out.disjoint_union(g)
    return out


class SpecialKind(str, enum.Enum):
    PATH_FAMILY = "path"
    STAR_FAMILY = "star"
    COMPLETE_MULTIPARTITE = "complete-multipartite"


def generate_special(kind, lam) -> Graph:
    """``P_lam``, ``ST_lam`` or the complete multipartite graph ``K_lam``."""
    kind = SpecialKind(kind)
    lam = Partition(lam)
    if not lam:
        raise DomainError("special graphs need a nonempty partition")
    if kind is SpecialKind.COMPLETE_MULTIPARTITE:
        blocks, start = [], 0
        for part in lam:
            blocks.append(range(start, start + part))
            start += part
        edges = [(u, v) for i, j in combinations(range(len(blocks)), 2) for u in blocks[i] for v in blocks[j]]
        return Graph(lam.weight, edges)
    factory = path_graph if kind is SpecialKind.PATH_FAMILY else star_graph
    return disjoint_union(*(factory(p) for p in lam))


# enumeration

class GraphClass(str, enum.Enum):
    ALL = "all"
    FORESTS = "forests"
    TREES = "trees"


ENUMERATION_LIMITS = {GraphClass.ALL: 9, GraphClass.FORESTS: 12, GraphClass.TREES: 12}


@lru_cache(maxsize=None)
def _classes(n: int, cls: GraphClass) -> tuple[Graph, ...]:
    # Every graph in the class arises from a smaller member by adding a
    # vertex (any neighbourhood for ALL; at most one neighbour for forests;
    # exactly one for trees), so augmentation plus deduplication is complete.
    if n == 0:
        return (Graph(0),) if cls is not GraphClass.TREES else ()
    if n == 1:
        return (Graph(1),)
    seen = {}
    v = n - 1
    for base in _classes(n - 1, cls):
        if cls is GraphClass.ALL:
            nbhds = range(1 << v)
        elif cls is GraphClass.FORESTS:
            nbhds = [0] + [1 << u for u in range(v)]
        else:
            nbhds = [1 << u for u in range(v)]
        for mask in nbhds:
            adj = [a | ((mask >> u & 1) << v) for u, a in enumerate(base.adj)]
            adj.append(mask)
            rows, _ = kernels.canonical_certificate(n, adj)
            key = _key_from_rows(n, rows)
            if key not in seen:
                seen[key] = rows
    return tuple(graph_from_key(k) for k in sorted(seen))


def enumerate_graphs(n: int, cls=GraphClass.ALL) -> tuple[Graph, ...]:
    """One canonical representative per isomorphism class, sorted by key."""
    cls = GraphClass(cls)
    if n < 0:
        raise DomainError(f"vertex count must be non-negative: {n}")
    check_limit(f"enumerate_graphs({cls.value}) n", n, ENUMERATION_LIMITS[cls])
    return _classes(n, cls)
