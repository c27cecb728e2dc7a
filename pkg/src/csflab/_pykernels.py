"""Pure-Python implementations of the enumeration kernels.

Every function here has a twin in ``_kernels.pyx`` that must return
identical results (including the canonical vertex order), so the two
backends can be swapped without changing any output byte.

Graphs are passed as ``n`` plus a list of adjacency bitmasks.
"""

from __future__ import annotations

BACKEND = "python"


def _refine(adj, cells):
    # Equitable refinement of an ordered partition. Fragments of a cell are
    # ordered by their neighbour-count vector over the cells of the previous
    # pass, which keeps the procedure isomorphism invariant.
    while True:
        masks = [sum(1 << v for v in cell) for cell in cells]
        out = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups = {}
            for v in cell:
                a = adj[v]
                sig = tuple((a & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            for sig in sorted(groups):
                out.append(groups[sig])
        if len(out) == len(cells):
            return out
        cells = out


def _twins(adj, u, w):
    return (adj[u] & ~(1 << w)) == (adj[w] & ~(1 << u))


def canonical_certificate(n, adj):
    """Return ``(rows, order)`` for the canonical relabelling of a graph.

    ``order[p]`` is the vertex placed at position ``p``; ``rows[p]`` is the
    bitmask of positions adjacent to position ``p``. ``rows`` is the
    lexicographically least certificate over the individualisation-refinement
    search tree.
    """
    if n == 0:
        return (), []
    best = None
    best_order = None

    def search(cells):
        nonlocal best, best_order
        cells = _refine(adj, cells)
        if len(cells) == n:
            order = [c[0] for c in cells]
            pos = [0] * n
            for p, v in enumerate(order):
                pos[v] = p
            rows = []
            for v in order:
                a = adj[v]
                r = 0
                while a:
                    low = a & -a
                    r |= 1 << pos[low.bit_length() - 1]
                    a ^= low
                rows.append(r)
            rows = tuple(rows)
            if best is None or rows < best:
                best, best_order = rows, order
            return
        i = next(j for j, c in enumerate(cells) if len(c) > 1)
        cell = cells[i]
        tried = []
        for v in cell:
            # swapping twins is an automorphism fixing the current node
            if any(_twins(adj, v, w) for w in tried):
                continue
            tried.append(v)
            rest = [w for w in cell if w != v]
            search(cells[:i] + [[v], rest] + cells[i + 1:])

    search([list(range(n))])
    return best, best_order


def stable_census(n, adj):
    """Count set partitions of the vertex set into independent blocks.

    Returns ``{code: count}`` where ``code`` packs the block-size multiset as
    4-bit multiplicities: bits ``4*(s-1)..4*s-1`` hold the number of blocks
    of size ``s``.
    """
    counts = {}
    if n == 0:
        counts[0] = 1
        return counts
    if n > 15:
        raise ValueError("4-bit block-size packing supports at most 15 vertices")

    def parts(remaining, code):
        if not remaining:
            counts[code] = counts.get(code, 0) + 1
            return
        low = remaining & -remaining
        v = low.bit_length() - 1
        rest = remaining ^ low
        grow(rest, 1, rest & ~adj[v], code)

    def grow(rest, size, cand, code):
        parts(rest, code + (1 << (4 * (size - 1))))
        c = cand
        while c:
            low = c & -c
            u = low.bit_length() - 1
            c ^= low
            grow(rest ^ low, size + 1, c & ~adj[u], code)

    parts((1 << n) - 1, 0)
    return counts


def edge_subset_census(n, edges, max_size):
    """Tally spanning subgraphs ``(V, A)`` with ``|A| <= max_size``.

    Returns ``{(nullity, sizes): count}`` where ``sizes`` is the descending
    tuple of component sizes and ``nullity = |A| - n + #components``.
    """
    parent = list(range(n))
    size = [1] * n
    counts = {}
    m = len(edges)

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    def dfs(i, chosen, nullity):
        if i == m or chosen == max_size:
            sizes = tuple(sorted((size[v] for v in range(n) if parent[v] == v), reverse=True))
            key = (nullity, sizes)
            counts[key] = counts.get(key, 0) + 1
            return
        dfs(i + 1, chosen, nullity)
        u, v = edges[i]
        ru, rv = find(u), find(v)
        if ru == rv:
            dfs(i + 1, chosen + 1, nullity + 1)
            return
        if size[ru] < size[rv] or (size[ru] == size[rv] and ru > rv):
            ru, rv = rv, ru
        parent[rv] = ru
        size[ru] += size[rv]
        dfs(i + 1, chosen + 1, nullity)
        size[ru] -= size[rv]
        parent[rv] = rv

    dfs(0, 0, 0)
    return counts
