# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
# distutils: language = c++
"""Compiled enumeration kernels; mirror of ``_pykernels`` (same outputs)."""

from libc.stdint cimport uint32_t, uint64_t
from libcpp.unordered_map cimport unordered_map
from libcpp.map cimport map as cppmap
from libcpp.vector cimport vector
from cython.operator cimport dereference as deref, preincrement as inc

cdef extern from *:
    int __builtin_popcount(unsigned int) noexcept nogil
    int __builtin_ctz(unsigned int) noexcept nogil

BACKEND = "cython"

cdef enum:
    MAXN = 16


cdef struct OrderedPartition:
    int verts[MAXN]
    int start[MAXN + 1]
    int ncells


cdef struct CanonState:
    int n
    uint32_t adj[MAXN]
    uint32_t best[MAXN]
    int best_order[MAXN]
    int have_best


cdef void _refine(CanonState* st, OrderedPartition* P) noexcept nogil:
    cdef uint32_t masks[MAXN]
    cdef uint64_t sig[MAXN]
    cdef int tmp[MAXN]
    cdef int nverts[MAXN]
    cdef int nstart[MAXN + 1]
    cdef int c, c2, i, j, a, b, v, nk, pos, size
    cdef uint64_t s, key_s
    cdef int key_v
    cdef uint32_t av
    while True:
        for c in range(P.ncells):
            masks[c] = 0
            for i in range(P.start[c], P.start[c + 1]):
                masks[c] |= (<uint32_t>1) << P.verts[i]
        nk = 0
        pos = 0
        for c in range(P.ncells):
            a = P.start[c]
            b = P.start[c + 1]
            if b - a == 1:
                nstart[nk] = pos
                nk += 1
                nverts[pos] = P.verts[a]
                pos += 1
                continue
            size = b - a
            for i in range(size):
                v = P.verts[a + i]
                av = st.adj[v]
                s = 0
                for c2 in range(P.ncells):
                    s |= (<uint64_t>__builtin_popcount(av & masks[c2])) << (4 * (15 - c2))
                sig[i] = s
                tmp[i] = v
            # insertion sort by (sig, vertex)
            for i in range(1, size):
                key_s = sig[i]
                key_v = tmp[i]
                j = i - 1
                while j >= 0 and (sig[j] > key_s or (sig[j] == key_s and tmp[j] > key_v)):
                    sig[j + 1] = sig[j]
                    tmp[j + 1] = tmp[j]
                    j -= 1
                sig[j + 1] = key_s
                tmp[j + 1] = key_v
            for i in range(size):
                if i == 0 or sig[i] != sig[i - 1]:
                    nstart[nk] = pos
                    nk += 1
                nverts[pos] = tmp[i]
                pos += 1
        nstart[nk] = pos
        if nk == P.ncells:
            return
        for i in range(pos):
            P.verts[i] = nverts[i]
        for i in range(nk + 1):
            P.start[i] = nstart[i]
        P.ncells = nk


cdef inline bint _twins(CanonState* st, int u, int w) noexcept nogil:
    return (st.adj[u] & ~((<uint32_t>1) << w)) == (st.adj[w] & ~((<uint32_t>1) << u))


cdef void _search(CanonState* st, OrderedPartition P) noexcept nogil:
    cdef int n = st.n
    cdef int pos[MAXN]
    cdef uint32_t rows[MAXN]
    cdef int tried[MAXN]
    cdef int ntried = 0
    cdef int i, p, v, u, t, k, a, b, target, cmp
    cdef uint32_t av, r
    cdef bint skip
    cdef OrderedPartition Q
    _refine(st, &P)
    if P.ncells == n:
        for p in range(n):
            pos[P.verts[p]] = p
        for p in range(n):
            av = st.adj[P.verts[p]]
            r = 0
            while av:
                u = __builtin_ctz(av)
                av &= av - 1
                r |= (<uint32_t>1) << pos[u]
            rows[p] = r
        cmp = 0
        if st.have_best:
            for p in range(n):
                if rows[p] != st.best[p]:
                    cmp = -1 if rows[p] < st.best[p] else 1
                    break
        if not st.have_best or cmp < 0:
            st.have_best = 1
            for p in range(n):
                st.best[p] = rows[p]
                st.best_order[p] = P.verts[p]
        return
    target = 0
    while P.start[target + 1] - P.start[target] == 1:
        target += 1
    a = P.start[target]
    b = P.start[target + 1]
    for i in range(a, b):
        v = P.verts[i]
        skip = False
        for t in range(ntried):
            if _twins(st, v, tried[t]):
                skip = True
                break
        if skip:
            continue
        tried[ntried] = v
        ntried += 1
        # cells before target unchanged, then [v], then target minus v, then the rest
        Q.ncells = P.ncells + 1
        for k in range(target + 1):
            Q.start[k] = P.start[k]
        Q.start[target + 1] = a + 1
        for k in range(target + 1, P.ncells + 1):
            Q.start[k + 1] = P.start[k]
        for k in range(a):
            Q.verts[k] = P.verts[k]
        Q.verts[a] = v
        p = a + 1
        for k in range(a, b):
            if P.verts[k] != v:
                Q.verts[p] = P.verts[k]
                p += 1
        for k in range(b, n):
            Q.verts[k] = P.verts[k]
        _search(st, Q)


def canonical_certificate(int n, adj):
    cdef CanonState st
    cdef OrderedPartition P
    cdef int i
    if n == 0:
        return (), []
    if n > MAXN:
        raise ValueError("compiled canonical labelling supports at most 16 vertices")
    st.n = n
    st.have_best = 0
    for i in range(n):
        st.adj[i] = adj[i]
    for i in range(n):
        P.verts[i] = i
    P.start[0] = 0
    P.start[1] = n
    P.ncells = 1
    with nogil:
        _search(&st, P)
    return tuple(st.best[i] for i in range(n)), [st.best_order[i] for i in range(n)]


cdef void _grow(uint32_t rest, int size, uint32_t cand, uint64_t code, uint32_t* adj,
                unordered_map[uint64_t, long long]* counts) noexcept nogil:
    cdef uint32_t c = cand
    cdef uint32_t low
    cdef int u
    _parts(rest, code + ((<uint64_t>1) << (4 * (size - 1))), adj, counts)
    while c:
        u = __builtin_ctz(c)
        low = (<uint32_t>1) << u
        c &= c - 1
        _grow(rest & ~low, size + 1, c & ~adj[u], code, adj, counts)


cdef void _parts(uint32_t remaining, uint64_t code, uint32_t* adj,
                 unordered_map[uint64_t, long long]* counts) noexcept nogil:
    cdef int v
    cdef uint32_t rest
    if remaining == 0:
        deref(counts)[code] = deref(counts)[code] + 1
        return
    v = __builtin_ctz(remaining)
    rest = remaining & ~((<uint32_t>1) << v)
    _grow(rest, 1, rest & ~adj[v], code, adj, counts)


def stable_census(int n, adj):
    cdef uint32_t cadj[MAXN]
    cdef unordered_map[uint64_t, long long] counts
    cdef int i
    if n == 0:
        return {0: 1}
    if n > 15:
        raise ValueError("compiled stable census supports at most 15 vertices")
    for i in range(n):
        cadj[i] = adj[i]
    with nogil:
        _parts(((<uint32_t>1) << n) - 1, 0, cadj, &counts)
    out = {}
    cdef unordered_map[uint64_t, long long].iterator it = counts.begin()
    while it != counts.end():
        out[deref(it).first] = deref(it).second
        inc(it)
    return out


cdef struct SubsetState:
    int n
    int m
    int max_size
    int* eu
    int* ev
    int* parent
    int* size


cdef inline int _find(int* parent, int x) noexcept nogil:
    while parent[x] != x:
        x = parent[x]
    return x


cdef void _record(SubsetState* st, int nullity, cppmap[vector[int], long long]* counts) noexcept nogil:
    cdef vector[int] key
    cdef int v, i, j, s
    key.push_back(nullity)
    for v in range(st.n):
        if st.parent[v] == v:
            key.push_back(st.size[v])
    # descending insertion sort of the size part
    for i in range(2, key.size()):
        s = key[i]
        j = i - 1
        while j >= 1 and key[j] < s:
            key[j + 1] = key[j]
            j -= 1
        key[j + 1] = s
    deref(counts)[key] = deref(counts)[key] + 1


cdef void _subsets(SubsetState* st, int i, int chosen, int nullity,
                   cppmap[vector[int], long long]* counts) noexcept nogil:
    cdef int ru, rv, tmp
    if i == st.m or chosen == st.max_size:
        _record(st, nullity, counts)
        return
    _subsets(st, i + 1, chosen, nullity, counts)
    ru = _find(st.parent, st.eu[i])
    rv = _find(st.parent, st.ev[i])
    if ru == rv:
        _subsets(st, i + 1, chosen + 1, nullity + 1, counts)
        return
    if st.size[ru] < st.size[rv] or (st.size[ru] == st.size[rv] and ru > rv):
        tmp = ru
        ru = rv
        rv = tmp
    st.parent[rv] = ru
    st.size[ru] += st.size[rv]
    _subsets(st, i + 1, chosen + 1, nullity, counts)
    st.size[ru] -= st.size[rv]
    st.parent[rv] = rv


def edge_subset_census(int n, edges, int max_size):
    cdef SubsetState st
    cdef cppmap[vector[int], long long] counts
    cdef vector[int] eu, ev, parent, size
    cdef int i
    for u, v in edges:
        eu.push_back(u)
        ev.push_back(v)
    for i in range(n):
        parent.push_back(i)
        size.push_back(1)
    st.n = n
    st.m = eu.size()
    st.max_size = max_size
    st.eu = eu.data()
    st.ev = ev.data()
    st.parent = parent.data()
    st.size = size.data()
    with nogil:
        _subsets(&st, 0, 0, 0, &counts)
    out = {}
    cdef cppmap[vector[int], long long].iterator it = counts.begin()
    while it != counts.end():
        key = deref(it).first
        out[(key[0], tuple(key[1:]))] = deref(it).second
        inc(it)
    return out
