# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; mirrors ``_kernels_py`` function for function."""

from cpython.ref cimport Py_INCREF
from cpython.tuple cimport PyTuple_New, PyTuple_SET_ITEM
from libc.stdlib cimport free, malloc


cdef inline long _enc(long u, long v):
    if u > v:
        u, v = v, u
    return (u << 20) | v


cdef tuple _to_tuple(long *codes, Py_ssize_t m):
    cdef tuple out = PyTuple_New(2 * m)
    cdef Py_ssize_t i
    cdef object a, b
    for i in range(m):
        a = codes[i] >> 20
        b = codes[i] & 0xFFFFF
        Py_INCREF(a)
        PyTuple_SET_ITEM(out, 2 * i, a)
        Py_INCREF(b)
        PyTuple_SET_ITEM(out, 2 * i + 1, b)
    return out


cdef long *_load(tuple flat, Py_ssize_t m) except NULL:
    cdef long *codes = <long *> malloc(m * sizeof(long))
    if codes == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(m):
        codes[i] = ((<long> flat[2 * i]) << 20) | (<long> flat[2 * i + 1])
    return codes


cdef inline int _find(int *parent, int x) nogil:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def breakpoint_count(tuple flat):
    cdef Py_ssize_t i, size = len(flat)
    cdef long u, v, pu = -1, pv = -1
    cdef int count = 0
    for i in range(0, size, 2):
        u = flat[i]
        v = flat[i + 1]
        if u != 0:
            if v - u != 1 or (u == pu and v == pv):
                count += 1
        pu = u
        pv = v
    return count


cdef int _strip_mask(long *codes, Py_ssize_t m, int n, char *blocked) except -1:
    cdef int *parent = <int *> malloc((n + 2) * sizeof(int))
    cdef int *size = <int *> malloc((n + 2) * sizeof(int))
    cdef char *adj = <char *> malloc(m)
    if parent == NULL or size == NULL or adj == NULL:
        free(parent)
        free(size)
        free(adj)
        raise MemoryError()
    cdef int x, ru, rv
    cdef long u, v, pu = -1, pv = -1
    cdef Py_ssize_t j
    for x in range(n + 2):
        parent[x] = x
        size[x] = 1
    for j in range(m):
        u = codes[j] >> 20
        v = codes[j] & 0xFFFFF
        adj[j] = 0
        if u != 0 and v - u == 1 and not (u == pu and v == pv):
            adj[j] = 1
            ru = _find(parent, u)
            rv = _find(parent, v)
            if ru != rv:
                parent[ru] = rv
                size[rv] += size[ru]
        pu = u
        pv = v
    for j in range(m):
        blocked[j] = adj[j] and size[_find(parent, codes[j] >> 20)] > 2
    free(parent)
    free(size)
    free(adj)
    return 0


def long_strip_mask(tuple flat, int n):
    cdef Py_ssize_t m = len(flat) // 2
    cdef long *codes = _load(flat, m)
    cdef char *blocked = <char *> malloc(m)
    try:
        _strip_mask(codes, m, n, blocked)
        return [bool(blocked[j]) for j in range(m)]
    finally:
        free(codes)
        free(blocked)


cdef list _children(tuple flat, int n, bint restricted):
    cdef Py_ssize_t m = len(flat) // 2
    cdef long *codes = _load(flat, m)
    cdef long *buf = <long *> malloc(m * sizeof(long))
    cdef char *blocked = <char *> malloc(m)
    cdef Py_ssize_t j, i, k, pos
    cdef long v = flat[1]
    cdef long w, x, c, d, e2, prev = -1
    cdef int t
    cdef tuple child
    cdef list out = []
    cdef set seen = {flat}
    try:
        if restricted:
            _strip_mask(codes, m, n, blocked)
        for j in range(1, m):
            if codes[j] == prev:
                continue
            prev = codes[j]
            if restricted and blocked[j]:
                continue
            w = codes[j] >> 20
            x = codes[j] & 0xFFFFF
            for t in range(2):
                if t == 0:
                    c = w
                    d = x
                else:
                    if w == x:
                        break
                    c = x
                    d = w
                # (0, c) sorts first; merge {v, d} into the remaining sorted edges
                e2 = _enc(v, d)
                buf[0] = c
                pos = 1
                k = 0
                for i in range(1, m):
                    if i == j:
                        continue
                    if k == 0 and e2 <= codes[i]:
                        buf[pos] = e2
                        pos += 1
                        k = 1
                    buf[pos] = codes[i]
                    pos += 1
                if k == 0:
                    buf[pos] = e2
                child = _to_tuple(buf, m)
                if child not in seen:
                    seen.add(child)
                    out.append((child, c, d))
    finally:
        free(codes)
        free(buf)
        free(blocked)
    return out


def unsigned_children(tuple flat, int n, bint restricted=False):
    return _children(flat, n, restricted)


def signed_children(tuple flat, int n):
    return _children(flat, n, False)


cdef void _unsigned_counts(tuple flat, int n, int *c_out, int *c1_out):
    cdef int *parent = <int *> malloc((n + 2) * sizeof(int))
    cdef char *touched = <char *> malloc(n + 2)
    cdef char *grey_used = <char *> malloc(n + 1)
    cdef Py_ssize_t i, size = len(flat)
    cdef int u, v, x, ru, rv, c1 = 0, comps = 0
    for x in range(n + 2):
        parent[x] = x
        touched[x] = 0
    for x in range(n + 1):
        grey_used[x] = 0
    for i in range(0, size, 2):
        u = flat[i]
        v = flat[i + 1]
        if v == u + 1 and not grey_used[u]:
            grey_used[u] = 1
            c1 += 1
            continue
        touched[u] = 1
        touched[v] = 1
        ru = _find(parent, u)
        rv = _find(parent, v)
        if ru != rv:
            parent[ru] = rv
    for x in range(n + 1):
        if not grey_used[x]:
            touched[x] = 1
            touched[x + 1] = 1
            ru = _find(parent, x)
            rv = _find(parent, x + 1)
            if ru != rv:
                parent[ru] = rv
    for x in range(n + 2):
        if touched[x] and _find(parent, x) == x:
            comps += 1
    free(parent)
    free(touched)
    free(grey_used)
    c_out[0] = c1 + comps
    c1_out[0] = c1


def unsigned_cycle_counts(tuple flat, int n):
    cdef int c, c1
    _unsigned_counts(flat, n, &c, &c1)
    return c, c1


def unsigned_lb(tuple flat, int n):
    cdef int c, c1
    _unsigned_counts(flat, n, &c, &c1)
    return n + 1 + c - 2 * c1 - (0 if flat[1] == 1 else 2)


def unsigned_shape_ok(tuple flat, int n):
    if len(flat) != 2 * (n + 1):
        return False
    cdef int *nb = <int *> malloc(2 * (n + 2) * sizeof(int))
    cdef int *deg = <int *> malloc((n + 2) * sizeof(int))
    cdef Py_ssize_t i
    cdef int u, v, x, prev, cur, nxt, steps
    cdef bint ok = True
    try:
        for x in range(n + 2):
            deg[x] = 0
        for i in range(0, len(flat), 2):
            u = flat[i]
            v = flat[i + 1]
            if u < 0 or v > n + 1 or u > v or deg[u] >= 2 or deg[v] >= 2 - (u == v):
                return False
            nb[2 * u + deg[u]] = v
            deg[u] += 1
            nb[2 * v + deg[v]] = u
            deg[v] += 1
        if deg[0] != 1 or deg[n + 1] != 1:
            return False
        for x in range(1, n + 1):
            if deg[x] != 2:
                return False
        prev = 0
        cur = nb[0]
        steps = 1
        while cur != n + 1:
            if nb[2 * cur] == prev and nb[2 * cur + 1] == prev:
                return False
            nxt = nb[2 * cur + 1] if nb[2 * cur] == prev else nb[2 * cur]
            prev = cur
            cur = nxt
            steps += 1
            if steps > n + 1:
                return False
        return ok
    finally:
        free(nb)
        free(deg)


cdef void _signed_counts(tuple flat, int n, int *c_out, int *c1_out):
    cdef int size = 2 * n + 2
    cdef int *partner = <int *> malloc(size * sizeof(int))
    cdef char *seen = <char *> malloc(size)
    cdef Py_ssize_t i
    cdef int s, u, w, length, c = 0, c1 = 0
    for i in range(0, len(flat), 2):
        partner[<int> flat[i]] = flat[i + 1]
        partner[<int> flat[i + 1]] = flat[i]
    for s in range(size):
        seen[s] = 0
    for s in range(size):
        if seen[s]:
            continue
        length = 0
        u = s
        while True:
            w = partner[u]
            seen[u] = 1
            seen[w] = 1
            length += 1
            u = w ^ 1
            if u == s:
                break
        c += 1
        if length == 1:
            c1 += 1
    free(partner)
    free(seen)
    c_out[0] = c
    c1_out[0] = c1


def signed_cycle_counts(tuple flat, int n):
    cdef int c, c1
    _signed_counts(flat, n, &c, &c1)
    return c, c1


def signed_lb(tuple flat, int n):
    cdef int c, c1
    _signed_counts(flat, n, &c, &c1)
    return n + 1 + c - 2 * c1 - (0 if flat[1] == 1 else 2)
