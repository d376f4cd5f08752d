"""Pure-Python hot kernels.

Every function here has a compiled twin in ``_kernels.pyx`` with the same
signature and results; ``pdcj._core`` picks one at import time.

Genomes travel through the kernels as *flat keys*: a tuple of ``2 * (n + 1)``
ints holding the edge multiset as ``(u, v)`` pairs with ``u <= v``, pairs in
lexicographic order.  Since vertex 0 always has degree one, the first pair is
the edge at 0.
"""


def breakpoint_count(flat):
    count = 0
    pu = pv = -1
    for i in range(0, len(flat), 2):
        u = flat[i]
        v = flat[i + 1]
        if u != 0:
            if v - u != 1 or (u == pu and v == pv):
                count += 1
        pu = u
        pv = v
    return count


def _find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def long_strip_mask(flat, n):
    """Per edge index, True when the edge is an adjacency inside a long strip."""
    m = len(flat) // 2
    parent = list(range(n + 2))
    size = [1] * (n + 2)
    adjacency = [False] * m
    pu = pv = -1
    for j in range(m):
        u = flat[2 * j]
        v = flat[2 * j + 1]
        if u != 0 and v - u == 1 and not (u == pu and v == pv):
            adjacency[j] = True
            ru = _find(parent, u)
            rv = _find(parent, v)
            if ru != rv:
                parent[ru] = rv
                size[rv] += size[ru]
        pu = u
        pv = v
    return [adjacency[j] and size[_find(parent, flat[2 * j])] > 2 for j in range(m)]


def unsigned_children(flat, n, restricted=False):
    """Distinct genomes one prefix DCJ away, as ``(child, c, d)`` triples.

    The move behind each child cuts ``(0, v)`` and ``(c, d)`` and joins
    ``{0, c}``, ``{v, d}``.  Children equal to ``flat`` are dropped.  With
    ``restricted`` the second cut never falls inside a long strip.
    """
    m = len(flat) // 2
    v = flat[1]
    blocked = long_strip_mask(flat, n) if restricted else None
    pairs = [(flat[2 * i], flat[2 * i + 1]) for i in range(m)]
    out = []
    seen = {flat}
    prev = None
    for j in range(1, m):
        e = pairs[j]
        if e == prev:
            continue
        prev = e
        if blocked is not None and blocked[j]:
            continue
        w, x = e
        base = pairs[1:j] + pairs[j + 1:]
        for c, d in ((w, x), (x, w)):
            edges = base + [(0, c), (v, d) if v <= d else (d, v)]
            edges.sort()
            child = tuple(t for pair in edges for t in pair)
            if child not in seen:
                seen.add(child)
                out.append((child, c, d))
            if w == x:
                break
    return out


def unsigned_cycle_counts(flat, n):
    """``(c*, c1*)`` of the optimal decomposition of the unsigned breakpoint graph."""
    parent = list(range(n + 2))
    touched = [False] * (n + 2)
    grey_used = [False] * (n + 1)
    c1 = 0
    for i in range(0, len(flat), 2):
        u = flat[i]
        v = flat[i + 1]
        if v == u + 1 and not grey_used[u]:
            grey_used[u] = True
            c1 += 1
            continue
        touched[u] = touched[v] = True
        ru = _find(parent, u)
        rv = _find(parent, v)
        if ru != rv:
            parent[ru] = rv
    for i in range(n + 1):
        if not grey_used[i]:
            touched[i] = touched[i + 1] = True
            ru = _find(parent, i)
            rv = _find(parent, i + 1)
            if ru != rv:
                parent[ru] = rv
    comps = 0
    for x in range(n + 2):
        if touched[x] and _find(parent, x) == x:
            comps += 1
    return c1 + comps, c1


def unsigned_lb(flat, n):
    c, c1 = unsigned_cycle_counts(flat, n)
    return n + 1 + c - 2 * c1 - (0 if flat[1] == 1 else 2)


def unsigned_shape_ok(flat, n):
    """True when the edges form one path 0..n+1 plus cycles."""
    if len(flat) != 2 * (n + 1):
        return False
    deg = [0] * (n + 2)
    nbrs = [[] for _ in range(n + 2)]
    for i in range(0, len(flat), 2):
        u = flat[i]
        v = flat[i + 1]
        if u < 0 or v > n + 1 or u > v:
            return False
        deg[u] += 1
        deg[v] += 1
        nbrs[u].append(v)
        nbrs[v].append(u)
    if deg[0] != 1 or deg[n + 1] != 1:
        return False
    for x in range(1, n + 1):
        if deg[x] != 2:
            return False
    prev = 0
    cur = nbrs[0][0]
    steps = 1
    while cur != n + 1:
        a, b = nbrs[cur]
        if a == prev and b == prev:
            return False
        nxt = b if a == prev else a
        prev = cur
        cur = nxt
        steps += 1
        if steps > n + 1:
            return False
    return True


def signed_cycle_counts(flat, n):
    """``(c, c1)`` of the signed breakpoint graph of a perfect matching."""
    size = 2 * n + 2
    partner = [0] * size
    for i in range(0, len(flat), 2):
        partner[flat[i]] = flat[i + 1]
        partner[flat[i + 1]] = flat[i]
    seen = [False] * size
    c = c1 = 0
    for s in range(size):
        if seen[s]:
            continue
        length = 0
        u = s
        while True:
            w = partner[u]
            seen[u] = seen[w] = True
            length += 1
            u = w ^ 1
            if u == s:
                break
        c += 1
        if length == 1:
            c1 += 1
    return c, c1


def signed_lb(flat, n):
    c, c1 = signed_cycle_counts(flat, n)
    return n + 1 + c - 2 * c1 - (0 if flat[1] == 1 else 2)


def signed_children(flat, n):
    m = len(flat) // 2
    v = flat[1]
    pairs = [(flat[2 * i], flat[2 * i + 1]) for i in range(m)]
    out = []
    seen = {flat}
    for j in range(1, m):
        w, x = pairs[j]
        base = pairs[1:j] + pairs[j + 1:]
        for c, d in ((w, x), (x, w)):
            edges = base + [(0, c), (v, d) if v <= d else (d, v)]
            edges.sort()
            child = tuple(t for pair in edges for t in pair)
            if child not in seen:
                seen.add(child)
                out.append((child, c, d))
    return out
