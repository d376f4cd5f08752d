"""Breakpoint graphs, alternating-cycle decompositions and lower bounds."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from ._core import kernels
from .genome import (
    SignedGenome,
    UnsignedGenome,
    UnsignedPermutation,
    breakpoint_count,
)


class DecompositionError(ValueError):
    """Raised when a graph cannot be split into alternating cycles."""


class DecompositionLimitError(RuntimeError):
    pass


@dataclass(frozen=True)
class AlternatingCycle:
    """Closed alternating walk ``x0 -black- x1 -grey- x2 -black- ... -grey- x0``."""

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices) // 2

    @property
    def trivial(self) -> bool:
        return self.length == 1

    def black_edges(self):
        vs = self.vertices
        return [tuple(sorted((vs[i], vs[i + 1]))) for i in range(0, len(vs), 2)]

    def grey_edges(self):
        vs = self.vertices
        k = len(vs)
        return [tuple(sorted((vs[i], vs[(i + 1) % k]))) for i in range(1, k, 2)]

    def canonical(self) -> tuple[int, ...]:
        vs = self.vertices
        k = len(vs)
        rev = vs[::-1]
        forms = [vs[i:] + vs[:i] for i in range(0, k, 2)]
        forms += [rev[i:] + rev[:i] for i in range(0, k, 2)]
        return min(forms)


@dataclass(frozen=True)
class CycleDecomposition:
    cycles: tuple[AlternatingCycle, ...]

    @property
    def c(self) -> int:
        return len(self.cycles)

    @property
    def c1(self) -> int:
        return sum(1 for cy in self.cycles if cy.trivial)

    @property
    def score(self) -> int:
        """``c - 2*c1``, the quantity an optimal decomposition minimises."""
        return self.c - 2 * self.c1

    def canonical(self):
        return tuple(sorted(cy.canonical() for cy in self.cycles))


@dataclass(frozen=True)
class SignedBreakpointGraph:
    n: int
    black: tuple[tuple[int, int], ...]
    grey: tuple[tuple[int, int], ...]
    decomposition: CycleDecomposition

    @property
    def c(self) -> int:
        return self.decomposition.c

    @property
    def c1(self) -> int:
        return self.decomposition.c1


@dataclass(frozen=True)
class UnsignedBreakpointGraph:
    n: int
    black: tuple[tuple[int, int], ...]
    grey: tuple[tuple[int, int], ...]

    @property
    def num_vertices(self) -> int:
        return self.n + 2


@dataclass(frozen=True)
class PermutationCycleStructure:
    c: int
    c1: int


@dataclass(frozen=True)
class BoundReport:
    lb: int
    c: int
    c1: int
    b: int
    first_edge_is_01: bool

    @property
    def gap(self) -> int:
        return self.lb - self.b

    def line(self) -> str:
        flag = "true" if self.first_edge_is_01 else "false"
        return f"lb={self.lb} c={self.c} c1={self.c1} b={self.b} first_edge_is_01={flag}"


# ----------------------------------------------------------------------------
# signed


def build_signed_bg(g: SignedGenome) -> SignedBreakpointGraph:
    size = 2 * g.n + 2
    partner = [0] * size
    for u, v in g.edges:
        partner[u] = v
        partner[v] = u
    seen = [False] * size
    cycles = []
    for s in range(size):
        if seen[s]:
            continue
        walk = []
        u = s
        while True:
            w = partner[u]
            seen[u] = seen[w] = True
            walk += (u, w)
            u = w ^ 1
            if u == s:
                break
        cycles.append(AlternatingCycle(tuple(walk)))
    grey = tuple((2 * i, 2 * i + 1) for i in range(g.n + 1))
    return SignedBreakpointGraph(g.n, g.edges, grey, CycleDecomposition(tuple(cycles)))


def lb_signed_prefix_dcj(g: SignedGenome) -> int:
    return kernels.signed_lb(g.flat, g.n)


def signed_report(g: SignedGenome) -> BoundReport:
    c, c1 = kernels.signed_cycle_counts(g.flat, g.n)
    first = g.edges[0] == (0, 1)
    lb = g.n + 1 + c - 2 * c1 - (0 if first else 2)
    # black edges that are not grey edges play the role of breakpoints
    return BoundReport(lb, c, c1, g.n + 1 - c1, first)


# ----------------------------------------------------------------------------
# unsigned


def build_unsigned_bg(g: UnsignedGenome) -> UnsignedBreakpointGraph:
    grey = tuple((i, i + 1) for i in range(g.n + 1))
    black_deg = [0] * (g.n + 2)
    grey_deg = [0] * (g.n + 2)
    for u, v in g.edges:
        black_deg[u] += 1
        black_deg[v] += 1
    for u, v in grey:
        grey_deg[u] += 1
        grey_deg[v] += 1
    if black_deg != grey_deg:
        raise DecompositionError("black and grey degrees differ; not a sortable genome")
    return UnsignedBreakpointGraph(g.n, g.edges, grey)


def _ends(bg: UnsignedBreakpointGraph, black_idx, grey_idx):
    black_ends = [[] for _ in range(bg.num_vertices)]
    grey_ends = [[] for _ in range(bg.num_vertices)]
    for b in black_idx:
        u, v = bg.black[b]
        black_ends[u].append((b, 0))
        black_ends[v].append((b, 1))
    for i in grey_idx:
        u, v = bg.grey[i]
        grey_ends[u].append((i, 0))
        grey_ends[v].append((i, 1))
    for x in range(bg.num_vertices):
        if len(black_ends[x]) != len(grey_ends[x]):
            raise DecompositionError(f"colour degrees differ at vertex {x}")
    return black_ends, grey_ends


def _trace(bg, black_idx, to_grey, to_black):
    """Closed alternating walks of a transition system, smallest black edge first."""
    used = set()
    cycles = []
    for start in black_idx:
        if start in used:
            continue
        walk = []
        b, side = start, 0
        while True:
            used.add(b)
            walk.append(bg.black[b][side])
            walk.append(bg.black[b][1 - side])
            g, gs = to_grey[(b, 1 - side)]
            b, side = to_black[(g, 1 - gs)]
            if b == start and side == 0:
                break
        cycles.append(AlternatingCycle(tuple(walk)))
    return cycles


def _pairing(black_ends, grey_ends, choice):
    to_grey = {}
    to_black = {}
    for x, (bs, gs) in enumerate(zip(black_ends, grey_ends)):
        gs = gs[::-1] if choice.get(x) else gs
        for be, ge in zip(bs, gs):
            to_grey[be] = ge
            to_black[ge] = be
    return to_grey, to_black


def _trivial_split(bg: UnsignedBreakpointGraph):
    """Pair each black ``{i, i+1}`` with grey ``{i, i+1}``, one copy at most."""
    trivial = []
    rest_black = []
    grey_taken = set()
    for b, (u, v) in enumerate(bg.black):
        if v == u + 1 and u not in grey_taken:
            grey_taken.add(u)
            trivial.append(AlternatingCycle((u, v)))
        else:
            rest_black.append(b)
    rest_grey = [i for i in range(len(bg.grey)) if i not in grey_taken]
    return trivial, rest_black, rest_grey


def optimal_decomposition(bg: UnsignedBreakpointGraph) -> CycleDecomposition:
    """Extract every trivial cycle, then one alternating Eulerian cycle per component.

    The Eulerian cycles come from a transition system (black end paired with
    the lowest free grey end at each vertex) whose closed walks are merged by
    swapping the pairing at vertices where two different walks meet.
    """
    trivial, rest_black, rest_grey = _trivial_split(bg)
    black_ends, grey_ends = _ends(bg, rest_black, rest_grey)
    to_grey, to_black = _pairing(black_ends, grey_ends, {})

    walk_of = {}
    for wid, cyc in enumerate(_walk_ids(bg, rest_black, to_grey, to_black)):
        for be in cyc:
            walk_of[be] = wid
    parent = list(range(len(set(walk_of.values())) or 1))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for x in range(bg.num_vertices):
        if len(black_ends[x]) != 2:
            continue
        (b0, b1), (g0, g1) = black_ends[x], [to_grey[be] for be in black_ends[x]]
        r0, r1 = find(walk_of[b0]), find(walk_of[b1])
        if r0 != r1:
            to_grey[b0], to_grey[b1] = g1, g0
            to_black[g1], to_black[g0] = b0, b1
            parent[r0] = r1
    nontrivial = _trace(bg, rest_black, to_grey, to_black)
    return CycleDecomposition(tuple(trivial + nontrivial))


def _walk_ids(bg, black_idx, to_grey, to_black):
    """Black-end sets of each closed walk of a transition system."""
    seen = set()
    out = []
    for start in black_idx:
        if start in seen:
            continue
        ends = []
        b, side = start, 0
        while True:
            seen.add(b)
            ends += [(b, side), (b, 1 - side)]
            g, gs = to_grey[(b, 1 - side)]
            b, side = to_black[(g, 1 - gs)]
            if b == start and side == 0:
                break
        out.append(ends)
    return out


def enumerate_decompositions(bg: UnsignedBreakpointGraph, limit: int = 10_000) -> list[CycleDecomposition]:
    """Every distinct decomposition into closed alternating walks.

    Each one is a choice, at every vertex with two black and two grey ends, of
    how black ends pair with grey ends.  Deterministic order.
    """
    all_black = list(range(len(bg.black)))
    black_ends, grey_ends = _ends(bg, all_black, range(len(bg.grey)))
    branching = [x for x in range(bg.num_vertices) if len(black_ends[x]) == 2]
    seen = set()
    out = []
    for bits in itertools.product((False, True), repeat=len(branching)):
        to_grey, to_black = _pairing(black_ends, grey_ends, dict(zip(branching, bits)))
        d = CycleDecomposition(tuple(_trace(bg, all_black, to_grey, to_black)))
        key = d.canonical()
        if key in seen:
            continue
        seen.add(key)
        out.append(d)
        if len(out) > limit:
            raise DecompositionLimitError(f"more than {limit} decompositions")
    return out


@lru_cache(maxsize=65536)
def _unsigned_counts(n: int, flat: tuple[int, ...]) -> tuple[int, int]:
    return kernels.unsigned_cycle_counts(flat, n)


def optimal_counts(g: UnsignedGenome) -> tuple[int, int]:
    """``(c*, c1*)`` without building the cycles."""
    return _unsigned_counts(g.n, g.flat)


def lb_unsigned_prefix_dcj(g: UnsignedGenome) -> int:
    c, c1 = optimal_counts(g)
    return g.n + 1 + c - 2 * c1 - (0 if g.edges[0] == (0, 1) else 2)


def unsigned_report(g: UnsignedGenome) -> BoundReport:
    c, c1 = optimal_counts(g)
    first = g.edges[0] == (0, 1)
    lb = g.n + 1 + c - 2 * c1 - (0 if first else 2)
    return BoundReport(lb, c, c1, breakpoint_count(g), first)


def lb_vs_breakpoints(g: UnsignedGenome) -> BoundReport:
    report = unsigned_report(g)
    assert report.lb >= report.b, f"lower bound {report.lb} below breakpoint count {report.b}"
    return report


# ----------------------------------------------------------------------------
# permutations


def perm_cycle_structure(p) -> PermutationCycleStructure:
    values = p.values if isinstance(p, UnsignedPermutation) else tuple(p)
    seen = [False] * (len(values) + 1)
    c = c1 = 0
    for i in range(1, len(values) + 1):
        if seen[i]:
            continue
        c += 1
        c1 += values[i - 1] == i
        j = i
        while not seen[j]:
            seen[j] = True
            j = values[j - 1]
    return PermutationCycleStructure(c, c1)


def prefix_exchange_distance(p) -> int:
    values = p.values if isinstance(p, UnsignedPermutation) else tuple(p)
    cs = perm_cycle_structure(values)
    return len(values) + cs.c - 2 * cs.c1 - (0 if values[0] == 1 else 2)
