"""Genome types and the prefix DCJ move.

An unsigned genome over ``{0, ..., n+1}`` is stored as its sorted edge
multiset; loops are ``(v, v)`` and a doubled edge appears twice.  A signed
genome is a perfect matching over ``{0, ..., 2n+1}`` stored the same way.
Both are immutable; moves return new genomes.
"""

from __future__ import annotations

import struct
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

from ._core import kernels

STRAIGHT = "straight"
CROSSED = "crossed"

PREFIX_REVERSAL = "prefix-reversal"
CYCLE_EXTRACTION = "cycle-extraction"
CYCLE_REINCORPORATION = "cycle-reincorporation"
MOVE_KINDS = (PREFIX_REVERSAL, CYCLE_EXTRACTION, CYCLE_REINCORPORATION)


class InvalidGenomeError(ValueError):
    pass


class InvalidMoveError(ValueError):
    pass


def _edge(u: int, v: int) -> tuple[int, int]:
    u = int(u)
    v = int(v)
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class UnsignedPermutation:
    values: tuple[int, ...]

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        if not values or sorted(values) != list(range(1, len(values) + 1)):
            raise InvalidGenomeError(f"not a permutation of [1..n]: {values}")
        object.__setattr__(self, "values", values)

    @property
    def n(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)


@dataclass(frozen=True)
class SignedPermutation:
    values: tuple[int, ...]

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        if not values or sorted(abs(v) for v in values) != list(range(1, len(values) + 1)):
            raise InvalidGenomeError(f"not a signed permutation of [1..n]: {values}")
        object.__setattr__(self, "values", values)

    @property
    def n(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)


@dataclass(frozen=True)
class UnsignedGenome:
    """One path from 0 to n+1 plus vertex-disjoint cycles."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        edges = tuple(sorted(_edge(u, v) for u, v in self.edges))
        object.__setattr__(self, "edges", edges)
        if self.n < 1:
            raise InvalidGenomeError("n must be positive")
        counts = Counter(edges)
        if any(c > 2 for c in counts.values()):
            raise InvalidGenomeError("edge multiplicity above 2")
        if not kernels.unsigned_shape_ok(self.flat, self.n):
            raise InvalidGenomeError(
                "edges must form one path with endpoints 0 and n+1 plus cycles"
            )

    @classmethod
    def _trusted(cls, n: int, edges: Iterable[tuple[int, int]]) -> "UnsignedGenome":
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "edges", tuple(sorted(edges)))
        return g

    @classmethod
    def from_flat(cls, n: int, flat: Sequence[int]) -> "UnsignedGenome":
        return cls._trusted(n, zip(flat[::2], flat[1::2]))

    @property
    def flat(self) -> tuple[int, ...]:
        return tuple(t for e in self.edges for t in e)

    @property
    def num_vertices(self) -> int:
        return self.n + 2

    @property
    def end(self) -> int:
        return self.n + 1

    def edge_at_zero(self) -> tuple[int, int]:
        return self.edges[0]


@dataclass(frozen=True)
class SignedGenome:
    """A perfect matching over ``{0, ..., 2n+1}``."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        edges = tuple(sorted(_edge(u, v) for u, v in self.edges))
        object.__setattr__(self, "edges", edges)
        if self.n < 1:
            raise InvalidGenomeError("n must be positive")
        covered = sorted(t for e in edges for t in e)
        if covered != list(range(2 * self.n + 2)):
            raise InvalidGenomeError("edges must form a perfect matching over 0..2n+1")

    @classmethod
    def _trusted(cls, n: int, edges: Iterable[tuple[int, int]]) -> "SignedGenome":
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "edges", tuple(sorted(edges)))
        return g

    @classmethod
    def from_flat(cls, n: int, flat: Sequence[int]) -> "SignedGenome":
        return cls._trusted(n, zip(flat[::2], flat[1::2]))

    @property
    def flat(self) -> tuple[int, ...]:
        return tuple(t for e in self.edges for t in e)

    @property
    def num_vertices(self) -> int:
        return 2 * self.n + 2

    @property
    def end(self) -> int:
        return 2 * self.n + 1

    def edge_at_zero(self) -> tuple[int, int]:
        return self.edges[0]


Genome = Union[UnsignedGenome, SignedGenome]


@dataclass(frozen=True)
class PrefixDcj:
    """Cut ``cut_a = {0, v}`` and ``cut_b = (w, x)``, then join.

    ``straight`` adds ``{0, w}, {v, x}``; ``crossed`` adds ``{0, x}, {v, w}``.
    ``copy`` picks which copy of a doubled ``cut_b`` is consumed; both copies
    give the same genome.
    """

    cut_a: tuple[int, int]
    cut_b: tuple[int, int]
    join: str = STRAIGHT
    copy: int = 0
    kind: str | None = field(default=None, compare=False)

    def __post_init__(self):
        a = tuple(int(t) for t in self.cut_a)
        if 0 not in a:
            raise InvalidMoveError(f"first cut {a} does not contain vertex 0")
        object.__setattr__(self, "cut_a", (0, a[1] if a[0] == 0 else a[0]))
        object.__setattr__(self, "cut_b", tuple(int(t) for t in self.cut_b))
        if self.join not in (STRAIGHT, CROSSED):
            raise InvalidMoveError(f"unknown join {self.join!r}")
        if self.copy not in (0, 1):
            raise InvalidMoveError("copy index must be 0 or 1")

    def added_edges(self) -> tuple[tuple[int, int], tuple[int, int]]:
        v = self.cut_a[1]
        w, x = self.cut_b
        if self.join == STRAIGHT:
            return _edge(0, w), _edge(v, x)
        return _edge(0, x), _edge(v, w)

    def normalized(self) -> "PrefixDcj":
        """Same move written as a straight join."""
        if self.join == STRAIGHT:
            return self
        w, x = self.cut_b
        return PrefixDcj(self.cut_a, (x, w), STRAIGHT, self.copy, self.kind)

    def added_pair(self) -> tuple[tuple[int, int], tuple[int, int]]:
        """Added edges in oriented form ``((0, c), (v, d))``."""
        v = self.cut_a[1]
        w, x = self.cut_b
        if self.join == STRAIGHT:
            return (0, w), (v, x)
        return (0, x), (v, w)

    def inverse(self) -> "PrefixDcj":
        (_, c), (v, d) = self.added_pair()
        return PrefixDcj((0, c), (v, d), STRAIGHT)

    def with_kind(self, kind: str) -> "PrefixDcj":
        return PrefixDcj(self.cut_a, self.cut_b, self.join, self.copy, kind)


@dataclass(frozen=True)
class Strip:
    elements: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.elements)

    @property
    def orientation(self) -> str | None:
        if len(self.elements) < 2:
            return None
        return "ascending" if self.elements[1] > self.elements[0] else "descending"


@dataclass(frozen=True)
class Scenario:
    start: Genome
    moves: tuple[PrefixDcj, ...]
    snapshots: tuple[Genome, ...] | None = None

    @classmethod
    def build(cls, start: Genome, moves: Iterable[PrefixDcj], keep_snapshots=True) -> "Scenario":
        """Replay ``moves`` from ``start``, labelling each with its kind."""
        labelled = []
        snaps = []
        g = start
        for m in moves:
            kind = classify_move(g, m)
            g = apply_prefix_dcj(g, m)
            labelled.append(m.with_kind(kind))
            if keep_snapshots:
                snaps.append(g)
        return cls(start, tuple(labelled), tuple(snaps) if keep_snapshots else None)

    @property
    def length(self) -> int:
        return len(self.moves)

    def __len__(self):
        return len(self.moves)

    @property
    def final(self) -> Genome:
        if self.snapshots is not None:
            return self.snapshots[-1] if self.snapshots else self.start
        g = self.start
        for m in self.moves:
            g = apply_prefix_dcj(g, m)
        return g


# ----------------------------------------------------------------------------
# construction


def identity_unsigned(n: int) -> UnsignedGenome:
    return UnsignedGenome._trusted(n, ((i, i + 1) for i in range(n + 1)))


def identity_signed(n: int) -> SignedGenome:
    return SignedGenome._trusted(n, ((2 * i, 2 * i + 1) for i in range(n + 1)))


def genome_from_unsigned_perm(p) -> UnsignedGenome:
    if not isinstance(p, UnsignedPermutation):
        p = UnsignedPermutation(tuple(p))
    ext = (0,) + p.values + (p.n + 1,)
    return UnsignedGenome._trusted(p.n, (_edge(ext[i], ext[i + 1]) for i in range(p.n + 1)))


def unsigned_translation(p) -> UnsignedPermutation:
    """The doubled sequence of a signed permutation, without sentinels."""
    if not isinstance(p, SignedPermutation):
        p = SignedPermutation(tuple(p))
    out = []
    for x in p.values:
        if x > 0:
            out += (2 * x - 1, 2 * x)
        else:
            out += (-2 * x, -2 * x - 1)
    return UnsignedPermutation(tuple(out))


def signed_genome_from_perm(p) -> SignedGenome:
    if not isinstance(p, SignedPermutation):
        p = SignedPermutation(tuple(p))
    ext = (0,) + unsigned_translation(p).values + (2 * p.n + 1,)
    return SignedGenome._trusted(p.n, (_edge(ext[2 * i], ext[2 * i + 1]) for i in range(p.n + 1)))


def genome_to_permutation(g: UnsignedGenome) -> UnsignedPermutation:
    """Read a linear unsigned genome back as a permutation."""
    path, cycles = components(g)
    if cycles:
        raise InvalidGenomeError("genome is not linear")
    return UnsignedPermutation(tuple(path[0][1:-1]))


def signed_genome_to_permutation(g: SignedGenome) -> SignedPermutation:
    path, cycles = components(g)
    if cycles:
        raise InvalidGenomeError("signed genome is not linear")
    inner = path[0][1:-1]
    values = []
    for i in range(0, len(inner), 2):
        a, b = inner[i], inner[i + 1]
        values.append((a + 1) // 2 if a < b else -((b + 1) // 2))
    return SignedPermutation(tuple(values))


# ----------------------------------------------------------------------------
# structure


def _incidence(num_vertices, edges):
    inc = [[] for _ in range(num_vertices)]
    for idx, (u, v) in enumerate(edges):
        inc[u].append(idx)
        inc[v].append(idx)
    return inc


def _walk(edges, inc, used, start):
    verts = [start]
    eidx = []
    cur = start
    while True:
        for e in inc[cur]:
            if not used[e]:
                break
        else:
            return verts, eidx
        used[e] = True
        u, v = edges[e]
        cur = v if u == cur else u
        verts.append(cur)
        eidx.append(e)


def _structure_edges(g: Genome):
    # signed genomes read as chromosomes: matching plus gene edges {2k-1, 2k}
    if isinstance(g, SignedGenome):
        return list(g.edges) + [(2 * k - 1, 2 * k) for k in range(1, g.n + 1)]
    return list(g.edges)


def _components_with_edges(g: Genome):
    edges = _structure_edges(g)
    inc = _incidence(g.num_vertices, edges)
    used = [False] * len(edges)
    path = _walk(edges, inc, used, 0)
    cycles = []
    for s in range(g.num_vertices):
        if any(not used[e] for e in inc[s]):
            verts, eidx = _walk(edges, inc, used, s)
            cycles.append((verts[:-1], eidx))
    return edges, path, cycles


def components(g: Genome):
    """``(path, cycles)`` as vertex sequences; path is ``(vertices, edge_indices)``.

    The path runs from 0 to the last vertex; each cycle starts at its smallest
    vertex and lists each vertex once.
    """
    _, path, cycles = _components_with_edges(g)
    return path, [c[0] for c in cycles]


def _breakpoint_flags(edges):
    flags = []
    prev = None
    for u, v in edges:
        flags.append(u != 0 and (v - u != 1 or (u, v) == prev))
        prev = (u, v)
    return flags


def breakpoints(g: UnsignedGenome):
    """``(count, breakpoint_edges)``.

    Of a doubled edge ``{i, i+1}`` one copy is a breakpoint and the other an
    adjacency.  Edges at 0 are never breakpoints.
    """
    flags = _breakpoint_flags(g.edges)
    bad = [e for e, f in zip(g.edges, flags) if f]
    return len(bad), bad


def breakpoint_count(g: UnsignedGenome) -> int:
    return kernels.breakpoint_count(g.flat)


def strips(g: UnsignedGenome) -> list[Strip]:
    """Maximal breakpoint-free runs over ``{1..n+1}``, path first, then cycles."""
    edges = list(g.edges)
    flags = _breakpoint_flags(edges)
    inc = _incidence(g.num_vertices, edges)
    used = [False] * len(edges)
    out = []
    verts, eidx = _walk(edges, inc, used, 0)
    run = [verts[1]]
    for i in range(1, len(eidx)):
        if flags[eidx[i]]:
            out.append(Strip(tuple(run)))
            run = []
        run.append(verts[i + 1])
    out.append(Strip(tuple(run)))
    for s in range(g.num_vertices):
        if not any(not used[e] for e in inc[s]):
            continue
        verts, eidx = _walk(edges, inc, used, s)
        verts = verts[:-1]
        k = len(verts)
        t = next(i for i in range(k) if flags[eidx[i]])
        run = []
        for step in range(k):
            i = (t + 1 + step) % k
            run.append(verts[i])
            if flags[eidx[i]]:
                out.append(Strip(tuple(run)))
                run = []
    return out


def is_identity(g: Genome) -> bool:
    if isinstance(g, SignedGenome):
        return all(v == u + 1 and u % 2 == 0 for u, v in g.edges)
    return all(e == (i, i + 1) for i, e in enumerate(g.edges))


def canonical_key(g: Genome) -> bytes:
    tag = b"S" if isinstance(g, SignedGenome) else b"U"
    flat = g.flat
    return tag + struct.pack(f">{len(flat) + 1}I", g.n, *flat)


def key_from_flat(kind: str, n: int, flat: Sequence[int]) -> bytes:
    tag = b"S" if kind == "signed" else b"U"
    return tag + struct.pack(f">{len(flat) + 1}I", n, *flat)


# ----------------------------------------------------------------------------
# moves


def _checked_cuts(g: Genome, m: PrefixDcj):
    a = g.edges[0]
    if m.cut_a != a:
        raise InvalidMoveError(f"first cut {m.cut_a} is not the edge at 0 ({a})")
    b = _edge(*m.cut_b)
    if 0 in b:
        raise InvalidMoveError("second cut must differ from the edge at 0")
    count = g.edges.count(b)
    if count == 0:
        raise InvalidMoveError(f"second cut {b} is not an edge of the genome")
    if m.copy >= count:
        raise InvalidMoveError(f"edge {b} has no copy {m.copy}")
    return a, b


def apply_prefix_dcj(g: Genome, m: PrefixDcj) -> Genome:
    a, b = _checked_cuts(g, m)
    edges = list(g.edges)
    edges.remove(a)
    edges.remove(b)
    edges.extend(m.added_edges())
    return type(g)._trusted(g.n, edges)


def classify_move(g: Genome, m: PrefixDcj) -> str:
    _, b = _checked_cuts(g, m)
    struct_edges, path, cycles = _components_with_edges(g)
    on_path = b in {struct_edges[e] for e in path[1]}
    if not on_path:
        return CYCLE_REINCORPORATION
    after = apply_prefix_dcj(g, m)
    _, new_cycles = components(after)
    return CYCLE_EXTRACTION if len(new_cycles) > len(cycles) else PREFIX_REVERSAL


def move_from_child(g: Genome, c: int, d: int) -> PrefixDcj:
    """The straight move that cuts the edge at 0 and ``{c, d}``."""
    return PrefixDcj(g.edges[0], (c, d), STRAIGHT)


def check_unsigned_shape(g: UnsignedGenome) -> bool:
    return kernels.unsigned_shape_ok(g.flat, g.n)
