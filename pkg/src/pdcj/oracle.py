"""Breadth-first ground truth for small instances, and the exhaustive verifiers."""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass, field

from ._core import kernels
from .breakpoint_graph import (
    build_unsigned_bg,
    enumerate_decompositions,
    optimal_decomposition,
    prefix_exchange_distance,
)
from .genome import (
    STRAIGHT,
    Genome,
    PrefixDcj,
    Scenario,
    SignedGenome,
    UnsignedGenome,
    UnsignedPermutation,
    genome_from_unsigned_perm,
    genome_to_permutation,
    identity_signed,
    identity_unsigned,
    key_from_flat,
    signed_genome_from_perm,
)

ALL_PREFIX_DCJ = "all-prefix-dcj"
NO_LONG_STRIP_CUT = "prefix-dcj-no-long-strip-cut"
PREFIX_EXCHANGE = "prefix-exchange"
MOVE_SETS = (ALL_PREFIX_DCJ, NO_LONG_STRIP_CUT, PREFIX_EXCHANGE)

DEFAULT_CAPS = {"unsigned": 6, "signed": 5}


class OracleCapExceeded(RuntimeError):
    def __init__(self, n, kind, cap, estimate):
        super().__init__(
            f"{kind} n={n} exceeds oracle cap {cap} (about {estimate} states); "
            "raise it with PDCJ_ORACLE_CAP"
        )
        self.n = n
        self.kind = kind
        self.cap = cap
        self.estimate = estimate


def oracle_caps() -> dict[str, int]:
    """Caps from ``PDCJ_ORACLE_CAP``: ``8`` or ``unsigned=8,signed=6``."""
    caps = dict(DEFAULT_CAPS)
    raw = os.environ.get("PDCJ_ORACLE_CAP", "").strip()
    if not raw:
        return caps
    for part in raw.split(","):
        if "=" in part:
            k, v = part.split("=", 1)
            caps[k.strip()] = int(v)
        else:
            caps = {k: int(part) for k in caps}
    return caps


def _cycle_partitions(m: int) -> int:
    # labelled vertices split into cycles; loops and doubled edges count once
    f = [1] + [0] * m
    for size in range(1, m + 1):
        total = 0
        for k in range(1, size + 1):
            ways = 1 if k <= 2 else math.factorial(k - 1) // 2
            total += math.comb(size - 1, k - 1) * ways * f[size - k]
        f[size] = total
    return f[m]


def state_count_estimate(n: int, kind: str) -> int:
    """Size of the genome space the BFS explores."""
    if kind == "signed":
        return math.prod(range(1, 2 * n + 2, 2))
    return sum(math.perm(n, j) * _cycle_partitions(n - j) for j in range(n + 1))


def _check_cap(n, kind, cap):
    limit = cap if cap is not None else oracle_caps()[kind]
    if n > limit:
        raise OracleCapExceeded(n, kind, limit, state_count_estimate(n, kind))


def _kind_of(g) -> str:
    return "signed" if isinstance(g, SignedGenome) else "unsigned"


def _expander(kind, n, move_set):
    if move_set == PREFIX_EXCHANGE:
        def children(p):
            out = []
            for j in range(1, len(p)):
                q = list(p)
                q[0], q[j] = q[j], q[0]
                out.append((tuple(q), 0, j))
            return out
        return children
    if kind == "signed":
        if move_set != ALL_PREFIX_DCJ:
            raise ValueError(f"move set {move_set!r} applies to unsigned genomes only")
        return lambda flat: kernels.signed_children(flat, n)
    restricted = move_set == NO_LONG_STRIP_CUT
    if not restricted and move_set != ALL_PREFIX_DCJ:
        raise ValueError(f"unknown move set {move_set!r}")
    return lambda flat: kernels.unsigned_children(flat, n, restricted)


def _start_and_goal(g, move_set):
    if move_set == PREFIX_EXCHANGE:
        if isinstance(g, UnsignedGenome):
            g = genome_to_permutation(g)
        values = g.values if isinstance(g, UnsignedPermutation) else tuple(g)
        return len(values), "unsigned", values, tuple(range(1, len(values) + 1))
    kind = _kind_of(g)
    goal = identity_signed(g.n) if kind == "signed" else identity_unsigned(g.n)
    return g.n, kind, g.flat, goal.flat


def _bfs_meet(start, goal, children, symmetric):
    """Shortest path length plus parent maps; bidirectional when moves invert."""
    if start == goal:
        return 0, {start: None}, {goal: None}, start
    fwd = {start: None}
    bwd = {goal: None}
    f_front, b_front = [start], [goal]
    f_depth = b_depth = 0
    if not symmetric:
        bwd = {}
    while f_front and (b_front or not symmetric):
        expand_fwd = not symmetric or len(f_front) <= len(b_front)
        if expand_fwd:
            nxt = []
            best = None
            for u in f_front:
                for w, _, _ in children(u):
                    if w in fwd:
                        continue
                    fwd[w] = u
                    if w == goal and not symmetric:
                        return f_depth + 1, fwd, {goal: None}, goal
                    if symmetric and w in bwd:
                        total = f_depth + 1 + _depth_in(bwd, w)
                        if best is None or total < best[0]:
                            best = (total, w)
                    nxt.append(w)
            f_depth += 1
            if best is not None:
                return best[0], fwd, bwd, best[1]
            f_front = nxt
        else:
            nxt = []
            best = None
            for u in b_front:
                for w, _, _ in children(u):
                    if w in bwd:
                        continue
                    bwd[w] = u
                    if w in fwd:
                        total = b_depth + 1 + _depth_in(fwd, w)
                        if best is None or total < best[0]:
                            best = (total, w)
                    nxt.append(w)
            b_depth += 1
            if best is not None:
                return best[0], fwd, bwd, best[1]
            b_front = nxt
    return None, fwd, bwd, None


def _depth_in(parents, node):
    d = 0
    while parents[node] is not None:
        node = parents[node]
        d += 1
    return d


def oracle_distance(g, move_set: str = ALL_PREFIX_DCJ, cap: int | None = None) -> int:
    """Exact number of moves from ``g`` to the identity.

    Moves in ``all-prefix-dcj`` and ``prefix-exchange`` are self-inverse as a
    set, so the search runs from both ends; the restricted set runs forward.
    """
    n, kind, start, goal = _start_and_goal(g, move_set)
    _check_cap(n, kind, cap)
    children = _expander(kind, n, move_set)
    dist, *_ = _bfs_meet(start, goal, children, move_set != NO_LONG_STRIP_CUT)
    if dist is None:
        raise RuntimeError("identity unreachable")
    return dist


def oracle_scenario(g: Genome, cap: int | None = None, keep_snapshots=True) -> Scenario:
    """A shortest scenario over all prefix DCJs, by bidirectional search."""
    n, kind, start, goal = _start_and_goal(g, ALL_PREFIX_DCJ)
    _check_cap(n, kind, cap)
    children = _expander(kind, n, ALL_PREFIX_DCJ)
    dist, fwd, bwd, meet = _bfs_meet(start, goal, children, True)
    states = []
    node = meet
    while node is not None:
        states.append(node)
        node = fwd[node]
    states.reverse()
    node = bwd[meet]
    while node is not None:
        states.append(node)
        node = bwd[node]
    moves = []
    for a, b in zip(states, states[1:]):
        c, d = next((c, d) for w, c, d in children(a) if w == b)
        moves.append(PrefixDcj((0, a[1]), (c, d), STRAIGHT))
    assert len(moves) == dist
    return Scenario.build(g, moves, keep_snapshots)


# ----------------------------------------------------------------------------
# tables


@dataclass
class OracleTable:
    """``perm_distances`` covers every start permutation; ``distances`` every
    genome the backward search reached (flat key, or permutation for
    prefix exchanges)."""

    n: int
    kind: str
    move_set: str
    distances: dict
    perm_distances: dict = field(default_factory=dict)

    @property
    def diameter(self) -> int:
        return max(self.perm_distances.values())

    def _key(self, p) -> str:
        if self.kind == "signed":
            flat = signed_genome_from_perm(p).flat
        else:
            flat = genome_from_unsigned_perm(p).flat
        return key_from_flat(self.kind, self.n, flat).hex()

    def dump(self, fh):
        """One ``<canonical-key-hex> <distance>`` line per permutation, then a summary."""
        rows = sorted((d, self._key(p)) for p, d in self.perm_distances.items())
        for d, key in rows:
            fh.write(f"{key} {d}\n")
        fh.write(f"states={len(rows)} diameter={self.diameter}\n")


def _full_bfs(goal, children):
    dist = {goal: 0}
    frontier = [goal]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for u in frontier:
            for w, _, _ in children(u):
                if w not in dist:
                    dist[w] = d
                    nxt.append(w)
        frontier = nxt
    return dist


def _restricted_distances(n):
    full = _full_bfs(identity_unsigned(n).flat, _expander("unsigned", n, ALL_PREFIX_DCJ))
    reverse = {s: [] for s in full}
    for s in full:
        for w, _, _ in kernels.unsigned_children(s, n, True):
            reverse[w].append(s)
    goal = identity_unsigned(n).flat
    dist = {goal: 0}
    frontier = [goal]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for w in frontier:
            for s in reverse[w]:
                if s not in dist:
                    dist[s] = d
                    nxt.append(s)
        frontier = nxt
    return dist


def all_permutations(n: int, kind: str):
    base = list(itertools.permutations(range(1, n + 1)))
    if kind == "unsigned":
        return base
    out = []
    for p in base:
        for signs in itertools.product((1, -1), repeat=n):
            out.append(tuple(s * x for s, x in zip(signs, p)))
    return out


def oracle_table(n: int, kind: str = "unsigned", move_set: str = ALL_PREFIX_DCJ, cap: int | None = None) -> OracleTable:
    """Distances of every start permutation, from one backward search."""
    _check_cap(n, kind, cap)
    if move_set == PREFIX_EXCHANGE:
        if kind != "unsigned":
            raise ValueError("prefix exchanges act on unsigned permutations")
        dist = _full_bfs(tuple(range(1, n + 1)), _expander(kind, n, move_set))
        return OracleTable(n, kind, move_set, dist, dict(dist))
    if kind == "signed":
        dist = _full_bfs(identity_signed(n).flat, _expander(kind, n, move_set))
        perms = {p: dist[signed_genome_from_perm(p).flat] for p in all_permutations(n, kind)}
    elif move_set == NO_LONG_STRIP_CUT:
        dist = _restricted_distances(n)
        perms = {p: dist.get(genome_from_unsigned_perm(p).flat) for p in all_permutations(n, kind)}
    else:
        dist = _full_bfs(identity_unsigned(n).flat, _expander(kind, n, move_set))
        perms = {p: dist[genome_from_unsigned_perm(p).flat] for p in all_permutations(n, kind)}
    return OracleTable(n, kind, move_set, dist, perms)


# ----------------------------------------------------------------------------
# exhaustive verifiers


@dataclass
class SuiteReport:
    name: str
    n: int
    kind: str
    checked: int = 0
    violations: list = field(default_factory=list)
    worst: list = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.violations

    def summary(self) -> str:
        status = "pass" if self.passed else "FAIL"
        extra = " ".join(f"{k}={v}" for k, v in self.notes.items())
        return (
            f"{self.name} kind={self.kind} n={self.n} checked={self.checked} "
            f"violations={len(self.violations)} {extra} {status}"
        ).replace("  ", " ")


def verify_lower_bounds(n: int, kind: str = "unsigned", cap: int | None = None, states: str = "permutations") -> SuiteReport:
    """lb <= distance everywhere; lb == distance for signed; lb >= b for unsigned.

    ``states="all"`` also covers every reachable non-linear genome.
    """
    table = oracle_table(n, kind, ALL_PREFIX_DCJ, cap)
    report = SuiteReport("lower-bounds", n, kind)
    if states == "all":
        items = list(table.distances.items())
    elif kind == "signed":
        items = [(signed_genome_from_perm(p).flat, d) for p, d in table.perm_distances.items()]
    else:
        items = [(genome_from_unsigned_perm(p).flat, d) for p, d in table.perm_distances.items()]
    worst_gap = 0
    equal = 0
    for flat, d in items:
        report.checked += 1
        if kind == "signed":
            lb = kernels.signed_lb(flat, n)
            if lb != d:
                report.violations.append((flat, lb, d))
        else:
            lb = kernels.unsigned_lb(flat, n)
            b = kernels.breakpoint_count(flat)
            if not b <= lb <= d:
                report.violations.append((flat, b, lb, d))
            if d - lb > worst_gap:
                worst_gap = d - lb
                report.worst = [(flat, lb, d)]
            elif d - lb == worst_gap and worst_gap:
                report.worst.append((flat, lb, d))
        equal += lb == d
    report.notes = {"tight": equal, "worst_gap": worst_gap}
    return report


def verify_long_strip_observation(n: int, cap: int | None = None) -> SuiteReport:
    full = oracle_table(n, "unsigned", ALL_PREFIX_DCJ, cap)
    restricted = oracle_table(n, "unsigned", NO_LONG_STRIP_CUT, cap)
    report = SuiteReport("long-strip", n, "unsigned")
    for p, d in full.perm_distances.items():
        report.checked += 1
        if restricted.perm_distances[p] != d:
            report.violations.append((p, d, restricted.perm_distances[p]))
    return report


def verify_approx_ratio(n: int, cap: int | None = None) -> SuiteReport:
    from .solvers import sort_unsigned_approx, verify_scenario

    table = oracle_table(n, "unsigned", ALL_PREFIX_DCJ, cap)
    report = SuiteReport("approx-ratio", n, "unsigned")
    worst = 1.0
    for p, d in table.perm_distances.items():
        g = genome_from_unsigned_perm(p)
        s = sort_unsigned_approx(g, keep_snapshots=False)
        b = kernels.breakpoint_count(g.flat)
        report.checked += 1
        ok = bool(verify_scenario(g, s)) and s.length <= math.ceil(1.5 * d) and s.length <= math.ceil(1.5 * b)
        if not ok:
            report.violations.append((p, s.length, d, b))
        if d:
            ratio = s.length / d
            if ratio > worst:
                worst = ratio
                report.worst = [(p, s.length, d)]
    report.notes = {"max_ratio": f"{worst:.3f}"}
    return report


def verify_fpt(n: int, cap: int | None = None, cut_end_strip=False) -> SuiteReport:
    """FPT length equals the oracle distance and every node has arity <= 4b."""
    from .solvers import FptStats, sort_unsigned_fpt, verify_scenario

    table = oracle_table(n, "unsigned", ALL_PREFIX_DCJ, cap)
    report = SuiteReport("fpt", n, "unsigned")
    arity_bad = 0
    nodes = 0
    max_ratio = 0.0
    for p, d in table.perm_distances.items():
        g = genome_from_unsigned_perm(p)
        stats = FptStats()
        s = sort_unsigned_fpt(g, stats=stats, keep_snapshots=False, cut_end_strip=cut_end_strip)
        report.checked += 1
        nodes += stats.nodes
        max_ratio = max(max_ratio, stats.worst_ratio)
        if s.length != d or not verify_scenario(g, s):
            report.violations.append(("length", p, s.length, d))
        if stats.arity_violations:
            arity_bad += 1
            flat, arity, b = stats.arity_violations[0]
            report.violations.append(("arity", p, arity, b))
    report.notes = {"nodes": nodes, "arity_over_4b": arity_bad, "max_arity_ratio": f"{max_ratio:.3f}"}
    return report


def verify_decompositions(n: int, limit: int = 100_000) -> SuiteReport:
    """Greedy decomposition against exhaustive enumeration, per permutation.

    A violation is a permutation where the greedy score is not the minimum, or
    where it does not both maximise ``c1`` and minimise ``c - c1``.  The
    ``lexicographic`` note counts permutations where it also fails to minimise
    ``c - c1`` among the decompositions of maximum ``c1``.
    """
    report = SuiteReport("decomposition", n, "unsigned")
    score_bad = c1_bad = nontrivial_bad = lex_bad = 0
    for p in itertools.permutations(range(1, n + 1)):
        bg = build_unsigned_bg(genome_from_unsigned_perm(p))
        best = optimal_decomposition(bg)
        every = enumerate_decompositions(bg, limit)
        report.checked += 1
        flags = (
            best.score != min(d.score for d in every),
            best.c1 != max(d.c1 for d in every),
            best.c - best.c1 != min(d.c - d.c1 for d in every),
        )
        score_bad += flags[0]
        c1_bad += flags[1]
        nontrivial_bad += flags[2]
        top = max(d.c1 for d in every)
        lex_bad += best.c1 != top or best.c - best.c1 != min(d.c - d.c1 for d in every if d.c1 == top)
        if any(flags):
            report.violations.append((p, flags))
    report.notes = {
        "score": score_bad,
        "max_c1": c1_bad,
        "min_nontrivial": nontrivial_bad,
        "lexicographic": lex_bad,
    }
    return report


def prefix_exchange_check(n: int) -> SuiteReport:
    table = oracle_table(n, "unsigned", PREFIX_EXCHANGE, cap=max(n, 1))
    report = SuiteReport("prefix-exchange", n, "unsigned")
    for p, d in table.perm_distances.items():
        report.checked += 1
        if prefix_exchange_distance(p) != d:
            report.violations.append((p, prefix_exchange_distance(p), d))
    return report
