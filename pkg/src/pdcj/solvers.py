"""Signed and unsigned sorting by prefix DCJs, plus a replay checker for scenarios."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from ._core import kernels
from .breakpoint_graph import lb_signed_prefix_dcj, lb_unsigned_prefix_dcj
from .genome import (
    STRAIGHT,
    Genome,
    InvalidMoveError,
    PrefixDcj,
    Scenario,
    SignedGenome,
    UnsignedGenome,
    apply_prefix_dcj,
    breakpoint_count,
    identity_unsigned,
    is_identity,
)


class BudgetExceeded(RuntimeError):
    """The decision variant found no scenario within the budget."""

    def __init__(self, budget):
        super().__init__(f"no sorting scenario of length <= {budget}")
        self.budget = budget


# ----------------------------------------------------------------------------
# signed


def _signed_step(g: SignedGenome) -> PrefixDcj:
    partner = {}
    for u, v in g.edges:
        partner[u] = v
        partner[v] = u
    v = partner[0]
    if v != 1:
        # grey neighbour x of v; joining {v, x} closes a 1-cycle
        x = v ^ 1
        return PrefixDcj((0, v), (partner[x], x), STRAIGHT)
    # {0, 1} is a 1-cycle: merge it with the first non-trivial black edge on the path
    a = 1
    while True:
        gene = a + 1 if a % 2 else a - 1
        b = partner[gene]
        if b != gene ^ 1:
            return PrefixDcj((0, 1), (gene, b), STRAIGHT)
        a = b


def sort_signed_exact(g: SignedGenome, keep_snapshots=True) -> Scenario:
    """Optimal scenario; each move lowers the signed lower bound by one."""
    moves = []
    state = g
    while not is_identity(state):
        m = _signed_step(state)
        moves.append(m)
        state = apply_prefix_dcj(state, m)
    return Scenario.build(g, moves, keep_snapshots)


# ----------------------------------------------------------------------------
# unsigned approximation


def _neighbours(g: UnsignedGenome):
    nbrs = [[] for _ in range(g.n + 2)]
    for u, v in g.edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    return nbrs


def _breakpoint_neighbour(g: UnsignedGenome, nbrs, x):
    """Smallest y with {x, y} a breakpoint."""
    best = None
    for y in nbrs[x]:
        e = (x, y) if x <= y else (y, x)
        if e[0] == 0:
            continue
        if abs(x - y) != 1 or g.edges.count(e) == 2:
            if best is None or y < best:
                best = y
    return best


def _approx_step(g: UnsignedGenome) -> tuple[PrefixDcj, str]:
    nbrs = _neighbours(g)
    v = g.edges[0][1]
    if v != 1:
        for x in (v - 1, v + 1):
            if 1 <= x <= g.n + 1 and x not in nbrs[v]:
                y = _breakpoint_neighbour(g, nbrs, x)
                return PrefixDcj((0, v), (y, x), STRAIGHT), "1"
        raise AssertionError("no free neighbour value for the element at 0")
    if 2 not in nbrs[1]:
        y = _breakpoint_neighbour(g, nbrs, 2)
        return PrefixDcj((0, 1), (y, 2), STRAIGHT), "2"
    # 0-1-2-...-k ascends until the first breakpoint {k, l}; cut it off as a cycle
    prev, k = 1, 2
    while True:
        nxt = nbrs[k][0] if nbrs[k][1] == prev else nbrs[k][1]
        if abs(nxt - k) != 1:
            break
        prev, k = k, nxt
    return PrefixDcj((0, 1), (nxt, k), STRAIGHT), "2'"


def sort_unsigned_approx(g: UnsignedGenome, keep_snapshots=True) -> Scenario:
    """3/2-approximation driven by the breakpoint count.

    Each move removes a breakpoint, except the cycle extraction used when
    ``{0,1}`` and ``{1,2}`` are both present; the two moves after it each
    remove one, so three moves always buy at least two breakpoints.
    """
    moves = []
    state = g
    while not is_identity(state):
        m, _ = _approx_step(state)
        moves.append(m)
        state = apply_prefix_dcj(state, m)
    return Scenario.build(g, moves, keep_snapshots)


def approx_trace(g: UnsignedGenome) -> list[tuple[str, int]]:
    """Case label and breakpoint count after each move of the approximation."""
    out = []
    state = g
    while not is_identity(state):
        m, case = _approx_step(state)
        state = apply_prefix_dcj(state, m)
        out.append((case, breakpoint_count(state)))
    return out


# ----------------------------------------------------------------------------
# unsigned FPT


def fpt_bound(flat) -> int:
    """Admissible distance estimate for the search.

    A prefix DCJ removes at most one breakpoint, and none at all while
    ``{0,1}`` and ``{1,2}`` are both present (the new edge at 1 is a breakpoint).
    """
    b = kernels.breakpoint_count(flat)
    if b and flat[1] == 1 and flat[2] == 1 and flat[3] == 2:
        return b + 1
    return b


@dataclass
class FptStats:
    nodes: int = 0
    max_arity: int = 0
    worst_ratio: float = 0.0
    arity_violations: list = field(default_factory=list)
    targets: list = field(default_factory=list)

    def record(self, flat, arity, b):
        self.nodes += 1
        self.max_arity = max(self.max_arity, arity)
        if b:
            self.worst_ratio = max(self.worst_ratio, arity / (4 * b))
        if arity > 4 * b:
            self.arity_violations.append((flat, arity, b))


def sort_unsigned_fpt(
    g: UnsignedGenome,
    budget: int | None = None,
    stats: FptStats | None = None,
    keep_snapshots=True,
    cut_end_strip=False,
) -> Scenario:
    """Optimal scenario by iterative deepening over a bounded search tree.

    The second cut ranges over breakpoints and the adjacency of each 2-strip;
    long strips are never cut.  The adjacency ``{n, n+1}`` is not cut either
    unless ``cut_end_strip`` is set: the strip ending at ``n+1`` has no
    breakpoint on its right, and skipping it keeps the arity within ``4b``.
    Branches are pruned with :func:`fpt_bound`.  With ``budget`` the search
    stops past that length and raises :class:`BudgetExceeded`.
    """
    n = g.n
    stats = stats if stats is not None else FptStats()
    start = g.flat
    goal = identity_unsigned(n).flat
    b0 = kernels.breakpoint_count(start)
    target = fpt_bound(start)
    ceiling = math.ceil(3 * b0 / 2)
    end_edge = {n, n + 1}
    path = []

    def dfs(flat, depth, seen):
        if flat == goal:
            return True
        children = kernels.unsigned_children(flat, n, True)
        if not cut_end_strip:
            children = [ch for ch in children if {ch[1], ch[2]} != end_edge]
        stats.record(flat, len(children), kernels.breakpoint_count(flat))
        ranked = []
        for idx, (child, c, d) in enumerate(children):
            h = fpt_bound(child)
            if depth + 1 + h <= target:
                ranked.append((h, idx, child, c, d))
        ranked.sort()
        for _, _, child, c, d in ranked:
            if seen.get(child, target + 1) <= depth + 1:
                continue
            seen[child] = depth + 1
            path.append((flat, c, d))
            if dfs(child, depth + 1, seen):
                return True
            path.pop()
        return False

    while True:
        if budget is not None and target > budget:
            raise BudgetExceeded(budget)
        if target > ceiling:
            raise AssertionError("search exceeded the 3b/2 ceiling")
        stats.targets.append(target)
        if dfs(start, 0, {start: 0}):
            break
        target += 1

    moves = [PrefixDcj((0, flat[1]), (c, d), STRAIGHT) for flat, c, d in path]
    return Scenario.build(g, moves, keep_snapshots)


# ----------------------------------------------------------------------------
# verification


@dataclass(frozen=True)
class Verification:
    ok: bool
    step: int | None = None
    reason: str = ""

    def __bool__(self):
        return self.ok


def verify_scenario(g: Genome, moves) -> Verification:
    """Replay ``moves`` (a Scenario or a move list) and check it sorts ``g``.

    Moves may be :class:`PrefixDcj` or raw ``((a, b), (c, d))`` cut pairs read
    as straight joins.  On failure ``step`` is the index of the first bad move,
    or the scenario length when the final state is not the identity.
    """
    if isinstance(moves, Scenario):
        moves = moves.moves
    state = g
    for i, m in enumerate(moves):
        try:
            if not isinstance(m, PrefixDcj):
                m = PrefixDcj(tuple(m[0]), tuple(m[1]), STRAIGHT)
            state = apply_prefix_dcj(state, m)
        except InvalidMoveError as exc:
            return Verification(False, i, str(exc))
    if not is_identity(state):
        return Verification(False, len(moves), "final genome is not the identity")
    return Verification(True)


def lower_bound(g: Genome) -> int:
    if isinstance(g, SignedGenome):
        return lb_signed_prefix_dcj(g)
    return lb_unsigned_prefix_dcj(g)
