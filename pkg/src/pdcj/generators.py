"""Instance generators: random permutations and the two explicit families.

``gen_random`` uses :class:`random.Random` seeded with ``seed``; an unsigned
instance is ``rng.shuffle`` of ``[1..n]`` and a signed one additionally draws
one ``rng.getrandbits(1)`` per position (1 means negative).  Fixtures are
therefore reproducible on any CPython.
"""

from __future__ import annotations

import random

from .genome import (
    UnsignedGenome,
    genome_from_unsigned_perm,
    genome_to_permutation,
    signed_genome_from_perm,
)


def gap_family_perm(p: int) -> tuple[int, ...]:
    if p < 2:
        raise ValueError("p must be at least 2")
    out = []
    for i in range(1, p + 1):
        out += [6 * i - 5, 6 * i - 3, 6 * i - 1, 6 * i - 4, 6 * i - 2, 6 * i]
    return tuple(out)


def gen_gap_family(p: int) -> UnsignedGenome:
    """Linear genome whose lower bound exceeds its breakpoint count by ``p``."""
    return genome_from_unsigned_perm(gap_family_perm(p))


def tight_family_edges(p: int) -> list[tuple[int, int]]:
    if p < 2:
        raise ValueError("p must be at least 2")
    n = 4 * p
    edges = [(0, 1)]
    for i in range(p):
        edges.append((4 * i + 1, 4 * i + 2))
        edges.append((4 * i + 2, n - 4 * i))
        edges.append((4 * i + 3, n - 4 * i + 1))
        edges.append((4 * i + 3, 4 * i + 4))
    return edges


def gen_tight_family(p: int) -> UnsignedGenome:
    """Linear genome with ``n = 4p``, ``b = 2p`` on which the approximation is optimal."""
    g = UnsignedGenome(4 * p, tuple(tight_family_edges(p)))
    genome_to_permutation(g)  # raises unless the edge sets form a single path
    return g


def tight_family_perm(p: int) -> tuple[int, ...]:
    return genome_to_permutation(gen_tight_family(p)).values


def random_perm(n: int, seed, signed=False) -> tuple[int, ...]:
    if n < 1:
        raise ValueError("n must be positive")
    rng = random.Random(seed)
    values = list(range(1, n + 1))
    rng.shuffle(values)
    if signed:
        values = [-v if rng.getrandbits(1) else v for v in values]
    return tuple(values)


def gen_random(n: int, kind: str = "unsigned", seed=0):
    if kind == "unsigned":
        return genome_from_unsigned_perm(random_perm(n, seed))
    if kind == "signed":
        return signed_genome_from_perm(random_perm(n, seed, signed=True))
    raise ValueError(f"unknown kind {kind!r}")

