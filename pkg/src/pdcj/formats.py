"""Text formats for genomes and scenarios.

Genome files::

    # comment
    kind=unsigned-perm n=5
    perm: 3 2 5 4 1

``kind=signed-perm`` allows negative entries; ``kind=unsigned-genome`` is
followed by one ``edge: u v`` line per edge copy.  Scenario files start with
``scenario kind=<signed|unsigned> n=<n> length=<L>`` followed by one
``dcj cut (a,b) (c,d) join (a,c) (b,d) kind=<move kind>`` line per move.
"""

from __future__ import annotations

import re

from .genome import (
    MOVE_KINDS,
    STRAIGHT,
    Genome,
    InvalidGenomeError,
    InvalidMoveError,
    PrefixDcj,
    Scenario,
    SignedGenome,
    UnsignedGenome,
    genome_from_unsigned_perm,
    genome_to_permutation,
    signed_genome_from_perm,
    signed_genome_to_permutation,
)

GENOME_KINDS = ("unsigned-genome", "unsigned-perm", "signed-perm")


class ParseError(ValueError):
    def __init__(self, message, line=None):
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)
        self.line = line


def _content_lines(text):
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line


def _header(line, no, expected_first=None):
    words = line.split()
    if expected_first is not None:
        if not words or words[0] != expected_first:
            raise ParseError(f"expected header starting with {expected_first!r}", no)
        words = words[1:]
    fields = {}
    for w in words:
        key, sep, value = w.partition("=")
        if not sep or not value:
            raise ParseError(f"malformed header field {w!r}", no)
        fields[key] = value
    return fields


def _int(token, no, what):
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"{what} {token!r} is not an integer", no) from None


def parse_genome(text: str) -> tuple[str, Genome]:
    """Return ``(kind, genome)`` where kind is one of :data:`GENOME_KINDS`."""
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty input", 1)
    no, first = lines[0]
    fields = _header(first, no)
    kind = fields.get("kind")
    if kind not in GENOME_KINDS:
        raise ParseError(f"kind must be one of {', '.join(GENOME_KINDS)}", no)
    if "n" not in fields:
        raise ParseError("header lacks n=", no)
    n = _int(fields["n"], no, "n")
    if n < 1:
        raise ParseError("n must be positive", no)

    body = lines[1:]
    if kind == "unsigned-genome":
        edges = []
        for no, line in body:
            tag, _, rest = line.partition(":")
            parts = rest.split()
            if tag.strip() != "edge" or len(parts) != 2:
                raise ParseError("expected 'edge: u v'", no)
            u, v = (_int(t, no, "vertex") for t in parts)
            if not (0 <= u <= n + 1 and 0 <= v <= n + 1):
                raise ParseError(f"vertex out of range 0..{n + 1}", no)
            edges.append((u, v))
        if len(edges) != n + 1:
            raise ParseError(f"expected {n + 1} edges, found {len(edges)}", body[-1][0] if body else no)
        try:
            return kind, UnsignedGenome(n, tuple(edges))
        except InvalidGenomeError as exc:
            raise ParseError(str(exc), no) from None

    if len(body) != 1:
        raise ParseError("expected exactly one 'perm:' line", body[1][0] if body else no)
    no, line = body[0]
    tag, _, rest = line.partition(":")
    if tag.strip() != "perm":
        raise ParseError("expected 'perm: a1 ... an'", no)
    values = [_int(t, no, "entry") for t in rest.split()]
    if len(values) != n:
        raise ParseError(f"expected {n} entries, found {len(values)}", no)
    try:
        if kind == "signed-perm":
            return kind, signed_genome_from_perm(values)
        if any(v < 0 for v in values):
            raise ParseError("unsigned permutation with a negative entry", no)
        return kind, genome_from_unsigned_perm(values)
    except InvalidGenomeError as exc:
        raise ParseError(str(exc), no) from None


def read_genome(path) -> tuple[str, Genome]:
    with open(path, encoding="utf-8") as fh:
        return parse_genome(fh.read())


def format_genome(g: Genome, as_edges=False) -> str:
    """Signed genomes must be linear; unsigned ones fall back to edges when not."""
    if isinstance(g, SignedGenome):
        values = signed_genome_to_permutation(g).values
        return f"kind=signed-perm n={g.n}\nperm: {' '.join(map(str, values))}\n"
    if not as_edges:
        try:
            values = genome_to_permutation(g).values
        except InvalidGenomeError:
            pass
        else:
            return f"kind=unsigned-perm n={g.n}\nperm: {' '.join(map(str, values))}\n"
    lines = [f"kind=unsigned-genome n={g.n}"]
    lines += [f"edge: {u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


# ----------------------------------------------------------------------------
# scenarios

_MOVE_RE = re.compile(
    r"^dcj\s+cut\s+\((-?\d+),\s*(-?\d+)\)\s+\((-?\d+),\s*(-?\d+)\)"
    r"\s+join\s+\((-?\d+),\s*(-?\d+)\)\s+\((-?\d+),\s*(-?\d+)\)"
    r"(?:\s+kind=([a-z-]+))?$"
)


def format_move(m: PrefixDcj) -> str:
    m = m.normalized()
    a, b = m.cut_a
    c, d = m.cut_b
    kind = f" kind={m.kind}" if m.kind else ""
    return f"dcj cut ({a},{b}) ({c},{d}) join ({a},{c}) ({b},{d}){kind}"


def format_scenario(s: Scenario) -> str:
    kind = "signed" if isinstance(s.start, SignedGenome) else "unsigned"
    lines = [f"scenario kind={kind} n={s.start.n} length={s.length}"]
    lines += [format_move(m) for m in s.moves]
    return "\n".join(lines) + "\n"


def parse_scenario(text: str) -> tuple[str, int, list[PrefixDcj]]:
    """Return ``(kind, n, moves)``; joins must pair ``a`` with ``c``."""
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty input", 1)
    no, first = lines[0]
    fields = _header(first, no, "scenario")
    kind = fields.get("kind")
    if kind not in ("signed", "unsigned"):
        raise ParseError("kind must be signed or unsigned", no)
    n = _int(fields.get("n", ""), no, "n")
    length = _int(fields.get("length", ""), no, "length")
    moves = []
    for no, line in lines[1:]:
        mt = _MOVE_RE.match(line)
        if not mt:
            raise ParseError("malformed move line", no)
        a, b, c, d, j1, j2, j3, j4 = (int(t) for t in mt.groups()[:8])
        if (j1, j2, j3, j4) != (a, c, b, d):
            raise ParseError("join must be (a,c) (b,d) for cut (a,b) (c,d)", no)
        label = mt.group(9)
        if label is not None and label not in MOVE_KINDS:
            raise ParseError(f"unknown move kind {label!r}", no)
        try:
            moves.append(PrefixDcj((a, b), (c, d), STRAIGHT, kind=label))
        except InvalidMoveError as exc:
            raise ParseError(str(exc), no) from None
    if len(moves) != length:
        raise ParseError(f"header says length={length} but {len(moves)} moves follow", no)
    return kind, n, moves
