"""Hypercube structure of p^n-periodic binary sequences.

Run the p-way divide-and-sum descent on a sequence.  At each depth the
current vector ``a`` splits into p parts ``A_0..A_{p-1}``; either all parts
are equal (keep ``A_0``) or they are XORed.  A sequence is a *hypercube* when
no XOR step cancels ones, except a single terminating step whose XOR is the
zero vector.  The descent then ends in a *vertex*: either the scalar 1 (an
element vertex) or the p-tuple of parts at the zero-sum step (a tuple vertex
of length q, where the parts have length p^q).

Each depth whose split branch was taken contributes an *edge* of p-adic
length p^(n-l); an m-hypercube has m edges and p^m translated copies of its
vertex.  The linear complexity follows from the structure alone:

    L = eps - 1 + p^n - (p-1) * sum(p^i for i in edges)

with eps = 1 for element vertices, 0 for tuple vertices of length 0 and
(1-p)*(p^0+...+p^(q-1)) for length q > 0.

``standard_decompose`` peels a maximal hypercube off an arbitrary nonzero
sequence: whenever an XOR step would cancel ones, the parts are rewritten
in place (``rebalance_blocks``) so that every surviving one has a unique
source, and the cleared ones are pushed back through the descent history to
the period.  The peeled part keeps the full linear complexity of the input;
the residue is strictly simpler, so recursion yields parts with strictly
decreasing complexities.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Sequence as Seq

from .errors import (
    EvenP,
    IsVertex,
    NoEligibleExponent,
    NotACube,
    NotAHypercube,
    OddP,
    ZeroSequence,
)
from .lincomp import _xwli_value
from .sequences import Modulus, PeriodicSequence, require_nonzero

__all__ = [
    "Decomposition",
    "HypercubeStructure",
    "VertexDescriptor",
    "VertexKind",
    "cube_lc",
    "extract_structure",
    "is_hypercube",
    "lc_from_structure",
    "next_lower_hypercube_lc",
    "rebalance_blocks",
    "standard_decompose",
]


class VertexKind(enum.Enum):
    ELEMENT = "element"
    TUPLE = "tuple"


@dataclass(frozen=True)
class VertexDescriptor:
    """Terminal state of the descent.

    Element vertices carry no payload.  Tuple vertices carry the p parts of
    the zero-sum step (each of length p^q); every row across the parts has
    even parity and at least one row is nonzero.
    """

    kind: VertexKind
    q: int | None = None
    blocks: tuple[tuple[int, ...], ...] | None = None

    def __post_init__(self) -> None:
        if self.kind is VertexKind.ELEMENT:
            if self.q is not None or self.blocks is not None:
                raise ValueError("element vertex carries no blocks")
            return
        if self.q is None or self.blocks is None:
            raise ValueError("tuple vertex needs q and blocks")
        p = len(self.blocks)
        if p < 2:
            raise ValueError("tuple vertex needs at least 2 blocks")
        size = p**self.q
        if any(len(b) != size for b in self.blocks):
            raise ValueError(f"blocks must all have length p^q = {size}")
        if all(all(x == 0 for x in b) for b in self.blocks):
            raise ValueError("tuple vertex must be nonzero")
        for u in range(size):
            if sum(b[u] for b in self.blocks) % 2:
                raise ValueError(f"row {u} has odd parity; blocks do not sum to zero")

    @property
    def l(self) -> int:
        """Nonzero count: 1 for element vertices, total ones for tuples."""
        if self.kind is VertexKind.ELEMENT:
            return 1
        assert self.blocks is not None
        return sum(sum(b) for b in self.blocks)

    @property
    def epsilon(self) -> int:
        if self.kind is VertexKind.ELEMENT:
            return 1
        assert self.q is not None and self.blocks is not None
        if self.q == 0:
            return 0
        p = len(self.blocks)
        return (1 - p) * sum(p**i for i in range(self.q))

    def __str__(self) -> str:
        if self.kind is VertexKind.ELEMENT:
            return "element"
        assert self.blocks is not None
        parts = ",".join("".join(map(str, b)) for b in self.blocks)
        return f"tuple(q={self.q}, [{parts}])"


@dataclass(frozen=True)
class HypercubeStructure:
    """Dimension, edge exponents, and vertex of a hypercube."""

    m: int
    edges: tuple[int, ...]
    vertex: VertexDescriptor

    def __post_init__(self) -> None:
        if self.m != len(self.edges):
            raise ValueError(f"m={self.m} but {len(self.edges)} edges")
        if any(a >= b for a, b in zip(self.edges, self.edges[1:])):
            raise ValueError(f"edges not strictly increasing: {self.edges}")

    @property
    def epsilon(self) -> int:
        return self.vertex.epsilon

    def __str__(self) -> str:
        edges = ",".join(map(str, self.edges)) if self.edges else "-"
        return f"m={self.m} edges={edges} vertex={self.vertex}"


@dataclass(frozen=True)
class Decomposition:
    """Hypercube parts of a sequence: XOR of parts reconstructs the input."""

    parts: tuple[PeriodicSequence, ...]
    structures: tuple[HypercubeStructure, ...]
    complexities: tuple[int, ...]


# -- descent machinery -------------------------------------------------------
#
# Level vectors are kept as mutable 0/1 lists; records[k] explains how
# vecs[k+1] was derived from vecs[k]:
#   ("split", plen)       all p parts equal, kept part 0
#   ("sum", plen, src)    XOR of parts; src maps each surviving one to its
#                         unique source part (rows hold at most one 1)
# Clearing a 1 at some level propagates down to the period: through a split
# record all p copies are cleared, through a sum record the unique source is.


@dataclass
class _Descent:
    ok: bool
    vecs: list[list[int]] = field(default_factory=list)
    records: list[tuple] = field(default_factory=list)
    edges: tuple[int, ...] = ()
    vertex: VertexDescriptor | None = None
    fail_depth: int | None = None

    @property
    def structure(self) -> HypercubeStructure:
        assert self.ok and self.vertex is not None
        return HypercubeStructure(len(self.edges), self.edges, self.vertex)

    def value(self) -> int:
        out = 0
        for i, b in enumerate(self.vecs[0]):
            out |= b << i
        return out


def _clear(vecs: list[list[int]], records: list[tuple], level: int, pos: int) -> None:
    stack = [(level, pos)]
    while stack:
        k, t = stack.pop()
        assert vecs[k][t] == 1
        vecs[k][t] = 0
        if k == 0:
            continue
        rec = records[k - 1]
        plen = rec[1]
        if rec[0] == "split":
            for i in range(len(vecs[k - 1]) // plen):
                stack.append((k - 1, t + i * plen))
        else:
            stack.append((k - 1, rec[2][t] * plen + t))


def _descend(value: int, p: int, n: int, rewrite: bool) -> _Descent:
    """Run the descent; with rewrite=True cancellations are repaired in place."""
    N = p**n
    vecs = [[(value >> i) & 1 for i in range(N)]]
    records: list[tuple] = []
    edges: list[int] = []
    depth = 0
    while True:
        cur = vecs[-1]
        ln = len(cur)
        if ln == 1:
            assert cur[0] == 1
            vertex = VertexDescriptor(VertexKind.ELEMENT)
            return _Descent(True, vecs, records, tuple(sorted(edges)), vertex)
        depth += 1
        plen = ln // p
        blocks = [cur[i * plen : (i + 1) * plen] for i in range(p)]
        if all(b == blocks[0] for b in blocks[1:]):
            edges.append(n - depth)
            records.append(("split", plen))
            vecs.append(list(blocks[0]))
            continue
        xor = [0] * plen
        src: dict[int, int] = {}
        pending: list[int] = []  # level positions to clear if we must rewrite
        lossy = False
        for t in range(plen):
            ones = [i for i in range(p) if blocks[i][t]]
            if not ones:
                continue
            if len(ones) % 2:
                xor[t] = 1
                src[t] = ones[0]
                extra = ones[1:]
            else:
                extra = ones
            if extra:
                lossy = True
                pending.extend(i * plen + t for i in extra)
        if not any(xor):
            # terminating zero-sum: the parts are the vertex
            vertex = VertexDescriptor(
                VertexKind.TUPLE, n - depth, tuple(tuple(b) for b in blocks)
            )
            return _Descent(True, vecs, records, tuple(sorted(edges)), vertex)
        if lossy:
            if not rewrite:
                return _Descent(False, vecs, records, fail_depth=depth)
            level = len(vecs) - 1
            for pos in pending:
                _clear(vecs, records, level, pos)
        records.append(("sum", plen, src))
        vecs.append(xor)


def _expand_flip(desc: _Descent, pos: int) -> list[int]:
    """Period positions that must toggle so the terminal-level bit at pos does.

    Nonzero bits trace back through their unique source; zero bits are routed
    through part 0 at sum records (one new 1 per sum level, p copies per
    split level).
    """
    out: list[int] = []
    stack = [(len(desc.vecs) - 1, pos)]
    while stack:
        k, t = stack.pop()
        if k == 0:
            out.append(t)
            continue
        rec = desc.records[k - 1]
        plen = rec[1]
        if rec[0] == "split":
            for i in range(len(desc.vecs[k - 1]) // plen):
                stack.append((k - 1, t + i * plen))
        elif desc.vecs[k][t]:
            stack.append((k - 1, rec[2][t] * plen + t))
        else:
            stack.append((k - 1, t))
    return out


def _require_odd_nonzero(s: PeriodicSequence) -> None:
    if s.modulus.p == 2:
        raise EvenP("hypercube structure is defined for odd p; use cube_lc for p = 2")
    require_nonzero(s)


def is_hypercube(s: PeriodicSequence) -> bool:
    """True iff no XOR step of the descent cancels ones, except the zero-sum
    step that terminates in a tuple vertex."""
    _require_odd_nonzero(s)
    return _descend(s.value, s.modulus.p, s.modulus.n, rewrite=False).ok


def extract_structure(s: PeriodicSequence) -> HypercubeStructure:
    """Structure (m, edges, vertex) of a hypercube; NotAHypercube otherwise."""
    _require_odd_nonzero(s)
    desc = _descend(s.value, s.modulus.p, s.modulus.n, rewrite=False)
    if not desc.ok:
        raise NotAHypercube(
            f"cancellation at depth {desc.fail_depth} of the descent"
        )
    return desc.structure


def lc_from_structure(h: HypercubeStructure, modulus: Modulus) -> int:
    """Closed-form linear complexity of a hypercube with structure h."""
    p, n = modulus.p, modulus.n
    return h.epsilon - 1 + p**n - (p - 1) * sum(p**i for i in h.edges)


def _eligible_exponents(h: HypercubeStructure, n: int) -> list[int]:
    v = h.vertex
    if v.kind is VertexKind.ELEMENT:
        lo = 0
    elif v.q == 0:
        lo = 1
    else:
        assert v.q is not None
        lo = v.q + 1
    return [i for i in range(lo, n) if i not in h.edges]

def next_lower_hypercube_lc(h: HypercubeStructure, modulus: Modulus) -> int:
    """Largest LC below lc_from_structure(h) attainable by a hypercube with
    the same vertex and an edge set extending h's: add the smallest eligible
    exponent.  Hypercubes with unrelated edge sets can land in between."""
    candidates = _eligible_exponents(h, modulus.n)
    if not candidates:
        raise NoEligibleExponent(f"no exponent available beyond edges {h.edges}")
    p = modulus.p
    i0 = candidates[0]
    return h.epsilon - 1 + p**modulus.n - (p - 1) * (p**i0 + sum(p**i for i in h.edges))


def rebalance_blocks(
    blocks: Seq[Seq[int]],
) -> tuple[tuple[tuple[int, ...], ...], dict[int, int]]:
    """Rewrite p blocks so their supports are disjoint, preserving the XOR.

    Rows with odd parity keep their first 1 and lose the rest; even rows are
    cleared entirely.  Returns the rewritten blocks and the map from each
    surviving row to the block that kept its 1.  Raises IsVertex when the
    XOR is already zero (nothing survives a rewrite) and ValueError when the
    blocks are all equal (the descent would not XOR them).
    """
    rows = len(blocks[0])
    if any(len(b) != rows for b in blocks):
        raise ValueError("blocks must have equal length")
    if all(tuple(b) == tuple(blocks[0]) for b in blocks[1:]):
        raise ValueError("blocks are all equal; rewrite applies to the XOR branch")
    out = [[0] * rows for _ in blocks]
    sources: dict[int, int] = {}
    survivors = 0
    for t in range(rows):
        ones = [i for i in range(len(blocks)) if blocks[i][t]]
        if len(ones) % 2:
            out[ones[0]][t] = 1
            sources[t] = ones[0]
            survivors += 1
    if survivors == 0:
        raise IsVertex("blocks already sum to the zero vector")
    result = tuple(tuple(b) for b in out)
    assert sum(sum(b) for b in result) == survivors
    return result, sources


def standard_decompose(s: PeriodicSequence) -> Decomposition:
    """Peel hypercubes with strictly decreasing linear complexities.

    parts[0] keeps the full complexity of s; XOR of all parts equals s.
    """
    _require_odd_nonzero(s)
    p, n = s.modulus.p, s.modulus.n
    parts: list[PeriodicSequence] = []
    structures: list[HypercubeStructure] = []
    complexities: list[int] = []
    residue = s.value
    for _ in range(s.modulus.period + 1):
        if residue == 0:
            break
        desc = _descend(residue, p, n, rewrite=True)
        assert desc.ok
        h_value = desc.value()
        structure = desc.structure
        parts.append(PeriodicSequence(s.modulus, h_value))
        structures.append(structure)
        complexities.append(lc_from_structure(structure, s.modulus))
        residue ^= h_value
    else:  # pragma: no cover - descent always strictly reduces the residue
        raise AssertionError("decomposition failed to terminate")
    assert all(a > b for a, b in zip(complexities, complexities[1:]))
    acc = 0
    for part in parts:
        acc ^= part.value
    assert acc == s.value
    assert complexities[0] == _xwli_value(s.value, p, n)
    return Decomposition(tuple(parts), tuple(structures), tuple(complexities))


# -- p = 2 cubes --------------------------------------------------------------

def cube_lc(s: PeriodicSequence) -> tuple[int, tuple[int, ...], int]:
    """(m, edges, L) of a 2^n-periodic sequence whose support is an m-cube.

    The Games-Chan descent must keep the weight through every XOR step and
    end at the scalar 1; edges are the exponents of the halving depths whose
    halves were equal.  L = 2^n - sum(2^i for i in edges).
    """
    if s.modulus.p != 2:
        raise OddP("cube_lc requires p = 2")
    if s.value == 0:
        raise NotACube("zero sequence has no cube support")
    n = s.modulus.n
    a = s.value
    length = 1 << n
    edges = []
    depth = 0
    while length > 1:
        depth += 1
        half = length >> 1
        mask = (1 << half) - 1
        lo, hi = a & mask, a >> half
        if lo == hi:
            edges.append(n - depth)
            a = lo
        else:
            if (lo ^ hi).bit_count() != lo.bit_count() + hi.bit_count():
                raise NotACube(f"cancellation at halving depth {depth}")
            a = lo ^ hi
        length = half
    assert a == 1
    edges_t = tuple(sorted(edges))
    return len(edges_t), edges_t, (1 << n) - sum(1 << i for i in edges_t)
