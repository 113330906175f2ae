"""Reference implementations used only by the tests.

Deliberately naive and independent of the package internals: linear
complexity via GF(2) polynomial gcd, and exhaustive searches phrased
directly from the definitions.
"""

from __future__ import annotations

import random
from itertools import combinations, product

from seqcomplex import PeriodicSequence, VertexDescriptor, VertexKind


def poly_deg(a: int) -> int:
    return a.bit_length() - 1


def poly_mod(a: int, b: int) -> int:
    db = poly_deg(b)
    while poly_deg(a) >= db:
        a ^= b << (poly_deg(a) - db)
    return a


def poly_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, poly_mod(a, b)
    return a


def gcd_lc(s: PeriodicSequence) -> int:
    """L(s) = N - deg gcd(x^N + 1, S(x)) over GF(2), S(x) = sum s_i x^i."""
    if s.value == 0:
        return 0
    N = s.modulus.period
    return N - poly_deg(poly_gcd((1 << N) | 1, s.value))


def gcd_k_error_lc(s: PeriodicSequence, k: int) -> int:
    """Definitional L_k: minimum gcd_lc over all patterns of weight <= k."""
    N = s.modulus.period
    best = gcd_lc(s)
    for w in range(1, min(k, N) + 1):
        for combo in combinations(range(N), w):
            e = 0
            for i in combo:
                e |= 1 << i
            best = min(best, gcd_lc(PeriodicSequence(s.modulus, s.value ^ e)))
    return best


def seq(mod, text: str) -> PeriodicSequence:
    return PeriodicSequence.from_text(text, mod)


def random_tuple_vertex(rng: random.Random, p: int, q: int) -> VertexDescriptor:
    """A random valid tuple vertex: every row has even parity, some row is set."""
    rows = p**q
    while True:
        counts = [rng.choice(range(0, p + 1, 2)) for _ in range(rows)]
        if any(counts):
            break
    blocks = [[0] * rows for _ in range(p)]
    for u, c in enumerate(counts):
        for i in rng.sample(range(p), c):
            blocks[i][u] = 1
    return VertexDescriptor(VertexKind.TUPLE, q, tuple(tuple(b) for b in blocks))


def exhaustive_min_change(v: VertexDescriptor) -> int:
    """Fewest bit flips turning every block into one shared nonzero target."""
    rows = len(v.blocks[0])
    best = None
    for target in product((0, 1), repeat=rows):
        if not any(target):
            continue
        cost = sum(sum(b[u] != target[u] for u in range(rows)) for b in v.blocks)
        if best is None or cost < best:
            best = cost
    return best
