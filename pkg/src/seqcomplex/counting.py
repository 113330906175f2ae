"""How many sequences share a complexity, and how many hypercubes a shape.

For odd p the number of p^n-periodic binary sequences with complexity
L = eps + (p-1) * sum(p^(v-1), v in V) factors over the exponent set:

    N(L) = prod(2^((p-1) * p^(v-1)) - 1, v in V)

Hypercube counts depend only on the edge exponents and the vertex class.
With edges i_1 < ... < i_m the *capacity*

    E = p^m * n - sum((p^t - p^(t-1)) * i_t) - (p + p^2 + ... + p^m)

gives p^E hypercubes with an element vertex, and C(p, l) * p^((E-1)*l) with
a length-0 tuple vertex of weight l (l even, edges all >= 1).  For p = 2 the
same capacity at p = 2 counts the cubes: 2^E.

The enumerators build every member of a class constructively, bottom-up from
the vertex: an edge level repeats the current vector p times, any other level
splits each 1 into one of the p blocks.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from math import comb

from .errors import BudgetExceeded, EvenP, InvalidEdges, InvalidL, OddP
from .lincomp import lc_form_decompose
from .sequences import Modulus, PeriodicSequence

__all__ = [
    "CountResult",
    "class_lc",
    "count_cubes",
    "count_hypercubes",
    "count_sequences_with_lc",
    "enumerate_cubes",
    "enumerate_hypercubes",
]

ENUM_CAP = 10**6


@dataclass(frozen=True)
class CountResult:
    """A count together with the factored expression it came from."""

    value: int
    expression: str

    def __str__(self) -> str:
        return f"{self.value} = {self.expression}"


def _check_edges(modulus: Modulus, edges, lo: int = 0) -> tuple[int, ...]:
    out = tuple(sorted(edges))
    if any(a == b for a, b in zip(out, out[1:])):
        raise InvalidEdges(f"duplicate edge exponents in {tuple(edges)}")
    if out and not (lo <= out[0] and out[-1] < modulus.n):
        raise InvalidEdges(
            f"edge exponents {out} outside [{lo}, {modulus.n - 1}]"
        )
    return out


def _capacity(p: int, n: int, edges: tuple[int, ...]) -> int:
    m = len(edges)
    E = p**m * n - sum(p**t for t in range(1, m + 1))
    for t, i in enumerate(edges, start=1):
        E -= (p**t - p ** (t - 1)) * i
    return E


def _check_tuple_weight(p: int, l: int) -> None:
    if not (1 < l < p and l % 2 == 0):
        raise InvalidL(f"length-0 vertex weight must be even in (1, {p}); got {l}")


def count_sequences_with_lc(modulus: Modulus, L: int) -> CountResult:
    """Number of sequences of the given period with complexity exactly L.

    Odd p only.  L must be attainable (canonically representable); the counts
    over all attainable L sum to 2^(p^n).
    """
    if modulus.p == 2:
        raise EvenP("per-complexity counting is an odd-p result")
    form = lc_form_decompose(L, modulus)
    p = modulus.p
    value = 1
    factors = []
    for v in sorted(form.exponents):
        e = (p - 1) * p ** (v - 1)
        value *= (1 << e) - 1
        factors.append(f"(2^{e} - 1)")
    return CountResult(value, " * ".join(factors) if factors else "1")


def count_hypercubes(modulus: Modulus, edges, l: int | None = None) -> CountResult:
    """Number of hypercubes with the given edge exponents and vertex class.

    l=None counts the element-vertex class; an even l in (1, p) counts the
    length-0 tuple class of vertex weight l (its edges must all be >= 1).
    """
    if modulus.p == 2:
        raise EvenP("use count_cubes for p = 2")
    p, n = modulus.p, modulus.n
    if l is None:
        es = _check_edges(modulus, edges, lo=0)
        E = _capacity(p, n, es)
        return CountResult(p**E, f"{p}^{E}")
    _check_tuple_weight(p, l)
    es = _check_edges(modulus, edges, lo=1)
    E = _capacity(p, n, es)
    assert E >= 1
    return CountResult(comb(p, l) * p ** ((E - 1) * l), f"C({p},{l}) * {p}^{(E - 1) * l}")


def count_cubes(modulus: Modulus, edges) -> CountResult:
    """Number of 2^n-periodic cubes with the given edge exponents."""
    if modulus.p != 2:
        raise OddP("count_cubes requires p = 2")
    es = _check_edges(modulus, edges, lo=0)
    E = _capacity(2, modulus.n, es)
    return CountResult(1 << E, f"2^{E}")


def class_lc(modulus: Modulus, edges, l: int | None = None) -> int:
    """Linear complexity shared by every member of a counted class."""
    p, n = modulus.p, modulus.n
    if l is None:
        es = _check_edges(modulus, edges, lo=0)
        eps = 1
    else:
        if p == 2:
            raise EvenP("tuple-vertex classes exist only for odd p")
        _check_tuple_weight(p, l)
        es = _check_edges(modulus, edges, lo=1)
        eps = 0
    return eps - 1 + p**n - (p - 1) * sum(p**i for i in es)


def _grow(values: list[int], p: int, start: int, n: int, edges: tuple[int, ...]) -> list[int]:
    """Lift vectors of length p^start to length p^n, one exponent at a time."""
    for e in range(start, n):
        size = p**e
        if e in edges:
            values = [
                sum(v << (i * size) for i in range(p)) for v in values
            ]
            continue
        grown: list[int] = []
        for v in values:
            positions = [u for u in range(size) if (v >> u) & 1]
            for choice in product(range(p), repeat=len(positions)):
                nv = 0
                for u, i in zip(positions, choice):
                    nv |= 1 << (i * size + u)
                grown.append(nv)
        values = grown
    return values


def enumerate_hypercubes(
    modulus: Modulus, edges, l: int | None = None, cap: int = ENUM_CAP
) -> tuple[PeriodicSequence, ...]:
    """Every hypercube of a counted class, built from the vertex up."""
    expected = count_hypercubes(modulus, edges, l).value
    if expected > cap:
        raise BudgetExceeded(f"class holds {expected} hypercubes, cap is {cap}")
    p, n = modulus.p, modulus.n
    if l is None:
        es = _check_edges(modulus, edges, lo=0)
        base = [1]
        start = 0
    else:
        es = _check_edges(modulus, edges, lo=1)
        base = [sum(1 << i for i in combo) for combo in combinations(range(p), l)]
        start = 1
    values = _grow(base, p, start, n, es)
    assert len(values) == expected
    return tuple(PeriodicSequence(modulus, v) for v in values)


def enumerate_cubes(
    modulus: Modulus, edges, cap: int = ENUM_CAP
) -> tuple[PeriodicSequence, ...]:
    """Every cube with the given edge exponents (p = 2)."""
    expected = count_cubes(modulus, edges).value
    if expected > cap:
        raise BudgetExceeded(f"class holds {expected} cubes, cap is {cap}")
    es = _check_edges(modulus, edges, lo=0)
    values = _grow([1], 2, 0, modulus.n, es)
    assert len(values) == expected
    return tuple(PeriodicSequence(modulus, v) for v in values)
