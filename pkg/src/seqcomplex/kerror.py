"""k-error linear complexity: critical points, bounds, stable sequences.

L_k(s) is the smallest linear complexity reachable by flipping at most k
period positions.  The spectrum k -> L_k is non-increasing, starts at L(s)
and hits 0 exactly at k = weight(s).  A *critical point* is a k whose L_k is
strictly below every earlier value; ``celcs`` lists them all.

The closed form targets the leading hypercube h_1 of the decomposition of s:

* element vertex:              p^m                 (erase the hypercube)
* tuple vertex, length 0:      min(l, p-l) * p^m
                               (erase it, or fill its vertex rows to all-ones)
* tuple vertex, length q > 0:  min(l, j) * p^m, j = vertex_min_change
                               (erase it, or equalize the vertex blocks)

Each branch has a concrete witness, so the value is always an upper bound on
m(s), and exhaustive sweeps confirm it is exact whenever s is a single
hypercube.  For sums of two or more hypercubes it can overshoot: flips spread
across parts may align the top-level sums of all parts at once, which is
sometimes cheaper than any change confined to h_1 (first case at period 9).
``verify.run_suites`` compares the closed form with brute force over whole
universes and reports every such counterexample.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import (
    BudgetExceeded,
    EvenP,
    FormulaInapplicable,
    KOutOfRange,
    NotTupleVertex,
    OddP,
    ZeroLengthVertex,
)
from .hypercube import (
    VertexDescriptor,
    VertexKind,
    _descend,
    _expand_flip,
    is_hypercube,
    standard_decompose,
)
from .lincomp import _games_chan_value, _lc_value, _xwli_value, lc_form_decompose
from .sequences import Modulus, PeriodicSequence, require_nonzero

__all__ = [
    "DEFAULT_CAP",
    "CelcsPoint",
    "CriticalReport",
    "celcs",
    "construct_stable",
    "first_critical_bruteforce",
    "first_critical_m",
    "k_error_lc_bruteforce",
    "kurosawa_m",
    "meidl_upper_bound",
    "second_critical_m1",
    "vertex_min_change",
]

DEFAULT_CAP = 10**8


@dataclass(frozen=True)
class CelcsPoint:
    k: int
    L: int


@dataclass(frozen=True)
class CriticalReport:
    """First (and when determined, second) critical error count.

    Brute reports are exact by construction.  Formula reports describe the
    minimal change of the leading hypercube: m_s and L_after are the weight
    and resulting complexity of its witness, exact when s is a hypercube and
    an upper bound otherwise.  vertex_j is the minimal equalizing change of
    the vertex (tuple vertices of length > 0).
    """

    m_s: int
    L_after: int
    m1_s: int | None
    method: str
    vertex_j: int | None = None

    def __post_init__(self) -> None:
        assert self.m_s >= 1
        assert self.m1_s is None or self.m1_s > self.m_s


# -- brute force ---------------------------------------------------------------

def _budget(N: int, lo: int, hi: int) -> int:
    return sum(comb(N, i) for i in range(lo, hi + 1))


def _check_budget(N: int, lo: int, hi: int, cap: int) -> None:
    b = _budget(N, lo, hi)
    if b > cap:
        raise BudgetExceeded(f"{b} error patterns exceed cap {cap}")


def _weight_class_min(value: int, p: int, n: int, N: int, k: int) -> int:
    """Minimum complexity over all error patterns of weight exactly k."""
    best = None
    bits = [1 << i for i in range(N)]
    for combo in combinations(bits, k):
        e = 0
        for b in combo:
            e |= b
        L = _lc_value(value ^ e, p, n)
        if best is None or L < best:
            best = L
            if best == 0:
                break
    assert best is not None
    return best


def k_error_lc_bruteforce(s: PeriodicSequence, k: int, cap: int = DEFAULT_CAP) -> int:
    """L_k(s) by complete enumeration of error patterns of weight <= k."""
    if k < 0:
        raise KOutOfRange(f"k={k} is negative")
    p, n, N = s.modulus.p, s.modulus.n, s.modulus.period
    k = min(k, N)
    _check_budget(N, 0, k, cap)
    best = _lc_value(s.value, p, n)
    for i in range(1, k + 1):
        if best == 0:
            break
        best = min(best, _weight_class_min(s.value, p, n, N, i))
    return best


def _first_drop(value: int, p: int, n: int, below: int, start_k: int, cap: int) -> int | None:
    """Smallest k >= start_k with L_k < below; early exit inside each weight class."""
    N = p**n
    bits = [1 << i for i in range(N)]
    spent = _budget(N, 0, start_k - 1)
    for k in range(start_k, N + 1):
        spent += comb(N, k)
        if spent > cap:
            raise BudgetExceeded(f"{spent} error patterns exceed cap {cap}")
        for combo in combinations(bits, k):
            e = 0
            for b in combo:
                e |= b
            if _lc_value(value ^ e, p, n) < below:
                return k
    return None


def first_critical_bruteforce(s: PeriodicSequence, cap: int = DEFAULT_CAP) -> CriticalReport:
    """m(s), exact L_{m(s)}, and the second critical point, all by enumeration."""
    require_nonzero(s)
    p, n, N = s.modulus.p, s.modulus.n, s.modulus.period
    L0 = _lc_value(s.value, p, n)
    m_s = _first_drop(s.value, p, n, below=L0, start_k=1, cap=cap)
    assert m_s is not None  # k = weight(s) always reaches 0 < L0
    L_after = min(L0, _weight_class_min(s.value, p, n, N, m_s))
    m1 = None
    if L_after > 0:
        m1 = _first_drop(s.value, p, n, below=L_after, start_k=m_s + 1, cap=cap)
    return CriticalReport(m_s, L_after, m1, "brute")


# -- closed forms ---------------------------------------------------------------

def vertex_min_change(vertex: VertexDescriptor) -> int:
    """Minimal flips turning a tuple vertex (q > 0) into p equal nonzero blocks.

    The row with the most ones is forced to all-ones; every other row goes to
    its majority side.
    """
    j, _ = _min_change_target(vertex)
    return j


def _min_change_target(vertex: VertexDescriptor) -> tuple[int, tuple[int, ...]]:
    if vertex.kind is not VertexKind.TUPLE:
        raise NotTupleVertex("element vertices have no block tuple to equalize")
    if vertex.q == 0:
        raise ZeroLengthVertex("length-0 vertices are handled by the fill/erase rule")
    blocks = vertex.blocks
    assert blocks is not None
    p = len(blocks)
    rows = len(blocks[0])
    counts = [sum(b[u] for b in blocks) for u in range(rows)]
    u0 = max(range(rows), key=lambda u: counts[u])
    j = 0
    target = [0] * rows
    for u in range(rows):
        c = counts[u]
        if u == u0 or c > p - c:
            target[u] = 1
            j += p - c
        else:
            j += c
    return j, tuple(target)


def _witness_mask(s_value: int, h_value: int, p: int, n: int) -> tuple[int, int, int | None]:
    """(m_s, witness mask, vertex_j) for the leading hypercube h of s."""
    desc = _descend(h_value, p, n, rewrite=False)
    assert desc.ok
    st = desc.structure
    vertex = st.vertex
    pm = p**st.m

    def expand_mask(flips: list[int]) -> int:
        mask = 0
        for pos in flips:
            for u in _expand_flip(desc, pos):
                mask |= 1 << u
        return mask

    if vertex.kind is VertexKind.ELEMENT:
        return pm, h_value, None

    blocks = vertex.blocks
    assert blocks is not None and vertex.q is not None
    l = vertex.l
    size = p**vertex.q
    if vertex.q == 0:
        if 2 * l < p:
            return l * pm, h_value, None
        fill = [i for i in range(p) if blocks[i][0] == 0]
        mask = expand_mask(fill)
        assert mask.bit_count() == (p - l) * pm
        return (p - l) * pm, mask, None

    j, target = _min_change_target(vertex)
    if l < j:
        return l * pm, h_value, j
    flips = [i * size + u for i in range(p) for u in range(size) if blocks[i][u] != target[u]]
    mask = expand_mask(flips)
    assert mask.bit_count() == j * pm
    if j < l:
        return j * pm, mask, j
    # tie: both erasing and equalizing cost l * p^m; report the better witness
    if _lc_value(s_value ^ h_value, p, n) <= _lc_value(s_value ^ mask, p, n):
        return l * pm, h_value, j
    return l * pm, mask, j


def first_critical_m(s: PeriodicSequence) -> CriticalReport:
    """Closed-form first critical point from the leading hypercube of s.

    Exact when s is a single hypercube; an upper bound on m(s) in general
    (see the module docstring).  L_after is the complexity reached by the
    witness.  The second critical point is filled only when s is itself a
    hypercube.
    """
    if s.modulus.p == 2:
        raise EvenP("use kurosawa_m for p = 2")
    require_nonzero(s)
    p, n = s.modulus.p, s.modulus.n
    dec = standard_decompose(s)
    h1 = dec.parts[0]
    m_s, mask, j = _witness_mask(s.value, h1.value, p, n)
    L_after = _lc_value(s.value ^ mask, p, n)
    m1 = None
    if len(dec.parts) == 1:
        m1 = _formula_m1(dec.structures[0].vertex, p, dec.structures[0].m, j)
    return CriticalReport(m_s, L_after, m1, "formula", vertex_j=j)


def _formula_m1(vertex: VertexDescriptor, p: int, m: int, j: int | None) -> int | None:
    if vertex.kind is VertexKind.ELEMENT:
        return None
    l = vertex.l
    if vertex.q == 0:
        return l * p**m if 2 * l > p else None
    assert j is not None
    return l * p**m if j < l else None


def second_critical_m1(s: PeriodicSequence, cap: int = DEFAULT_CAP) -> int | None:
    """Second critical error count, or None when L_{m(s)} is already 0.

    Closed form for hypercubes with odd p; brute force otherwise.
    """
    require_nonzero(s)
    p, n = s.modulus.p, s.modulus.n
    if p != 2 and is_hypercube(s):
        desc = _descend(s.value, p, n, rewrite=False)
        st = desc.structure
        j = None
        if st.vertex.kind is VertexKind.TUPLE and st.vertex.q and st.vertex.q > 0:
            j = vertex_min_change(st.vertex)
        return _formula_m1(st.vertex, p, st.m, j)
    return first_critical_bruteforce(s, cap=cap).m1_s


# -- critical-point spectrum -----------------------------------------------------

def celcs(
    s: PeriodicSequence, mode: str = "brute", cap: int = DEFAULT_CAP
) -> tuple[CelcsPoint, ...]:
    """All critical points (k, L_k) of the k-error spectrum, ascending in k.

    mode="brute" enumerates every error pattern up to weight(s).  mode=
    "formula" covers exactly the points the closed forms determine and is
    only defined when s is a single hypercube.
    """
    if s.is_zero:
        return (CelcsPoint(0, 0),)
    p, n, N = s.modulus.p, s.modulus.n, s.modulus.period
    L0 = _lc_value(s.value, p, n)
    if mode == "formula":
        if p == 2 or not is_hypercube(s):
            raise FormulaInapplicable("formula mode needs an odd-p hypercube")
        rep = first_critical_m(s)
        points = [CelcsPoint(0, L0), CelcsPoint(rep.m_s, rep.L_after)]
        if rep.L_after != 0:
            assert rep.m1_s is not None
            points.append(CelcsPoint(rep.m1_s, 0))
    elif mode == "brute":
        W = s.weight
        _check_budget(N, 0, W, cap)
        points = [CelcsPoint(0, L0)]
        prev = L0
        for k in range(1, W + 1):
            Lk = min(prev, _weight_class_min(s.value, p, n, N, k))
            if Lk < prev:
                points.append(CelcsPoint(k, Lk))
                prev = Lk
            if prev == 0:
                break
    else:
        raise ValueError(f"unknown mode {mode!r}")
    assert points[0] == CelcsPoint(0, L0)
    assert all(a.k < b.k and a.L > b.L for a, b in zip(points, points[1:]))
    assert points[-1] == CelcsPoint(s.weight, 0)
    return tuple(points)


# -- closed-form bounds ------------------------------------------------------------

def kurosawa_m(s: PeriodicSequence) -> int:
    """Exact first critical error count for p = 2: 2^(wt_2(2^n - L))."""
    if s.modulus.p != 2:
        raise OddP("kurosawa_m requires p = 2")
    require_nonzero(s)
    L = _games_chan_value(s.value, s.modulus.n)
    return 1 << ((s.modulus.period - L).bit_count())


def meidl_upper_bound(s: PeriodicSequence) -> int:
    """Upper bound on m(s) for odd p: ((p-1)/2)^delta * p^(n - |V|).

    delta is 0 when the canonical form of L(s) has epsilon = 1, else 1.  The
    exponent counts the exponents missing from the canonical form (the base-p
    digit weight of p^n - L once the epsilon offset is removed).
    """
    if s.modulus.p == 2:
        raise EvenP("meidl_upper_bound is an odd-p bound; kurosawa_m is exact for p = 2")
    require_nonzero(s)
    p, n = s.modulus.p, s.modulus.n
    L = _xwli_value(s.value, p, n)
    form = lc_form_decompose(L, s.modulus)
    delta = (form.epsilon + 1) % 2
    return ((p - 1) // 2) ** delta * p ** (n - len(form.exponents))


# -- stable sequences ---------------------------------------------------------------

def construct_stable(modulus: Modulus, k: int) -> PeriodicSequence:
    """Sequence maximizing L_k: p^l ones then zeros, with p^(l-1) <= k < p^l.

    Its complexity p^n - (p^l - 1) survives any k flips (it is k-stable:
    L_e = L for all e <= p^l - 1 and the first drop is at p^l).  k = 0 yields
    the single-one sequence of full complexity p^n.
    """
    if not 0 <= k < modulus.period:
        raise KOutOfRange(f"k={k} outside [0, {modulus.period})")
    p = modulus.p
    l = 0
    while p**l <= k:
        l += 1
    ones = p**l
    return PeriodicSequence(modulus, (1 << ones) - 1)
