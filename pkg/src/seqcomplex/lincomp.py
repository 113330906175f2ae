"""Exact linear complexity of p^n-periodic binary sequences.

Three independent engines:

* ``xwli_lc`` - the Xiao-Wei-Lam-Imamura p-way divide-and-sum descent for odd
  p where 2 is a primitive root mod p^2.  O(p N) bit operations.
* ``games_chan_lc`` - the Games-Chan halving descent for p = 2.
* ``berlekamp_massey_lc`` - classic LFSR synthesis over GF(2), fed two
  periods.  Slowest, used as the oracle for the other two.

Every attainable complexity has a unique canonical form
``L = eps + (p-1) * sum(p^(v-1) for v in V)`` with ``eps`` in {0, 1} and
``V`` a subset of {1..n}; ``LCForm`` captures it.  (For p = 2 the form is not
unique; the greedy largest-exponent-first choice is used.)
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EvenP, NotRepresentable, OddP
from .sequences import Modulus, PeriodicSequence

__all__ = [
    "LCForm",
    "XwliStep",
    "XwliTrace",
    "berlekamp_massey_lc",
    "games_chan_lc",
    "lc",
    "lc_form_decompose",
    "xwli_lc",
]


@dataclass(frozen=True)
class LCForm:
    """Canonical complexity form: value = epsilon + (p-1) * sum p^(v-1), v in V."""

    p: int
    epsilon: int
    exponents: frozenset[int]

    @property
    def value(self) -> int:
        return self.epsilon + (self.p - 1) * sum(self.p ** (v - 1) for v in self.exponents)

    def __str__(self) -> str:
        vs = ",".join(str(v) for v in sorted(self.exponents))
        return f"{self.value} = {self.epsilon} + ({self.p}-1)*[{vs}]"


def lc_form_decompose(L: int, modulus: Modulus) -> LCForm:
    """Decompose an attainable complexity value into its canonical form.

    Greedy from the largest exponent down; raises NotRepresentable when no
    (epsilon, V) reproduces L for this modulus.
    """
    p, n = modulus.p, modulus.n
    if not 0 <= L <= modulus.period:
        raise NotRepresentable(f"L={L} outside [0, {modulus.period}]")
    rem = L
    exps = set()
    for v in range(n, 0, -1):
        term = (p - 1) * p ** (v - 1)
        if rem >= term:
            rem -= term
            exps.add(v)
    if rem not in (0, 1):
        raise NotRepresentable(f"L={L} is not attainable for modulus {modulus}")
    return LCForm(p, rem, frozenset(exps))


@dataclass(frozen=True)
class XwliStep:
    """One descent step: 'split' kept A_0 (all parts equal), 'sum' XORed them."""

    branch: str
    pre_weight: int
    post_weight: int
    increment: int


@dataclass(frozen=True)
class XwliTrace:
    steps: tuple[XwliStep, ...]
    final_one: bool

    @property
    def total(self) -> int:
        return sum(st.increment for st in self.steps) + int(self.final_one)


def _xwli_value(value: int, p: int, n: int) -> int:
    """Descent without bookkeeping; the hot path for sweeps."""
    L = 0
    length = p**n
    a = value
    for l in range(1, n + 1):
        plen = length // p
        mask = (1 << plen) - 1
        first = a & mask
        rest = a >> plen
        equal = True
        x = first
        for _ in range(p - 1):
            part = rest & mask
            rest >>= plen
            if part != first:
                equal = False
            x ^= part
        if equal:
            a = first
        else:
            a = x
            L += (p - 1) * p ** (n - l)
        length = plen
    return L + (1 if a else 0)


def xwli_lc(s: PeriodicSequence) -> tuple[LCForm, XwliTrace]:
    """Divide-and-sum linear complexity for odd p, with a full step trace.

    Each 'sum' step at depth l contributes (p-1) * p^(n-l); a nonzero final
    scalar contributes 1.  The trace increments always sum to the result.
    """
    p, n = s.modulus.p, s.modulus.n
    if p == 2:
        raise EvenP("xwli_lc requires odd p; use games_chan_lc for p = 2")
    steps: list[XwliStep] = []
    exps = set()
    L = 0
    length = s.modulus.period
    a = s.value
    for l in range(1, n + 1):
        plen = length // p
        mask = (1 << plen) - 1
        parts = [(a >> (i * plen)) & mask for i in range(p)]
        pre_w = a.bit_count()
        if all(part == parts[0] for part in parts[1:]):
            a = parts[0]
            steps.append(XwliStep("split", pre_w, a.bit_count(), 0))
        else:
            x = 0
            for part in parts:
                x ^= part
            inc = (p - 1) * p ** (n - l)
            L += inc
            exps.add(n - l + 1)
            a = x
            steps.append(XwliStep("sum", pre_w, a.bit_count(), inc))
        length = plen
    final_one = a == 1
    L += int(final_one)
    trace = XwliTrace(tuple(steps), final_one)
    form = LCForm(p, int(final_one), frozenset(exps))
    assert trace.total == L and form.value == L
    return form, trace


def _games_chan_value(value: int, n: int) -> int:
    L = 0
    length = 1 << n
    a = value
    while length > 1:
        half = length >> 1
        mask = (1 << half) - 1
        lo = a & mask
        hi = a >> half
        if lo == hi:
            a = lo
        else:
            L += half
            a = lo ^ hi
        length = half
    return L + (a & 1)


def games_chan_lc(s: PeriodicSequence) -> int:
    """Games-Chan linear complexity for 2^n-periodic sequences."""
    if s.modulus.p != 2:
        raise OddP("games_chan_lc requires p = 2")
    return _games_chan_value(s.value, s.modulus.n)


def _bm_value(stream: int, length: int) -> int:
    # Bit-packed Berlekamp-Massey: sb/sc hold S(x)*B(x) and S(x)*C(x)
    # implicitly; only the connection polynomial degree is tracked.
    sb = sc = stream
    deg = 0
    m = 0
    for i in range(length):
        disc = (sc >> m) & 1
        m += 1
        if disc:
            sc >>= m
            m = 0
            if 2 * deg <= i:
                sb, sc = sc, sb
                deg = i + 1 - deg
            sc ^= sb
    return deg


def berlekamp_massey_lc(s: PeriodicSequence) -> int:
    """LFSR synthesis over GF(2) on two periods of s."""
    N = s.modulus.period
    return _bm_value(s.value | (s.value << N), 2 * N)


def _lc_value(value: int, p: int, n: int) -> int:
    return _games_chan_value(value, n) if p == 2 else _xwli_value(value, p, n)


def lc(s: PeriodicSequence) -> int:
    """Linear complexity via the engine matching the modulus parity."""
    return _lc_value(s.value, s.modulus.p, s.modulus.n)
