"""Cross-check suites: every closed form against an independent computation.

Each suite sweeps one or more universes of sequences, exhaustively when the
period is small enough and by seeded sampling otherwise, and counts one check
per swept object so a report reads "511/511 agree".  Counterexamples are
collected verbatim (sequence literal plus both values) instead of raising, so
one mismatch does not hide the rest.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Callable, Iterable

from .counting import (
    count_cubes,
    count_hypercubes,
    count_sequences_with_lc,
    enumerate_cubes,
    enumerate_hypercubes,
)
from .errors import NotACube
from .hypercube import (
    VertexKind,
    cube_lc,
    extract_structure,
    is_hypercube,
    standard_decompose,
)
from .kerror import (
    DEFAULT_CAP,
    celcs,
    construct_stable,
    first_critical_bruteforce,
    first_critical_m,
    k_error_lc_bruteforce,
    kurosawa_m,
    meidl_upper_bound,
)
from .lincomp import berlekamp_massey_lc, games_chan_lc, lc, xwli_lc
from .sequences import Modulus, PeriodicSequence

__all__ = ["SuiteReport", "SUITES", "run_suites"]

MAX_DETAILS = 20
EXHAUSTIVE_LIMIT = 1 << 13
SAMPLE_SIZE = 1000


@dataclass
class SuiteReport:
    name: str
    checks: int = 0
    failures: int = 0
    details: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failures == 0

    @property
    def agreements(self) -> int:
        return self.checks - self.failures

    def record(self, passed: bool, detail: str) -> None:
        self.checks += 1
        if not passed:
            self.failures += 1
            if len(self.details) < MAX_DETAILS:
                self.details.append(detail)

    def __str__(self) -> str:
        return f"{self.name}: {self.agreements}/{self.checks} agree"


def _universe(
    modulus: Modulus, rng: random.Random, limit: int = EXHAUSTIVE_LIMIT
) -> Iterable[PeriodicSequence]:
    """All nonzero sequences when that fits, a seeded sample otherwise."""
    top = 1 << modulus.period
    if top <= limit:
        values: Iterable[int] = range(1, top)
    else:
        values = (rng.randrange(1, top) for _ in range(SAMPLE_SIZE))
    return (PeriodicSequence(modulus, v) for v in values)


def _moduli(override: Modulus | None, default: list[Modulus]) -> list[Modulus]:
    return [override] if override is not None else default


def _suite_lc_oracle(modulus: Modulus | None, rng: random.Random, cap: int) -> SuiteReport:
    """Divide-and-sum (or Games-Chan) complexity against Berlekamp-Massey."""
    rep = SuiteReport("lc-oracle")
    defaults = [
        Modulus(3, 1), Modulus(3, 2), Modulus(5, 1), Modulus(3, 3), Modulus(5, 2),
        Modulus(2, 1), Modulus(2, 2), Modulus(2, 3), Modulus(2, 4), Modulus(2, 5),
    ]
    for mod in _moduli(modulus, defaults):
        zero = PeriodicSequence.zeros(mod)
        rep.record(berlekamp_massey_lc(zero) == 0, f"{mod} zero sequence: bm != 0")
        for s in _universe(mod, rng, limit=1 << 16):
            if mod.p == 2:
                a = games_chan_lc(s)
            else:
                form, trace = xwli_lc(s)
                a = form.value
                assert trace.total == a
            b = berlekamp_massey_lc(s)
            rep.record(a == b, f"{mod} s={s.to01()}: closed form {a} != bm {b}")
    return rep


def _suite_mcrit(modulus: Modulus | None, rng: random.Random, cap: int) -> SuiteReport:
    """Closed-form critical points against exhaustive error enumeration.

    One check per sequence.  The closed-form first critical point is compared
    with the brute-force one for every sequence; a mismatch is a genuine
    counterexample to the leading-part reduction and is reported, not hidden.
    The witness complexity and the whole critical-point list are additionally
    required to match on hypercubes, the only class where the closed form
    claims them exactly.
    """
    rep = SuiteReport("mcrit-exhaustive")
    defaults = [Modulus(3, 2), Modulus(5, 1), Modulus(3, 1)]
    for mod in _moduli(modulus, defaults):
        for s in _universe(mod, rng):
            brute = first_critical_bruteforce(s, cap=cap)
            problems = []
            if mod.p == 2:
                got = kurosawa_m(s)
                if got != brute.m_s:
                    problems.append(f"m {got} != {brute.m_s}")
            else:
                form = first_critical_m(s)
                if form.m_s != brute.m_s:
                    problems.append(f"m {form.m_s} != {brute.m_s}")
                if is_hypercube(s):
                    if form.L_after != brute.L_after:
                        problems.append(f"L_after {form.L_after} != {brute.L_after}")
                    a = celcs(s, mode="formula")
                    b = celcs(s, mode="brute", cap=cap)
                    if a != b:
                        problems.append(f"celcs {a} != {b}")
            rep.record(not problems, f"{mod} s={s.to01()}: {'; '.join(problems)}")
    return rep


def _tuple_weights(p: int) -> list[int]:
    return [l for l in range(2, p) if l % 2 == 0]


def _suite_counting(modulus: Modulus | None, rng: random.Random, cap: int) -> SuiteReport:
    """Counting formulas against exhaustive tallies and constructive enumeration."""
    rep = SuiteReport("counting")
    defaults = [Modulus(3, 1), Modulus(3, 2), Modulus(5, 1), Modulus(2, 2), Modulus(2, 3)]
    for mod in _moduli(modulus, defaults):
        if mod.p == 2:
            _count_cubes_checks(rep, mod)
        else:
            _count_odd_checks(rep, mod)
    return rep


def _count_odd_checks(rep: SuiteReport, mod: Modulus) -> None:
    p, n, N = mod.p, mod.n, mod.period
    exhaustive = (1 << N) <= EXHAUSTIVE_LIMIT

    tally: dict[int, int] = {0: 1}
    if exhaustive:
        for v in range(1, 1 << N):
            L = lc(PeriodicSequence(mod, v))
            tally[L] = tally.get(L, 0) + 1
    total = 0
    for eps, bits in product((0, 1), product((0, 1), repeat=n)):
        V = [v for v in range(1, n + 1) if bits[v - 1]]
        L = eps + (p - 1) * sum(p ** (v - 1) for v in V)
        c = count_sequences_with_lc(mod, L).value
        total += c
        if exhaustive:
            rep.record(
                tally.get(L, 0) == c,
                f"{mod} L={L}: tally {tally.get(L, 0)} formula {c}",
            )
    rep.record(total == 1 << N, f"{mod}: complexity counts sum to {total} != 2^{N}")

    structure_tally: dict[tuple, int] = {}
    if exhaustive:
        for v in range(1, 1 << N):
            s = PeriodicSequence(mod, v)
            if not is_hypercube(s):
                continue
            st = extract_structure(s)
            if st.vertex.kind is VertexKind.ELEMENT:
                key = (st.edges, None)
            elif st.vertex.q == 0:
                key = (st.edges, st.vertex.l)
            else:
                continue  # longer vertices have no closed-form count here
            structure_tally[key] = structure_tally.get(key, 0) + 1
    for r in range(n + 1):
        for edges in combinations(range(n), r):
            classes: list[int | None] = [None]
            if all(i >= 1 for i in edges):
                classes += _tuple_weights(p)
            for l in classes:
                count = count_hypercubes(mod, edges, l).value
                if count > 10**5:
                    continue
                members = enumerate_hypercubes(mod, edges, l)
                good = len(members) == count
                if exhaustive:
                    good = good and structure_tally.get((edges, l), 0) == count
                want_kind = VertexKind.ELEMENT if l is None else VertexKind.TUPLE
                for s in members:
                    st = extract_structure(s)
                    good = good and st.edges == edges and st.vertex.kind is want_kind
                rep.record(
                    good,
                    f"{mod} edges={edges} l={l}: formula {count}, enumerated "
                    f"{len(members)}, scanned {structure_tally.get((edges, l), 'n/a')}",
                )


def _count_cubes_checks(rep: SuiteReport, mod: Modulus) -> None:
    n, N = mod.n, mod.period
    exhaustive = (1 << N) <= EXHAUSTIVE_LIMIT
    cube_tally: dict[tuple[int, ...], int] = {}
    if exhaustive:
        for v in range(1, 1 << N):
            try:
                _, edges, _ = cube_lc(PeriodicSequence(mod, v))
            except NotACube:
                continue
            cube_tally[edges] = cube_tally.get(edges, 0) + 1
    for r in range(n + 1):
        for edges in combinations(range(n), r):
            count = count_cubes(mod, edges).value
            if count > 10**5:
                continue
            members = enumerate_cubes(mod, edges)
            good = len(members) == count
            if exhaustive:
                good = good and cube_tally.get(edges, 0) == count
            rep.record(
                good,
                f"{mod} edges={edges}: formula {count}, enumerated {len(members)}, "
                f"scanned {cube_tally.get(edges, 'n/a')}",
            )


def _suite_decomposition(modulus: Modulus | None, rng: random.Random, cap: int) -> SuiteReport:
    """Decomposition invariants: hypercube parts, XOR reconstruction, descent."""
    rep = SuiteReport("decomposition")
    defaults = [Modulus(3, 2), Modulus(3, 3), Modulus(5, 2), Modulus(11, 1)]
    for mod in _moduli(modulus, defaults):
        for s in _universe(mod, rng):
            dec = standard_decompose(s)
            problems = []
            acc = 0
            for part in dec.parts:
                if not is_hypercube(part):
                    problems.append(f"part {part.to01()} is not a hypercube")
                acc ^= part.value
            if acc != s.value:
                problems.append("parts do not XOR back to s")
            if any(a <= b for a, b in zip(dec.complexities, dec.complexities[1:])):
                problems.append(f"complexities not strictly decreasing: {dec.complexities}")
            if dec.complexities[0] != lc(s):
                problems.append(f"leading part L {dec.complexities[0]} != L(s) {lc(s)}")
            rep.record(not problems, f"{mod} s={s.to01()}: {'; '.join(problems)}")
    return rep


def _suite_bounds(modulus: Modulus | None, rng: random.Random, cap: int) -> SuiteReport:
    """Exact p=2 first drop, and the odd-p upper bound, against brute force."""
    rep = SuiteReport("bounds")
    defaults = [
        Modulus(2, 1), Modulus(2, 2), Modulus(2, 3), Modulus(2, 4),
        Modulus(3, 2), Modulus(5, 1),
    ]
    for mod in _moduli(modulus, defaults):
        universe = _universe(mod, rng)
        if mod.p == 2 and mod.period > 8:
            universe = list(_universe(mod, rng))[:60]  # worst cases sweep 2^N patterns
        for s in universe:
            m = first_critical_bruteforce(s, cap=cap).m_s
            if mod.p == 2:
                got = kurosawa_m(s)
                rep.record(got == m, f"{mod} s={s.to01()}: formula {got} brute {m}")
            else:
                bound = meidl_upper_bound(s)
                rep.record(m <= bound, f"{mod} s={s.to01()}: m={m} exceeds bound {bound}")
    return rep


def _suite_stability(modulus: Modulus | None, rng: random.Random, cap: int) -> SuiteReport:
    """Constructed stable sequences keep their complexity through k errors."""
    rep = SuiteReport("stability")
    defaults = [Modulus(3, 2), Modulus(2, 3), Modulus(5, 1), Modulus(2, 4)]
    for mod in _moduli(modulus, defaults):
        p = mod.p
        for k in range(min(mod.period, 8)):
            s = construct_stable(mod, k)
            l = 0
            while p**l <= k:
                l += 1
            L = lc(s)
            problems = []
            if L != mod.period - (p**l - 1):
                problems.append(f"constructed complexity {L}")
            stable_through = min(k, p**l - 1)
            if any(
                k_error_lc_bruteforce(s, e, cap=cap) != L
                for e in range(stable_through + 1)
            ):
                problems.append(f"complexity moves within {stable_through} errors")
            if p**l <= mod.period and k_error_lc_bruteforce(s, p**l, cap=cap) >= L:
                problems.append(f"no drop at {p ** l} errors")
            rep.record(not problems, f"{mod} k={k}: {'; '.join(problems)}")
    return rep


SUITES: dict[str, Callable[[Modulus | None, random.Random, int], SuiteReport]] = {
    "lc-oracle": _suite_lc_oracle,
    "mcrit-exhaustive": _suite_mcrit,
    "counting": _suite_counting,
    "decomposition": _suite_decomposition,
    "bounds": _suite_bounds,
    "stability": _suite_stability,
}


def run_suites(
    names: list[str] | None = None,
    modulus: Modulus | None = None,
    seed: int = 0,
    cap: int = DEFAULT_CAP,
) -> list[SuiteReport]:
    """Run the named suites (all by default), each with its own seeded stream.

    With a modulus the sweeps cover that universe alone; otherwise each suite
    uses its default mix of exhaustive small periods and sampled larger ones.
    """
    if names is None:
        names = list(SUITES)
    unknown = [x for x in names if x not in SUITES]
    if unknown:
        raise KeyError(f"unknown suites: {', '.join(unknown)}")
    return [SUITES[name](modulus, random.Random(seed), cap) for name in names]
