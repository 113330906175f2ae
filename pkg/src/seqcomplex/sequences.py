"""Core types for p^n-periodic binary sequences.

A sequence is represented by one period, packed into a Python int: bit i of
``value`` is s_i, so the leftmost character of the text form "110..." is bit 0.
Periods up to 2^20 are supported. p is either 2 or an odd prime for which 2 is
a primitive root modulo p^2; that condition makes x^(p^n) - 1 factor over
GF(2) in the shape the structure theory relies on.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import (
    EqualPositions,
    InvalidCharacter,
    LengthMismatch,
    ModulusMismatch,
    NotPrime,
    NotPrimitiveRoot,
    PeriodTooLarge,
    ZeroSequence,
)

PERIOD_CAP = 1 << 20


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def _prime_factors(x: int) -> set[int]:
    out = set()
    d = 2
    while d * d <= x:
        while x % d == 0:
            out.add(d)
            x //= d
        d += 1
    if x > 1:
        out.add(x)
    return out


def _two_is_primitive_root_mod_p2(p: int) -> bool:
    # ord(2 mod p^2) = p(p-1) iff 2^(p(p-1)/r) != 1 mod p^2 for every prime r | p(p-1)
    order = p * (p - 1)
    mod = p * p
    return all(pow(2, order // r, mod) != 1 for r in _prime_factors(order))


@dataclass(frozen=True)
class Modulus:
    """Validated (p, n) pair; the period is p^n."""

    p: int
    n: int

    def __post_init__(self) -> None:
        p, n = self.p, self.n
        if not isinstance(p, int) or not isinstance(n, int) or n < 1:
            raise NotPrime(f"need integer p >= 2 and n >= 1, got p={p!r} n={n!r}")
        if not _is_prime(p):
            raise NotPrime(f"p={p} is not prime")
        if p != 2 and not _two_is_primitive_root_mod_p2(p):
            raise NotPrimitiveRoot(f"2 is not a primitive root mod {p}^2")
        if p**n > PERIOD_CAP:
            raise PeriodTooLarge(f"p^n = {p}^{n} exceeds {PERIOD_CAP}")

    @property
    def period(self) -> int:
        return self.p**self.n

    def __str__(self) -> str:
        return f"{self.p}^{self.n}"


def validate_modulus(p: int, n: int) -> Modulus:
    """Return a validated Modulus or raise NotPrime/NotPrimitiveRoot/PeriodTooLarge."""
    return Modulus(p, n)


@dataclass(frozen=True)
class PeriodicSequence:
    """One period of a binary sequence, packed LSB-first into ``value``."""

    modulus: Modulus
    value: int

    def __post_init__(self) -> None:
        if not 0 <= self.value < (1 << self.modulus.period):
            raise LengthMismatch(
                f"packed value needs {self.modulus.period} bits, got {self.value.bit_length()}"
            )

    # -- constructors --------------------------------------------------------

    @classmethod
    def from_text(cls, text: str, modulus: Modulus) -> "PeriodicSequence":
        """Parse a 0/1 literal; whitespace is ignored."""
        value = 0
        idx = 0
        for pos, ch in enumerate(text):
            if ch.isspace():
                continue
            if ch == "1":
                value |= 1 << idx
            elif ch != "0":
                raise InvalidCharacter(f"invalid character {ch!r} at offset {pos}")
            idx += 1
        if idx != modulus.period:
            raise LengthMismatch(f"expected {modulus.period} digits, got {idx}")
        return cls(modulus, value)

    @classmethod
    def from_bits(cls, bits: Iterable[int], modulus: Modulus) -> "PeriodicSequence":
        value = 0
        idx = 0
        for b in bits:
            if b not in (0, 1):
                raise InvalidCharacter(f"bit at index {idx} is {b!r}, not 0/1")
            value |= b << idx
            idx += 1
        if idx != modulus.period:
            raise LengthMismatch(f"expected {modulus.period} bits, got {idx}")
        return cls(modulus, value)

    @classmethod
    def zeros(cls, modulus: Modulus) -> "PeriodicSequence":
        return cls(modulus, 0)

    # -- views ----------------------------------------------------------------

    def bit(self, i: int) -> int:
        return (self.value >> (i % self.modulus.period)) & 1

    @property
    def bits(self) -> tuple[int, ...]:
        return tuple((self.value >> i) & 1 for i in range(self.modulus.period))

    def to01(self) -> str:
        return "".join("1" if (self.value >> i) & 1 else "0" for i in range(self.modulus.period))

    @property
    def weight(self) -> int:
        return self.value.bit_count()

    @property
    def is_zero(self) -> bool:
        return self.value == 0

    def __len__(self) -> int:
        return self.modulus.period

    def __iter__(self) -> Iterator[int]:
        return iter(self.bits)

    def __xor__(self, other: "PeriodicSequence") -> "PeriodicSequence":
        if self.modulus != other.modulus:
            raise ModulusMismatch(f"{self.modulus} vs {other.modulus}")
        return PeriodicSequence(self.modulus, self.value ^ other.value)

    def __repr__(self) -> str:
        text = self.to01()
        if len(text) > 32:
            text = text[:29] + "..."
        return f"PeriodicSequence({self.modulus}, {text})"


# -- module-level operations -------------------------------------------------

def parse_sequence(text: str, modulus: Modulus) -> PeriodicSequence:
    """Parse a one-period 0/1 literal (whitespace ignored)."""
    return PeriodicSequence.from_text(text, modulus)


def hamming_weight(s: PeriodicSequence) -> int:
    """Number of ones in one period."""
    return s.weight


def xor_sequences(a: PeriodicSequence, b: PeriodicSequence) -> PeriodicSequence:
    """Bitwise GF(2) sum of two sequences over the same modulus."""
    return a ^ b


def pn_distance(i: int, j: int, modulus: Modulus) -> int:
    """p-adic distance between positions: p^(v_p(|j - i|)).

    Accepts the positions in either order; i == j raises EqualPositions.
    """
    N = modulus.period
    if not (0 <= i < N and 0 <= j < N):
        raise LengthMismatch(f"positions must lie in [0, {N}), got {i}, {j}")
    if i == j:
        raise EqualPositions(f"positions are both {i}")
    d = abs(j - i)
    p = modulus.p
    power = 1
    while d % p == 0:
        d //= p
        power *= p
    return power


def parse_corpus(lines: Iterable[str], modulus: Modulus) -> list[tuple[int, PeriodicSequence]]:
    """Parse a corpus: one literal per line, '#' lines and blanks skipped.

    Returns (line_number, sequence) pairs; parse errors are re-raised with the
    offending line number prefixed.
    """
    out: list[tuple[int, PeriodicSequence]] = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            out.append((lineno, PeriodicSequence.from_text(line, modulus)))
        except (LengthMismatch, InvalidCharacter) as exc:
            raise type(exc)(f"line {lineno}: {exc}") from None
    return out


def require_nonzero(s: PeriodicSequence) -> None:
    """Raise ZeroSequence unless s has at least one 1."""
    if s.value == 0:
        raise ZeroSequence("sequence is identically zero")
