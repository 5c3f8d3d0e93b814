"""Binary words with 1-based indexing, moment arithmetic, and bit flips.

The text form of a word is a string of '0'/'1' characters whose leftmost
character is index 1. Words are immutable and hashable, so they can be
shared freely across threads and used as dict keys.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator


@dataclass(frozen=True)
class BitWord:
    """Fixed-length sequence of bits, indexed 1..n."""

    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.bits) == 0:
            raise ValueError("a BitWord must contain at least one bit")
        for b in self.bits:
            if b != 0 and b != 1:
                raise ValueError(f"bit values must be 0 or 1, got {b!r}")

    @classmethod
    def parse(cls, text: str) -> BitWord:
        """Build a word from its text form ('0'/'1' string, index 1 leftmost)."""
        if not text or any(ch not in "01" for ch in text):
            raise ValueError(f"not a binary word: {text!r}")
        return cls(tuple(1 if ch == "1" else 0 for ch in text))

    @property
    def n(self) -> int:
        return len(self.bits)

    def __len__(self) -> int:
        return len(self.bits)

    def __iter__(self) -> Iterator[int]:
        return iter(self.bits)

    def bit(self, i: int) -> int:
        """Bit value at 1-based index i."""
        if not 1 <= i <= len(self.bits):
            raise IndexError(f"index {i} out of range 1..{len(self.bits)}")
        return self.bits[i - 1]

    def __str__(self) -> str:
        return "".join("1" if b else "0" for b in self.bits)

    def __repr__(self) -> str:
        return f"BitWord({str(self)!r})"


@dataclass(frozen=True)
class ResidueSystem:
    """Modulus and target residue of the moment congruence."""

    modulus: int
    target: int

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise ValueError("modulus must be positive")
        if not 0 <= self.target < self.modulus:
            raise ValueError(
                f"target {self.target} must lie in [0, {self.modulus - 1}]"
            )


@dataclass(frozen=True)
class Support:
    """Strictly increasing set of 1-based flip indices."""

    indices: tuple[int, ...]

    def __post_init__(self) -> None:
        idx = tuple(sorted(self.indices))
        if len(set(idx)) != len(idx):
            raise ValueError(f"duplicate indices in support: {self.indices}")
        if idx and idx[0] < 1:
            raise ValueError("support indices are 1-based and must be >= 1")
        object.__setattr__(self, "indices", idx)

    @classmethod
    def of(cls, *indices: int) -> Support:
        return cls(tuple(indices))

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices)

    def __len__(self) -> int:
        return len(self.indices)

    def __contains__(self, i: int) -> bool:
        return i in self.indices

    def __str__(self) -> str:
        return "{" + ", ".join(str(i) for i in self.indices) + "}"


def moment(x: BitWord, rs: ResidueSystem) -> int:
    """First-order moment of x: the sum of indices holding a 1, mod m.

    The sum is taken in exact integer arithmetic before reduction, so any
    word length is safe.
    """
    total = 0
    for i, b in enumerate(x.bits, start=1):
        if b:
            total += i
    return total % rs.modulus


def flip(x: BitWord, support: Support) -> BitWord:
    """Invert the bits of x at every index in the support."""
    if support.indices and support.indices[-1] > x.n:
        raise IndexError(
            f"support index {support.indices[-1]} out of range for length {x.n}"
        )
    bits = list(x.bits)
    for i in support.indices:
        bits[i - 1] ^= 1
    return BitWord(tuple(bits))


def flip_delta(x: BitWord, i: int, rs: ResidueSystem) -> int:
    """Moment change caused by inverting bit i: +i for a 0, -i for a 1 (mod m)."""
    return (i if x.bit(i) == 0 else -i) % rs.modulus


def hamming_distance(x: BitWord, y: BitWord) -> int:
    """Number of positions where the two equal-length words differ."""
    if x.n != y.n:
        raise ValueError(f"length mismatch: {x.n} != {y.n}")
    return sum(1 for a, b in zip(x.bits, y.bits) if a != b)


def support_between(x: BitWord, y: BitWord) -> Support:
    """Indices at which two equal-length words differ, as a Support."""
    if x.n != y.n:
        raise ValueError(f"length mismatch: {x.n} != {y.n}")
    return Support(
        tuple(i for i, (a, b) in enumerate(zip(x.bits, y.bits), start=1) if a != b)
    )
