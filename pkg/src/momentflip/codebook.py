"""Substitution-correcting code sets: loading, exact minimum distance, a
greedy sphere-packing constructor, and brute-force single-edit oracles.

The single-edit oracles materialize whole deletion/insertion balls into
hash sets keyed by the word text form; they are meant as ground truth for
desk-scale codes, not as production decoders.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Optional

from . import fixtures
from .bitword import BitWord, hamming_distance

GV_MAX_N = 20

DELETION = "deletion"
INSERTION = "insertion"


class Codebook:
    """Immutable set of distinct equal-length words, kept in load order."""

    def __init__(self, words: Iterable[BitWord]):
        words = tuple(words)
        if not words:
            raise ValueError("codebook has no words")
        n = words[0].n
        seen: set[BitWord] = set()
        for w in words:
            if w.n != n:
                raise ValueError(
                    f"ragged word length: {w} has length {w.n}, expected {n}"
                )
            if w in seen:
                raise ValueError(f"duplicate word: {w}")
            seen.add(w)
        self.words: tuple[BitWord, ...] = words
        self.n: int = n
        self._members = frozenset(words)

    @property
    def size(self) -> int:
        return len(self.words)

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def __contains__(self, w: BitWord) -> bool:
        return w in self._members

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Codebook) and self.words == other.words

    def __repr__(self) -> str:
        return f"Codebook(n={self.n}, size={self.size})"

    @cached_property
    def d_min(self) -> int:
        return min_distance(self)

    def to_text(self) -> str:
        """Canonical text form: one word per line, trailing newline."""
        return "".join(f"{w}\n" for w in self.words)


def load_codebook(text: str) -> Codebook:
    """Parse newline-separated words; '#' lines and blank lines are skipped.

    Raises ValueError on ragged lengths, non-binary characters, or
    duplicate words.
    """
    words = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            words.append(BitWord.parse(line))
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    return Codebook(words)


def builtin_fixture(name: str) -> Codebook:
    """One of the bundled reference codes: hamming_7_16_3 or bch_15_32_7."""
    try:
        rows = fixtures.FIXTURE_WORDS[name]
    except KeyError:
        known = ", ".join(sorted(fixtures.FIXTURE_WORDS))
        raise ValueError(f"unknown fixture {name!r} (available: {known})") from None
    return Codebook(BitWord.parse(w) for w in rows)


def min_distance(cb: Codebook) -> int:
    """Exact minimum pairwise Hamming distance; needs at least two words."""
    if cb.size < 2:
        raise ValueError("minimum distance needs at least 2 words")
    return min(hamming_distance(x, y) for x, y in combinations(cb.words, 2))


def gv_greedy(n: int, d: int, ordering: str = "lexicographic") -> Codebook:
    """Greedy sphere-packing construction over all 2^n words.

    Words are visited in the chosen order and admitted whenever they keep
    every pairwise distance at least d, so the result always satisfies
    size >= 2^n / volume(n, d-1). This is a desk-scale bound witness, not a
    production encoder; n is capped at GV_MAX_N because the sweep is
    exhaustive.
    """
    if not 1 <= n <= GV_MAX_N:
        raise ValueError(f"n must be in 1..{GV_MAX_N} for the exhaustive sweep")
    if d < 1:
        raise ValueError("d must be >= 1")
    if ordering not in ("lexicographic", "gray"):
        raise ValueError(f"unknown ordering {ordering!r}")
    admitted: list[int] = []
    for i in range(1 << n):
        v = i if ordering == "lexicographic" else i ^ (i >> 1)
        if all((v ^ u).bit_count() >= d for u in admitted):
            admitted.append(v)
    return Codebook(BitWord.parse(format(v, f"0{n}b")) for v in admitted)


@dataclass(frozen=True)
class CorrectabilityVerdict:
    """Outcome of a ball-disjointness check.

    When not correctable, ``witness`` holds two codewords plus the text form
    of an edit result both can produce.
    """

    correctable: bool
    witness: Optional[tuple[BitWord, BitWord, str]] = None


def deletion_ball(w: BitWord) -> set[str]:
    """Distinct results of deleting one bit of w, as text forms."""
    text = str(w)
    return {text[:i] + text[i + 1 :] for i in range(len(text))}


def insertion_ball(w: BitWord) -> set[str]:
    """Distinct results of inserting one bit anywhere in w, as text forms."""
    text = str(w)
    return {text[:i] + b + text[i:] for i in range(len(text) + 1) for b in "01"}


def single_edit_correctable(cb: Codebook, kind: str) -> CorrectabilityVerdict:
    """Check that all one-edit balls of the code are pairwise disjoint.

    Edit results are deduplicated within each codeword before comparison.
    Enumeration is in lexicographic word order, so a failure witness is
    deterministic: the first collision found.
    """
    if kind == DELETION:
        ball = deletion_ball
    elif kind == INSERTION:
        ball = insertion_ball
    else:
        raise ValueError(f"kind must be {DELETION!r} or {INSERTION!r}")
    owner: dict[str, BitWord] = {}
    for w in sorted(cb.words, key=str):
        for result in sorted(ball(w)):
            prev = owner.get(result)
            if prev is not None:
                return CorrectabilityVerdict(False, (prev, w, result))
            owner[result] = w
    return CorrectabilityVerdict(True, None)
