"""Shared fixtures and independent oracles for the test suite.

The oracles here deliberately re-derive results by raw enumeration, so the
library's optimized paths are checked against a second construction rather
than against themselves.
"""

from __future__ import annotations

import random
from itertools import combinations

import pytest

from momentflip.bitword import BitWord, ResidueSystem, flip_delta, moment
from momentflip.codebook import builtin_fixture


@pytest.fixture(scope="session")
def hamming():
    return builtin_fixture("hamming_7_16_3")


@pytest.fixture(scope="session")
def bch():
    return builtin_fixture("bch_15_32_7")


def random_word(rng: random.Random, n: int) -> BitWord:
    return BitWord(tuple(rng.randint(0, 1) for _ in range(n)))


def all_words(n: int):
    for i in range(1 << n):
        yield BitWord.parse(format(i, f"0{n}b"))


def vt_class(n: int, m: int, a: int) -> list[BitWord]:
    """Every length-n word whose moment is a mod m, by full enumeration."""
    rs = ResidueSystem(m, a)
    return [w for w in all_words(n) if moment(w, rs) == a]


def brute_min_flip_sets(c: BitWord, rs: ResidueSystem, k_max: int):
    """Subset-enumeration oracle for the minimal flip search (use n <= 16).

    Returns (minimal size or None, sorted list of index tuples).
    """
    target = (rs.target - moment(c, rs)) % rs.modulus
    for size in range(min(k_max, c.n) + 1):
        hits = [
            combo
            for combo in combinations(range(1, c.n + 1), size)
            if sum(flip_delta(c, i, rs) for i in combo) % rs.modulus == target
        ]
        if hits:
            return size, sorted(hits)
    return None, []


def oracle_insertions(y: BitWord) -> set[BitWord]:
    """One-bit insertions built by list surgery (independent of the library)."""
    out = set()
    for pos in range(y.n + 1):
        for b in (0, 1):
            bits = list(y.bits)
            bits.insert(pos, b)
            out.add(BitWord(tuple(bits)))
    return out


def oracle_deletions(y: BitWord) -> set[BitWord]:
    out = set()
    for pos in range(y.n):
        bits = list(y.bits)
        del bits[pos]
        out.add(BitWord(tuple(bits)))
    return out
