"""Moment balancing schemes built on bit flips.

Four constructions carry a substitution-correcting code into a fixed
residue class of the moment congruence:

* ``mfmb_construct``: flip the fewest bits anywhere (variable indices);
* ``ofmb_construct``: an expunging construction that keeps, per codeword,
  one representative per residue reachable with at most one flip, then
  selects the most populated residue class;
* ``fixed_construct`` / ``fixed_index_balance``: flips confined to the
  power-of-two indices, so a decoder can treat those positions as erasures;
* ``mbt_construct`` / ``mbt_encode``: the systematic template that inserts
  dedicated balancing bits at the power-of-two indices of a longer word.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from .bitword import (
    BitWord,
    ResidueSystem,
    Support,
    flip,
    flip_delta,
    hamming_distance,
    moment,
    support_between,
)
from .codebook import Codebook

SCHEME_MFMB = "MFMB"
SCHEME_OFMB = "OFMB"
SCHEME_FIXED = "FIXED"
SCHEME_MBT = "MBT"
SCHEMES = (SCHEME_MFMB, SCHEME_OFMB, SCHEME_FIXED, SCHEME_MBT)

POLICY_SINGLE = "single"
POLICY_MULTI = "multi"


@dataclass(frozen=True)
class FlipSearchResult:
    """All smallest flip supports reaching the target residue.

    ``minimal_size`` is None when no support within the budget works; that
    is a reported outcome, not an error.
    """

    minimal_size: Optional[int]
    supports: tuple[Support, ...]

    @property
    def found(self) -> bool:
        return self.minimal_size is not None

    @property
    def canonical(self) -> Support:
        """Smallest support, ties broken by lexicographic index order."""
        if not self.found:
            raise ValueError("no support found within the flip budget")
        return self.supports[0]


@dataclass(frozen=True)
class BalanceEntry:
    original: BitWord
    balanced: BitWord
    support: Support


@dataclass
class BalancedCode:
    """Result of a balancing scheme.

    Every balanced word lies in the residue class ``rs``; balanced words
    are pairwise distinct; each support records exactly how the balanced
    word differs from its original (for the systematic template: which
    inserted balancing bits are 1). All of that is checked on construction.
    """

    scheme: str
    rs: ResidueSystem
    entries: tuple[BalanceEntry, ...]
    d_min_balanced: Optional[int]
    excluded: tuple[BitWord, ...] = ()
    meta: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.scheme not in SCHEMES:
            raise ValueError(f"unknown scheme {self.scheme!r}")
        if not self.entries:
            raise ValueError("balanced code has no entries")
        seen: set[BitWord] = set()
        for e in self.entries:
            if moment(e.balanced, self.rs) != self.rs.target:
                raise ValueError(
                    f"balanced word {e.balanced} has moment "
                    f"{moment(e.balanced, self.rs)}, expected {self.rs.target}"
                )
            if e.balanced in seen:
                raise ValueError(f"duplicate balanced word {e.balanced}")
            seen.add(e.balanced)
            if self.scheme == SCHEME_MBT:
                bal_positions = fixed_indices(e.balanced.n)
                if e.balanced.n != e.original.n + len(bal_positions):
                    raise ValueError(
                        "template output length must be the original length "
                        "plus the number of balancing positions"
                    )
                if any(i not in bal_positions for i in e.support):
                    raise ValueError("template support must sit on balancing positions")
                ones = tuple(p for p in bal_positions if e.balanced.bit(p) == 1)
                if ones != e.support.indices:
                    raise ValueError("template support must list the 1-balancing bits")
                if mbt_extract(e.balanced) != e.original:
                    raise ValueError("template entry does not extract to its original")
            else:
                if e.balanced.n != e.original.n:
                    raise ValueError("balanced and original lengths must match")
                if flip(e.original, e.support) != e.balanced:
                    raise ValueError(
                        f"support {e.support} does not carry {e.original} "
                        f"to {e.balanced}"
                    )

    @property
    def n(self) -> int:
        """Length of the balanced words."""
        return self.entries[0].balanced.n

    def balanced_words(self) -> tuple[BitWord, ...]:
        return tuple(e.balanced for e in self.entries)

    def originals(self) -> tuple[BitWord, ...]:
        """Distinct originals with an entry, in entry order."""
        return tuple(dict.fromkeys(e.original for e in self.entries))

    def entries_for_original(self, c: BitWord) -> tuple[BalanceEntry, ...]:
        return tuple(e for e in self.entries if e.original == c)

    def entry_for_balanced(self, x: BitWord) -> Optional[BalanceEntry]:
        for e in self.entries:
            if e.balanced == x:
                return e
        return None

    def to_json_dict(self) -> dict:
        return {
            "scheme": self.scheme,
            "m": self.rs.modulus,
            "a": self.rs.target,
            "n": self.n,
            "entries": [
                {
                    "original": str(e.original),
                    "balanced": str(e.balanced),
                    "support": list(e.support.indices),
                }
                for e in self.entries
            ],
            "excluded": [str(w) for w in self.excluded],
            "d_min_balanced": self.d_min_balanced,
            "meta": self.meta,
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> BalancedCode:
        rs = ResidueSystem(data["m"], data["a"])
        entries = tuple(
            BalanceEntry(
                BitWord.parse(e["original"]),
                BitWord.parse(e["balanced"]),
                Support(tuple(e["support"])),
            )
            for e in data["entries"]
        )
        excluded = tuple(BitWord.parse(w) for w in data.get("excluded", ()))
        return cls(
            scheme=data["scheme"],
            rs=rs,
            entries=entries,
            d_min_balanced=data.get("d_min_balanced"),
            excluded=excluded,
            meta=dict(data.get("meta", {})),
        )


def _pairwise_d_min(words: list[BitWord]) -> Optional[int]:
    if len(words) < 2:
        return None
    return min(hamming_distance(x, y) for x, y in combinations(words, 2))


def min_flip_sets(c: BitWord, rs: ResidueSystem, k_max: int) -> FlipSearchResult:
    """Exhaustively find ALL smallest flip supports that balance c.

    Runs a dynamic program over (prefix length, flips used, residue):
    ``table[i][t]`` holds the residue deltas reachable by flipping exactly
    t of the first i indices, for O(n * m * k_max) work instead of raw
    subset enumeration. Every support of the minimal size is then recovered
    by backtracking through the table. Budget exhaustion yields
    ``minimal_size=None`` rather than an error.
    """
    if k_max < 0:
        raise ValueError("k_max must be >= 0")
    m = rs.modulus
    n = c.n
    if m <= n:
        warnings.warn(
            f"modulus {m} does not exceed the word length {n}; "
            "single-edit guarantees need m > n",
            stacklevel=2,
        )
    target = (rs.target - moment(c, rs)) % m
    deltas = [0] + [flip_delta(c, i, rs) for i in range(1, n + 1)]
    kcap = min(k_max, n)
    # table[i][t]: set of residue deltas from exactly t flips among 1..i
    table: list[list[set[int]]] = [[set() for _ in range(kcap + 1)]]
    table[0][0].add(0)
    for i in range(1, n + 1):
        prev = table[i - 1]
        cur = [set(s) for s in prev]
        d = deltas[i]
        for t in range(kcap):
            if prev[t]:
                bucket = cur[t + 1]
                for r in prev[t]:
                    bucket.add((r + d) % m)
        table.append(cur)
    minimal = next((t for t in range(kcap + 1) if target in table[n][t]), None)
    if minimal is None:
        return FlipSearchResult(None, ())
    supports: list[tuple[int, ...]] = []
    stack: list[tuple[int, int, int, tuple[int, ...]]] = [(n, minimal, target, ())]
    while stack:
        i, t, r, acc = stack.pop()
        if i == 0:
            if t == 0 and r == 0:
                supports.append(acc)
            continue
        if r in table[i - 1][t]:
            stack.append((i - 1, t, r, acc))
        if t > 0:
            pr = (r - deltas[i]) % m
            if pr in table[i - 1][t - 1]:
                stack.append((i - 1, t - 1, pr, (i,) + acc))
    supports.sort()
    return FlipSearchResult(minimal, tuple(Support(s) for s in supports))


def mfmb_construct(
    cb: Codebook,
    rs: Optional[ResidueSystem] = None,
    flip_budget: int = 1,
    policy: str = POLICY_SINGLE,
) -> BalancedCode:
    """Balance every codeword with at most ``flip_budget`` flips anywhere.

    Policy ``single`` keeps one canonical minimal flip set per word and
    requires ``2 * flip_budget < d_min`` so balanced words stay distinct and
    the measured minimum distance can drop by at most twice the flips used.
    Policy ``multi`` admits every minimal-size flip set of every word; that
    enlarges the output but voids the distance guarantee. Words whose
    minimal flip count exceeds the budget are excluded rather than
    force-balanced, and reported so callers can quantify the rate loss.

    The default residue system is modulus n+1, target 0; pass an explicit
    one (for example modulus >= 2n) for other regimes.
    """
    if rs is None:
        rs = ResidueSystem(cb.n + 1, 0)
    if policy not in (POLICY_SINGLE, POLICY_MULTI):
        raise ValueError(f"policy must be {POLICY_SINGLE!r} or {POLICY_MULTI!r}")
    if flip_budget < 0:
        raise ValueError("flip_budget must be >= 0")
    d_min = cb.d_min
    if policy == POLICY_SINGLE and 2 * flip_budget >= d_min:
        raise ValueError(
            f"policy 'single' needs 2*flip_budget < d_min; "
            f"got flip_budget={flip_budget}, d_min={d_min}"
        )
    entries: list[BalanceEntry] = []
    excluded: list[BitWord] = []
    max_used = 0
    for c in cb.words:
        result = min_flip_sets(c, rs, flip_budget)
        if not result.found:
            excluded.append(c)
            continue
        max_used = max(max_used, result.minimal_size)
        chosen = result.supports if policy == POLICY_MULTI else (result.canonical,)
        for s in chosen:
            entries.append(BalanceEntry(c, flip(c, s), s))
    if not entries:
        raise ValueError("every codeword exceeded the flip budget")
    d_min_bal = _pairwise_d_min([e.balanced for e in entries])
    meta = {
        "policy": policy,
        "flip_budget": flip_budget,
        "max_flips_used": max_used,
        "distance_guarantee": policy == POLICY_SINGLE,
        "d_min_original": d_min,
    }
    return BalancedCode(
        SCHEME_MFMB, rs, tuple(entries), d_min_bal, tuple(excluded), meta
    )


def one_flip_classes(c: BitWord, m: int) -> dict[int, BitWord]:
    """One representative per moment value among c and its one-bit flips.

    The representative of c's own residue is c itself; every other residue
    gets the flip with the smallest index reaching it. With m > n the n+1
    sequences always cover at least ceil(n/2) + 1 residues, because all
    0-to-1 flip deltas are distinct mod m, all 1-to-0 deltas likewise, and
    one of the two kinds occurs at least ceil(n/2) times.
    """
    if m <= c.n:
        raise ValueError(f"modulus must exceed the word length ({m} <= {c.n})")
    rs = ResidueSystem(m, 0)
    base = moment(c, rs)
    classes: dict[int, BitWord] = {base: c}
    for i in range(1, c.n + 1):
        r = (base + flip_delta(c, i, rs)) % m
        if r not in classes:
            classes[r] = flip(c, Support.of(i))
    return classes


def ofmb_construct(cb: Codebook) -> BalancedCode:
    """One-flip expunging construction over modulus n+1.

    Pools the per-codeword residue representatives from
    ``one_flip_classes``, partitions the pool by residue, and keeps the
    most populated class as the new code (ties go to the smallest residue).
    With d_min >= 3 no two codewords can contribute the same sequence, the
    winning class holds at least ceil(M * (ceil(n/2)+1) / (n+1)) words, and
    the measured minimum distance drops by at most 2.

    A cross-codeword collision in the pool means the input codebook did not
    actually have d_min >= 3 and raises.
    """
    d_min = cb.d_min
    if d_min < 3:
        raise ValueError(f"one-flip balancing needs d_min >= 3, got {d_min}")
    m = cb.n + 1
    owner: dict[BitWord, BitWord] = {}
    classes: dict[int, list[BalanceEntry]] = {r: [] for r in range(m)}
    for c in cb.words:
        for r, w in sorted(one_flip_classes(c, m).items()):
            prev = owner.get(w)
            if prev is not None:
                raise ValueError(
                    f"sequence {w} reachable from both {prev} and {c}; "
                    "input codebook is corrupted"
                )
            owner[w] = c
            classes[r].append(BalanceEntry(c, w, support_between(c, w)))
    best = max(range(m), key=lambda r: (len(classes[r]), -r))
    entries = tuple(classes[best])
    kept = {e.original for e in entries}
    excluded = tuple(c for c in cb.words if c not in kept)
    d_min_bal = _pairwise_d_min([e.balanced for e in entries])
    meta = {
        "d_min_original": d_min,
        "class_sizes": {str(r): len(classes[r]) for r in range(m)},
        "distance_guarantee": True,
    }
    return BalancedCode(
        SCHEME_OFMB, ResidueSystem(m, best), entries, d_min_bal, excluded, meta
    )


def fixed_indices(n: int) -> tuple[int, ...]:
    """The power-of-two indices 1, 2, 4, ... not exceeding n."""
    if n < 1:
        raise ValueError("n must be positive")
    out = []
    p = 1
    while p <= n:
        out.append(p)
        p <<= 1
    return tuple(out)


def fixed_index_balance(c: BitWord, rs: ResidueSystem) -> tuple[BitWord, Support]:
    """Balance c by flipping only power-of-two indices.

    Requires n < m <= 2^(number of fixed indices). The signed index sums
    over subsets of the fixed positions form a block of consecutive
    integers as large as the modulus, so every residue is reachable; the
    smallest achieving subset is chosen, ties broken lexicographically.
    """
    idx = fixed_indices(c.n)
    limit = 1 << len(idx)
    m = rs.modulus
    if not c.n < m <= limit:
        raise ValueError(
            f"fixed-index balancing needs n < m <= {limit}, got m={m}, n={c.n}"
        )
    target = (rs.target - moment(c, rs)) % m
    deltas = {i: flip_delta(c, i, rs) for i in idx}
    for size in range(len(idx) + 1):
        for subset in combinations(idx, size):
            if sum(deltas[i] for i in subset) % m == target:
                s = Support(subset)
                return flip(c, s), s
    raise AssertionError("unreachable: fixed-index subsets cover every residue")


def fixed_construct(cb: Codebook, rs: Optional[ResidueSystem] = None) -> BalancedCode:
    """Apply ``fixed_index_balance`` to every codeword.

    Keeps the full cardinality of the input code; the fixed positions are
    the erasure set a decoder should use. Default residue system: modulus
    n+1, target 0.
    """
    if rs is None:
        rs = ResidueSystem(cb.n + 1, 0)
    entries = []
    max_used = 0
    for c in cb.words:
        balanced, support = fixed_index_balance(c, rs)
        entries.append(BalanceEntry(c, balanced, support))
        max_used = max(max_used, len(support))
    d_min_bal = _pairwise_d_min([e.balanced for e in entries])
    meta = {
        "fixed_indices": list(fixed_indices(cb.n)),
        "max_flips_used": max_used,
        "d_min_original": cb.d_min,
    }
    return BalancedCode(SCHEME_FIXED, rs, tuple(entries), d_min_bal, (), meta)


def mbt_length(k: int) -> int:
    """Smallest n with n = k + floor(log2 n) + 1, for k code bits.

    Around powers of two there can be two consistent lengths; the smaller
    one (fewer balancing bits) is used.
    """
    if k < 1:
        raise ValueError("k must be positive")
    b = 1
    while True:
        n = k + b
        if n.bit_length() == b:  # floor(log2 n) + 1 == b
            return n
        b += 1


def mbt_positions(n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(balancing positions, code positions) of a length-n template word."""
    bal = fixed_indices(n)
    bal_set = set(bal)
    code = tuple(i for i in range(1, n + 1) if i not in bal_set)
    return bal, code


def mbt_encode(c: BitWord, rs: ResidueSystem) -> BitWord:
    """Systematic template encoding of the k code bits of c.

    Code bits fill the non-power-of-two positions of the output in order;
    the balancing bits at the power-of-two positions are chosen so the
    whole word lands in the target residue class. Requires
    n < m <= 2^(number of balancing bits) for the output length n. Among
    valid balancing choices, the one with the fewest ones is used (ties:
    smallest positions). ``mbt_extract`` is the exact inverse.
    """
    n = mbt_length(c.n)
    bal, code = mbt_positions(n)
    m = rs.modulus
    if not n < m <= (1 << len(bal)):
        raise ValueError(
            f"template encoding needs n < m <= {1 << len(bal)}, got m={m}, n={n}"
        )
    bits = [0] * n
    sigma_code = 0
    for pos, bit in zip(code, c.bits):
        bits[pos - 1] = bit
        if bit:
            sigma_code += pos
    need = (rs.target - sigma_code) % m
    for size in range(len(bal) + 1):
        for subset in combinations(bal, size):
            if sum(subset) % m == need:
                for p in subset:
                    bits[p - 1] = 1
                return BitWord(tuple(bits))
    raise AssertionError("unreachable: balancing-bit sums cover every residue")


def mbt_extract(x: BitWord) -> BitWord:
    """Recover the code bits from a template-encoded word."""
    bal, code = mbt_positions(x.n)
    if mbt_length(len(code)) != x.n:
        raise ValueError(f"length {x.n} is not a valid template output length")
    return BitWord(tuple(x.bit(i) for i in code))


def mbt_construct(cb: Codebook, rs: ResidueSystem) -> BalancedCode:
    """Apply ``mbt_encode`` to every codeword.

    Entry supports record which balancing positions carry a 1.
    """
    entries = []
    for c in cb.words:
        balanced = mbt_encode(c, rs)
        bal_positions = fixed_indices(balanced.n)
        support = Support(tuple(p for p in bal_positions if balanced.bit(p) == 1))
        entries.append(BalanceEntry(c, balanced, support))
    d_min_bal = _pairwise_d_min([e.balanced for e in entries])
    meta = {
        "balancing_positions": list(fixed_indices(entries[0].balanced.n)),
        "d_min_original": cb.d_min if cb.size >= 2 else None,
    }
    return BalancedCode(SCHEME_MBT, rs, tuple(entries), d_min_bal, (), meta)
