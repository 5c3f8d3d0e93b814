"""Single insertion/deletion correction for moment-class codes, erasure-aware
bounded-distance substitution decoding, and the frame-level dispatcher.

All decoders are bounded-distance: inputs beyond the guaranteed radius
produce a failure outcome (or raise on ambiguity) instead of a best guess.
Frame boundaries are assumed known, so the received length tells the
dispatcher whether a deletion, an insertion, or only substitutions occurred.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Collection, Iterator, Optional

from .balance import (
    SCHEME_FIXED,
    SCHEME_MBT,
    SCHEME_MFMB,
    SCHEME_OFMB,
    BalancedCode,
    fixed_index_balance,
    fixed_indices,
    mbt_extract,
)
from .bitword import BitWord, ResidueSystem, hamming_distance, moment
from .codebook import Codebook

KIND_DELETION = "deletion_corrected"
KIND_INSERTION = "insertion_corrected"
KIND_SUBSTITUTION = "substitutions_corrected"
KIND_FAILURE = "failure"


class DecodeError(Exception):
    """Decoding could not identify a unique codeword."""


class NoCandidateError(DecodeError):
    """No candidate lies in the target class; the channel left the model."""


class AmbiguousCandidateError(DecodeError):
    """Several candidates qualify; the parameters do not support the call."""


@dataclass(frozen=True)
class ErasureSet:
    """Positions treated as unknown during substitution decoding."""

    indices: tuple[int, ...]

    def __post_init__(self) -> None:
        idx = tuple(sorted(self.indices))
        if len(set(idx)) != len(idx):
            raise ValueError("duplicate erasure indices")
        if idx and idx[0] < 1:
            raise ValueError("erasure indices are 1-based and must be >= 1")
        object.__setattr__(self, "indices", idx)

    @classmethod
    def for_fixed_scheme(cls, n: int) -> ErasureSet:
        """The power-of-two positions a fixed-index balancer may have flipped."""
        return cls(fixed_indices(n))

    def __len__(self) -> int:
        return len(self.indices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices)


@dataclass
class DecodeOutcome:
    kind: str
    word: Optional[BitWord] = None
    original: Optional[BitWord] = None
    detail: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.kind != KIND_FAILURE

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "word": None if self.word is None else str(self.word),
            "original": None if self.original is None else str(self.original),
            "detail": self.detail,
        }


def one_bit_insertions(y: BitWord) -> list[BitWord]:
    """Distinct words obtained by inserting one bit anywhere in y."""
    text = str(y)
    seen: set[str] = set()
    out: list[BitWord] = []
    for i in range(len(text) + 1):
        for b in "01":
            t = text[:i] + b + text[i:]
            if t not in seen:
                seen.add(t)
                out.append(BitWord.parse(t))
    return out


def one_bit_deletions(y: BitWord) -> list[BitWord]:
    """Distinct words obtained by deleting one bit of y."""
    if y.n < 2:
        raise ValueError("cannot delete from a length-1 word")
    text = str(y)
    seen: set[str] = set()
    out: list[BitWord] = []
    for i in range(len(text)):
        t = text[:i] + text[i + 1 :]
        if t not in seen:
            seen.add(t)
            out.append(BitWord.parse(t))
    return out


def _unique_in_class(
    candidates: list[BitWord],
    rs: ResidueSystem,
    code_membership: Optional[Collection[BitWord]],
    received: BitWord,
) -> BitWord:
    members = (
        code_membership
        if code_membership is None or isinstance(code_membership, (set, frozenset))
        else frozenset(code_membership)
    )
    found = [
        w
        for w in candidates
        if moment(w, rs) == rs.target and (members is None or w in members)
    ]
    if not found:
        raise NoCandidateError(
            f"no single-edit candidate of {received} lies in the target class"
        )
    if len(found) > 1:
        raise AmbiguousCandidateError(
            f"{len(found)} candidates for {received}; the modulus is too small "
            "for the word length or the input is out of model"
        )
    return found[0]


def vt_reinsert(
    y: BitWord,
    rs: ResidueSystem,
    code_membership: Optional[Collection[BitWord]] = None,
) -> BitWord:
    """Undo one deletion: the unique one-bit insertion of y whose moment hits
    the target (and that belongs to the code, when one is supplied).

    Uniqueness is guaranteed for modulus >= n+1 where n is the restored
    length; a smaller modulus may surface as an ambiguity error.
    """
    return _unique_in_class(one_bit_insertions(y), rs, code_membership, y)


def vt_delete(
    y: BitWord,
    rs: ResidueSystem,
    code_membership: Optional[Collection[BitWord]] = None,
) -> BitWord:
    """Undo one insertion: mirror of ``vt_reinsert`` over one-bit deletions."""
    return _unique_in_class(one_bit_deletions(y), rs, code_membership, y)


def punctured_distance(x: BitWord, y: BitWord, erased: frozenset[int]) -> int:
    """Hamming distance ignoring the erased (1-based) positions."""
    if x.n != y.n:
        raise ValueError(f"length mismatch: {x.n} != {y.n}")
    return sum(
        1
        for i, (a, b) in enumerate(zip(x.bits, y.bits), start=1)
        if a != b and i not in erased
    )


def nearest_codeword(
    cb: Codebook,
    y: BitWord,
    erasures: Optional[ErasureSet],
    radius: int,
) -> DecodeOutcome:
    """Unique codeword within ``radius`` of y outside the erased positions.

    Returns a failure outcome when nothing is in range. Two codewords at the
    same minimal distance inside the radius raise: that means the radius
    exceeds what the code supports.
    """
    if y.n != cb.n:
        raise ValueError(f"received length {y.n} does not match code length {cb.n}")
    if radius < 0:
        raise ValueError("radius must be >= 0")
    erased = frozenset(erasures.indices) if erasures is not None else frozenset()
    best: list[BitWord] = []
    best_d: Optional[int] = None
    for w in cb.words:
        dist = punctured_distance(w, y, erased)
        if best_d is None or dist < best_d:
            best, best_d = [w], dist
        elif dist == best_d:
            best.append(w)
    if best_d is None or best_d > radius:
        return DecodeOutcome(
            KIND_FAILURE,
            detail={
                "reason": "no codeword within radius",
                "radius": radius,
                "best_distance": best_d,
            },
        )
    if len(best) > 1:
        raise AmbiguousCandidateError(
            f"{len(best)} codewords at punctured distance {best_d}; "
            f"radius {radius} is too large for this code"
        )
    found = best[0]
    errors = tuple(
        i
        for i, (a, b) in enumerate(zip(found.bits, y.bits), start=1)
        if a != b and i not in erased
    )
    return DecodeOutcome(
        KIND_SUBSTITUTION,
        word=found,
        detail={"distance": best_d, "error_positions": list(errors)},
    )


@dataclass
class DecodeContext:
    """Everything a frame decoder needs.

    ``codebook`` is the original substitution-correcting code (used by the
    substitution path of the flip schemes); ``balanced`` supplies the class
    membership for the reinsert/delete paths and the mapping back to
    originals; ``expected_n`` is the nominal frame length.
    """

    scheme: str
    rs: ResidueSystem
    codebook: Optional[Codebook]
    balanced: Optional[BalancedCode]
    expected_n: int

    def __post_init__(self) -> None:
        self._members: Optional[frozenset[BitWord]] = (
            frozenset(self.balanced.balanced_words())
            if self.balanced is not None
            else None
        )

    @classmethod
    def from_balanced(
        cls, bal: BalancedCode, codebook: Optional[Codebook] = None
    ) -> DecodeContext:
        """Build a context from a balancing result.

        The original codebook is reconstructed from the entries plus the
        excluded words when not given explicitly (the template scheme never
        needs it).
        """
        if codebook is None and bal.scheme != SCHEME_MBT:
            words = list(bal.originals()) + list(bal.excluded)
            codebook = Codebook(words)
        return cls(bal.scheme, bal.rs, codebook, bal, bal.n)

    def membership(self) -> Optional[frozenset[BitWord]]:
        return self._members


def framed_decode(received: BitWord, ctx: DecodeContext) -> DecodeOutcome:
    """Decode one frame, dispatching on the received length.

    One bit short runs the reinsertion decoder, one bit long the deletion
    decoder, and the nominal length the substitution path of the scheme:
    fixed-index contexts mark the fixed positions as erasures and decode on
    the original codebook; variable-index contexts decode on the original
    codebook at full radius (the balancing flips are absorbed as extra
    errors) and then map to the balanced entry; template contexts decode on
    the balanced words directly and extract. Lengths off by two or more are
    out of model and fail.
    """
    n = ctx.expected_n
    if received.n in (n - 1, n + 1):
        if received.n == n - 1:
            word = vt_reinsert(received, ctx.rs, ctx.membership())
            kind = KIND_DELETION
        else:
            word = vt_delete(received, ctx.rs, ctx.membership())
            kind = KIND_INSERTION
        original = None
        if ctx.balanced is not None:
            entry = ctx.balanced.entry_for_balanced(word)
            if entry is not None:
                original = entry.original
        return DecodeOutcome(
            kind, word=word, original=original, detail={"received_length": received.n}
        )
    if received.n != n:
        return DecodeOutcome(
            KIND_FAILURE,
            detail={
                "reason": "received length differs from the frame length by 2 or more",
                "received_length": received.n,
                "expected_length": n,
            },
        )

    if ctx.scheme == SCHEME_FIXED:
        if ctx.codebook is None:
            raise ValueError("fixed-index decoding needs the original codebook")
        erasures = ErasureSet.for_fixed_scheme(n)
        radius = max((ctx.codebook.d_min - len(erasures) - 1) // 2, 0)
        out = nearest_codeword(ctx.codebook, received, erasures, radius)
        if not out.ok:
            return out
        original = out.word
        balanced, _ = fixed_index_balance(original, ctx.rs)
        return DecodeOutcome(
            KIND_SUBSTITUTION, word=balanced, original=original, detail=out.detail
        )

    if ctx.scheme in (SCHEME_MFMB, SCHEME_OFMB):
        if ctx.codebook is None:
            raise ValueError("variable-index decoding needs the original codebook")
        radius = (ctx.codebook.d_min - 1) // 2
        out = nearest_codeword(ctx.codebook, received, None, radius)
        if not out.ok:
            return out
        original = out.word
        entries = (
            ctx.balanced.entries_for_original(original)
            if ctx.balanced is not None
            else ()
        )
        if not entries:
            return DecodeOutcome(
                KIND_FAILURE,
                detail={
                    "reason": "decoded codeword has no balanced image",
                    "original": str(original),
                },
            )
        # several variants can share an original under the multi policy;
        # report the one closest to what was received
        entry = min(entries, key=lambda e: hamming_distance(e.balanced, received))
        return DecodeOutcome(
            KIND_SUBSTITUTION, word=entry.balanced, original=original, detail=out.detail
        )

    if ctx.scheme == SCHEME_MBT:
        if ctx.balanced is None:
            raise ValueError("template decoding needs the balanced code")
        bal_book = Codebook(ctx.balanced.balanced_words())
        d_min = ctx.balanced.d_min_balanced
        radius = 0 if d_min is None else (d_min - 1) // 2
        out = nearest_codeword(bal_book, received, None, radius)
        if not out.ok:
            return out
        return DecodeOutcome(
            KIND_SUBSTITUTION,
            word=out.word,
            original=mbt_extract(out.word),
            detail=out.detail,
        )

    raise ValueError(f"unknown scheme {ctx.scheme!r}")
