import random
from itertools import combinations

import pytest

from momentflip.balance import (
    fixed_construct,
    mbt_construct,
    mfmb_construct,
    ofmb_construct,
)
from momentflip.bitword import BitWord, ResidueSystem, Support, flip, moment
from momentflip.codebook import Codebook
from momentflip.decode import (
    KIND_DELETION,
    KIND_FAILURE,
    KIND_INSERTION,
    KIND_SUBSTITUTION,
    AmbiguousCandidateError,
    DecodeContext,
    ErasureSet,
    NoCandidateError,
    framed_decode,
    nearest_codeword,
    one_bit_deletions,
    one_bit_insertions,
    punctured_distance,
    vt_delete,
    vt_reinsert,
)

from conftest import oracle_deletions, oracle_insertions, random_word

RS8 = ResidueSystem(8, 0)
RS16 = ResidueSystem(16, 0)


class TestCandidateEnumeration:
    def test_insertions_match_oracle(self):
        rng = random.Random(13)
        for _ in range(100):
            w = random_word(rng, rng.randint(1, 14))
            got = one_bit_insertions(w)
            assert set(got) == oracle_insertions(w)
            assert len(got) == len(set(got))  # deduplicated

    def test_deletions_match_oracle(self):
        rng = random.Random(19)
        for _ in range(100):
            w = random_word(rng, rng.randint(2, 14))
            got = one_bit_deletions(w)
            assert set(got) == oracle_deletions(w)
            assert len(got) == len(set(got))


class TestVtReinsert:
    def test_interior_deletion(self):
        # 1001110 with its third bit removed
        assert vt_reinsert(BitWord.parse("101110"), RS8) == BitWord.parse("1001110")

    def test_all_zero(self):
        assert vt_reinsert(BitWord.parse("000000"), RS8) == BitWord.parse("0000000")

    def test_first_bit_of_reference_word(self):
        w = BitWord.parse("010000111010110")
        y = BitWord.parse(str(w)[1:])
        assert vt_reinsert(y, RS16) == w

    def test_membership_restriction(self):
        members = {BitWord.parse("1001110")}
        assert vt_reinsert(BitWord.parse("101110"), RS8, members) == BitWord.parse(
            "1001110"
        )
        with pytest.raises(NoCandidateError):
            vt_reinsert(BitWord.parse("101110"), RS8, {BitWord.parse("0000000")})

    def test_ambiguous_when_modulus_too_small(self):
        # m=4 < n+1=5: inserting a trailing 0 or a leading 0 both stay in class
        with pytest.raises(AmbiguousCandidateError):
            vt_reinsert(BitWord.parse("000"), ResidueSystem(4, 0))


class TestVtDelete:
    def test_appended_zero(self):
        assert vt_delete(BitWord.parse("10011100"), RS8) == BitWord.parse("1001110")

    def test_all_zero(self):
        assert vt_delete(BitWord.parse("00000000"), RS8) == BitWord.parse("0000000")

    def test_prepended_one(self):
        assert vt_delete(BitWord.parse("11001110"), RS8) == BitWord.parse("1001110")

    def test_no_candidate(self):
        # 1000000: moment 1; deletions are 000000 (moment 0) and 100000
        # (moment 1); ask for class a=2 so nothing matches
        with pytest.raises(NoCandidateError):
            vt_delete(BitWord.parse("1000000"), ResidueSystem(8, 2))


class TestNearestCodeword:
    def test_exact_match(self, hamming):
        out = nearest_codeword(hamming, BitWord.parse("1001110"), None, 1)
        assert out.kind == KIND_SUBSTITUTION
        assert out.word == BitWord.parse("1001110")
        assert out.detail["distance"] == 0 and out.detail["error_positions"] == []

    def test_single_substitution(self, hamming):
        out = nearest_codeword(hamming, BitWord.parse("1011110"), None, 1)
        assert out.word == BitWord.parse("1001110")
        assert out.detail["error_positions"] == [3]

    def test_erasures_plus_one_substitution(self, bch):
        y = flip(BitWord.parse("010101000011011"), Support.of(10))
        out = nearest_codeword(bch, y, ErasureSet((1, 2, 4, 8)), 1)
        assert out.word == BitWord.parse("100001010011011")
        assert out.detail["error_positions"] == [10]

    def test_failure_outside_radius(self, hamming):
        y = flip(BitWord.parse("1001110"), Support.of(1, 2))
        out = nearest_codeword(hamming, y, None, 1)
        assert out.kind == KIND_FAILURE
        assert out.detail["best_distance"] == 2

    def test_tie_raises(self):
        cb = Codebook([BitWord.parse("0000"), BitWord.parse("0011")])
        with pytest.raises(AmbiguousCandidateError):
            nearest_codeword(cb, BitWord.parse("0001"), None, 2)

    def test_corrects_all_patterns_within_packing_radius(self, hamming, bch):
        for cb, t in ((hamming, 1), (bch, 3)):
            for c in cb.words:
                for weight in range(t + 1):
                    for idx in combinations(range(1, cb.n + 1), weight):
                        y = flip(c, Support(idx))
                        out = nearest_codeword(cb, y, None, t)
                        assert out.word == c

    def test_punctured_distance(self):
        a = BitWord.parse("10110")
        b = BitWord.parse("00111")
        assert punctured_distance(a, b, frozenset()) == 2
        assert punctured_distance(a, b, frozenset({1})) == 1
        assert punctured_distance(a, b, frozenset({1, 5})) == 0


class TestErasureSet:
    def test_fixed_scheme_positions(self):
        assert ErasureSet.for_fixed_scheme(15).indices == (1, 2, 4, 8)
        assert len(ErasureSet.for_fixed_scheme(7)) == 3

    def test_validation(self):
        with pytest.raises(ValueError):
            ErasureSet((3, 3))
        with pytest.raises(ValueError):
            ErasureSet((0,))


class TestDecodeContext:
    def test_reconstructs_original_codebook(self, hamming):
        bal = mfmb_construct(hamming, RS8, flip_budget=1)
        ctx = DecodeContext.from_balanced(bal)
        assert set(ctx.codebook.words) == set(hamming.words)
        assert ctx.expected_n == 7

    def test_multi_policy_originals_deduplicated(self, hamming):
        bal = mfmb_construct(hamming, RS8, flip_budget=1, policy="multi")
        ctx = DecodeContext.from_balanced(bal)
        assert set(ctx.codebook.words) == set(hamming.words)


class TestFramedDecode:
    def test_ofmb_deletion(self, hamming):
        bal = ofmb_construct(hamming)
        ctx = DecodeContext.from_balanced(bal)
        entry = bal.entries[5]
        received = BitWord.parse(str(entry.balanced)[:4] + str(entry.balanced)[5:])
        out = framed_decode(received, ctx)
        assert out.kind == KIND_DELETION
        assert out.word == entry.balanced and out.original == entry.original

    def test_fixed_intact_word(self, bch):
        bal = fixed_construct(bch, RS16)
        ctx = DecodeContext.from_balanced(bal)
        out = framed_decode(BitWord.parse("111111101111111"), ctx)
        assert out.kind == KIND_SUBSTITUTION
        assert out.original == BitWord.parse("111111111111111")
        assert out.detail["distance"] == 0

    def test_length_out_of_model(self, bch):
        bal = fixed_construct(bch, RS16)
        ctx = DecodeContext.from_balanced(bal)
        out = framed_decode(BitWord.parse("1" * 17), ctx)
        assert out.kind == KIND_FAILURE

    def test_mfmb_intact_balanced_word_maps_back(self, hamming):
        # the balancing flip itself is absorbed as an "error" against the
        # original codebook, so an intact balanced word decodes at distance 1
        bal = mfmb_construct(hamming, RS8, flip_budget=1)
        ctx = DecodeContext.from_balanced(bal)
        entry = bal.entries[4]
        assert len(entry.support) == 1
        out = framed_decode(entry.balanced, ctx)
        assert out.kind == KIND_SUBSTITUTION
        assert out.original == entry.original and out.word == entry.balanced
        assert out.detail["distance"] == 1

    def test_mfmb_substitution_within_guarantee(self, bch):
        # budget 2 on distance 7 guarantees one extra substitution
        bal = mfmb_construct(bch, RS16, flip_budget=2)
        ctx = DecodeContext.from_balanced(bal)
        entry = next(e for e in bal.entries if len(e.support) == 2)
        error_at = next(
            i for i in range(1, 16) if i not in entry.support
        )
        out = framed_decode(flip(entry.balanced, Support.of(error_at)), ctx)
        assert out.kind == KIND_SUBSTITUTION
        assert out.original == entry.original and out.word == entry.balanced

    def test_mfmb_excluded_original_reports_failure(self, hamming):
        bal = mfmb_construct(hamming, RS8, flip_budget=1)
        ctx = DecodeContext.from_balanced(bal)
        excluded = bal.excluded[0]  # in the codebook but not balanced
        out = framed_decode(excluded, ctx)
        assert out.kind == KIND_FAILURE
        assert "balanced image" in out.detail["reason"]

    def test_ofmb_insertion_roundtrip_exhaustive(self, hamming):
        bal = ofmb_construct(hamming)
        ctx = DecodeContext.from_balanced(bal)
        for entry in bal.entries:
            for candidate in one_bit_insertions(entry.balanced):
                out = framed_decode(candidate, ctx)
                assert out.kind == KIND_INSERTION
                assert out.word == entry.balanced
                assert out.original == entry.original

    def test_mbt_paths(self, hamming):
        bal = mbt_construct(hamming, ResidueSystem(12, 0))
        ctx = DecodeContext.from_balanced(bal)
        entry = bal.entries[9]
        # deletion
        received = BitWord.parse(str(entry.balanced)[1:])
        out = framed_decode(received, ctx)
        assert out.kind == KIND_DELETION and out.original == entry.original
        # substitution within the template's own packing radius
        radius = (bal.d_min_balanced - 1) // 2
        if radius >= 1:
            y = flip(entry.balanced, Support.of(3))
            out = framed_decode(y, ctx)
            assert out.kind == KIND_SUBSTITUTION
            assert out.original == entry.original

    def test_unknown_scheme_rejected(self, hamming):
        bal = ofmb_construct(hamming)
        ctx = DecodeContext.from_balanced(bal)
        ctx.scheme = "CRC"
        with pytest.raises(ValueError, match="unknown scheme"):
            framed_decode(BitWord.parse("0000000"), ctx)


class TestDecodingRouteEquivalence:
    """Decoding on the original code at full radius must agree with decoding
    on the balanced words at the reduced radius, inside the guarantee region.
    """

    def test_ofmb_bch_substitution_routes_agree(self, bch):
        bal = ofmb_construct(bch)
        ctx = DecodeContext.from_balanced(bal)
        balanced_book = Codebook(bal.balanced_words())
        reduced_radius = (bch.d_min - 2 * 1 - 1) // 2  # one balancing flip
        for entry in bal.entries:
            for idx in combinations(range(1, 16), reduced_radius):
                y = flip(entry.balanced, Support(idx))
                via_original = framed_decode(y, ctx)
                via_balanced = nearest_codeword(balanced_book, y, None, reduced_radius)
                assert via_original.kind == KIND_SUBSTITUTION
                assert via_original.word == via_balanced.word == entry.balanced
                assert via_original.original == entry.original
