import random

import pytest

from momentflip.bitword import (
    BitWord,
    ResidueSystem,
    Support,
    flip,
    flip_delta,
    hamming_distance,
    moment,
    support_between,
)

from conftest import random_word


class TestBitWord:
    def test_parse_and_text_roundtrip(self):
        w = BitWord.parse("1100010")
        assert w.n == 7
        assert str(w) == "1100010"
        assert w.bit(1) == 1 and w.bit(7) == 0

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            BitWord.parse("")
        with pytest.raises(ValueError):
            BitWord.parse("01x0")
        with pytest.raises(ValueError):
            BitWord((0, 2, 1))
        with pytest.raises(IndexError):
            BitWord.parse("01").bit(3)

    def test_hashable_and_immutable(self):
        a = BitWord.parse("0101")
        b = BitWord.parse("0101")
        assert a == b and hash(a) == hash(b)
        assert len({a, b}) == 1


class TestResidueSystem:
    def test_validation(self):
        ResidueSystem(8, 7)
        with pytest.raises(ValueError):
            ResidueSystem(0, 0)
        with pytest.raises(ValueError):
            ResidueSystem(8, 8)
        with pytest.raises(ValueError):
            ResidueSystem(8, -1)


class TestSupport:
    def test_sorted_and_deduped(self):
        s = Support.of(7, 1, 3)
        assert s.indices == (1, 3, 7)
        assert 3 in s and len(s) == 3
        with pytest.raises(ValueError):
            Support.of(2, 2)
        with pytest.raises(ValueError):
            Support.of(0)


class TestMoment:
    @pytest.mark.parametrize(
        "text,m,expected",
        [
            ("0000000", 8, 0),
            ("1100010", 8, 1),
            ("111111111111111", 16, 8),
            ("0101", 5, 1),
        ],
    )
    def test_examples(self, text, m, expected):
        assert moment(BitWord.parse(text), ResidueSystem(m, 0)) == expected

    def test_always_in_range(self):
        rng = random.Random(11)
        for _ in range(200):
            n = rng.randint(1, 40)
            m = rng.randint(1, 100)
            r = moment(random_word(rng, n), ResidueSystem(m, 0))
            assert 0 <= r < m

    def test_exact_arithmetic_at_large_length(self):
        # all-ones word of length 2^16: the raw sum n(n+1)/2 must not wrap
        n = 1 << 16
        w = BitWord((1,) * n)
        m = n + 1
        assert moment(w, ResidueSystem(m, 0)) == (n * (n + 1) // 2) % m


class TestFlip:
    def test_example(self):
        assert str(flip(BitWord.parse("1100010"), Support.of(1))) == "0100010"

    def test_empty_support_is_identity(self):
        w = BitWord.parse("10101")
        assert flip(w, Support.of()) == w

    def test_involution(self):
        rng = random.Random(5)
        for _ in range(100):
            n = rng.randint(2, 24)
            w = random_word(rng, n)
            s = Support(tuple(rng.sample(range(1, n + 1), rng.randint(0, n))))
            assert flip(flip(w, s), s) == w

    def test_out_of_range(self):
        with pytest.raises(IndexError):
            flip(BitWord.parse("01"), Support.of(3))


class TestFlipDelta:
    @pytest.mark.parametrize(
        "text,i,m,expected",
        [
            ("0001011", 2, 8, 2),
            ("0001011", 6, 8, 2),
            ("1111111", 7, 8, 1),
        ],
    )
    def test_examples(self, text, i, m, expected):
        assert flip_delta(BitWord.parse(text), i, ResidueSystem(m, 0)) == expected

    def test_matches_recomputed_moment(self):
        rng = random.Random(7)
        for _ in range(200):
            n = rng.randint(1, 30)
            m = rng.randint(n + 1, 2 * n + 4)
            rs = ResidueSystem(m, 0)
            w = random_word(rng, n)
            i = rng.randint(1, n)
            got = flip_delta(w, i, rs)
            assert got == (moment(flip(w, Support.of(i)), rs) - moment(w, rs)) % m

    def test_antisymmetric_under_reflip(self):
        rng = random.Random(9)
        for _ in range(200):
            n = rng.randint(1, 30)
            m = rng.randint(2, 50)
            rs = ResidueSystem(m, 0)
            w = random_word(rng, n)
            i = rng.randint(1, n)
            flipped = flip(w, Support.of(i))
            assert (flip_delta(w, i, rs) + flip_delta(flipped, i, rs)) % m == 0


class TestHammingDistance:
    @pytest.mark.parametrize(
        "a,b,expected",
        [
            ("0000000", "0000000", 0),
            ("1100010", "0100010", 1),
            ("1001110", "1011000", 3),
        ],
    )
    def test_examples(self, a, b, expected):
        assert hamming_distance(BitWord.parse(a), BitWord.parse(b)) == expected

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            hamming_distance(BitWord.parse("01"), BitWord.parse("011"))

    def test_equals_support_size(self):
        rng = random.Random(3)
        for _ in range(100):
            n = rng.randint(2, 20)
            w = random_word(rng, n)
            s = Support(tuple(rng.sample(range(1, n + 1), rng.randint(0, n))))
            assert hamming_distance(w, flip(w, s)) == len(s)
            assert support_between(w, flip(w, s)) == s


def test_batch_flip_moment_equals_incremental_deltas():
    rng = random.Random(21)
    for _ in range(200):
        n = rng.randint(2, 24)
        m = rng.randint(n + 1, 3 * n)
        rs = ResidueSystem(m, 0)
        w = random_word(rng, n)
        s = Support(tuple(rng.sample(range(1, n + 1), rng.randint(0, n))))
        total = moment(w, rs)
        current = w
        for i in s:
            total = (total + flip_delta(current, i, rs)) % m
            current = flip(current, Support.of(i))
        assert current == flip(w, s)
        assert total == moment(flip(w, s), rs)
