"""Bundled reference codes and their expected balancing outcomes.

``FIXTURE_WORDS`` holds the two stock substitution-correcting codes used
throughout the tests and the ``reproduce`` command: a (7, 16, 3) Hamming
code and a (15, 32, 7) primitive BCH code, both given as explicit word
lists so nothing depends on a particular generator basis or bit order.

The remaining tables are frozen expected values for those fixtures:
moments, minimal flip supports, and balanced words, plus the parameters of
the stock bound-comparison sweep. The ``reproduce`` subcommand diffs live
computations against these tables.
"""

HAMMING_7_16_3 = "hamming_7_16_3"
BCH_15_32_7 = "bch_15_32_7"

FIXTURE_WORDS = {
    HAMMING_7_16_3: (
        "0000000",
        "1001110",
        "1011000",
        "1100010",
        "1010011",
        "0001011",
        "1110100",
        "0101100",
        "0011101",
        "0100111",
        "0110001",
        "1111111",
        "1000101",
        "0010110",
        "1101001",
        "0111010",
    ),
    BCH_15_32_7: (
        "000000000000000",
        "100001010011011",
        "010001111010110",
        "110000101001101",
        "001000111101011",
        "101001101110000",
        "011001000111101",
        "111000010100110",
        "000101001101110",
        "100100011110101",
        "010100110111000",
        "110101100100011",
        "001101110000101",
        "101100100011110",
        "011100001010011",
        "111101011001000",
        "000010100110111",
        "100011110101100",
        "010011011100001",
        "110010001111010",
        "001010011011100",
        "101011001000111",
        "011011100001010",
        "111010110010001",
        "000111101011001",
        "100110111000010",
        "010110010001111",
        "110111000010100",
        "001111010110010",
        "101110000101001",
        "011110101100100",
        "111111111111111",
    ),
}

# Expected balancing data for the Hamming fixture at modulus 8, target 0:
# (word, moment, minimal flip supports). Rows with two single-flip options
# list both; the three rows needing two flips list the one chosen in the
# reference table.
HAMMING_BALANCE_ROWS = (
    ("0000000", 0, ((),)),
    ("1001110", 0, ((),)),
    ("1011000", 0, ((),)),
    ("1100010", 1, ((1,), (7,))),
    ("1010011", 1, ((1,),)),
    ("0001011", 1, ((2, 5),)),
    ("1110100", 3, ((3,),)),
    ("0101100", 3, ((6, 7),)),
    ("0011101", 3, ((3,),)),
    ("0100111", 4, ((4,),)),
    ("0110001", 4, ((4,),)),
    ("1111111", 4, ((4,),)),
    ("1000101", 5, ((3,), (5,))),
    ("0010110", 6, ((2,), (6,))),
    ("1101001", 6, ((4, 6),)),
    ("0111010", 7, ((1,),)),
)

# Words of the Hamming fixture whose minimal balancing needs two flips.
HAMMING_TWO_FLIP_WORDS = ("0001011", "0101100", "1101001")

# Variant encoding of the Hamming fixture: the 2-flip words are dropped and
# every minimal single-flip option of the remaining words is admitted, one
# (word, moment, support) row each.
HAMMING_VARIANT_ROWS = (
    ("0000000", 0, ()),
    ("1001110", 0, ()),
    ("1011000", 0, ()),
    ("1100010", 1, (1,)),
    ("1100010", 1, (7,)),
    ("1010011", 1, (1,)),
    ("1110100", 3, (3,)),
    ("0011101", 3, (3,)),
    ("0100111", 4, (4,)),
    ("0110001", 4, (4,)),
    ("1111111", 4, (4,)),
    ("1000101", 5, (3,)),
    ("1000101", 5, (5,)),
    ("0010110", 6, (2,)),
    ("0010110", 6, (6,)),
    ("0111010", 7, (1,)),
)

# The 16 balanced words produced by the variant rows above (moment 0 mod 8).
HAMMING_BALANCED_SET = (
    "0000000",
    "1001110",
    "1011000",
    "0100010",
    "1100011",
    "0010011",
    "1100100",
    "0001101",
    "0101111",
    "0111001",
    "1110111",
    "1010101",
    "1000001",
    "0110110",
    "0010100",
    "1111010",
)

# Expected balancing data for the BCH fixture at modulus 16, target 0:
# (word, moment, variable-index balanced word, fixed-index balanced word).
# The variable-index column uses a minimal flip set anywhere in the word;
# the fixed-index column flips only within positions {1, 2, 4, 8}.
BCH_BALANCE_ROWS = (
    ("000000000000000", 0, "000000000000000", "000000000000000"),
    ("100001010011011", 3, "100001010011111", "010101000011011"),
    ("010001111010110", 6, "010000111010110", "000101101010110"),
    ("110000101001101", 11, "110010101001101", "000000111001101"),
    ("001000111101011", 14, "011000111101011", "011000111101011"),
    ("101001101110000", 15, "100101101110000", "011001101110000"),
    ("011001000111101", 8, "011001010111101", "011001010111101"),
    ("111000010100110", 3, "110000010100110", "001000010100110"),
    ("000101001101110", 4, "000001001101110", "000001001101110"),
    ("100100011110101", 7, "110100010110101", "010100001110101"),
    ("010100110111000", 6, "110100010111000", "000000110111000"),
    ("110101100100011", 11, "110111100100011", "000101110100011"),
    ("001101110000101", 8, "001101100000101", "001101100000101"),
    ("101100100011110", 1, "001100100011110", "001100100011110"),
    ("011100001010011", 10, "011101001010011", "001100011010011"),
    ("111101011001000", 13, "111101001011000", "011001001001000"),
    ("000010100110111", 11, "000010100100111", "100110100110111"),
    ("100011110101100", 14, "110011110101100", "110011110101100"),
    ("010011011100001", 7, "110011001100001", "110011001100001"),
    ("110010001111010", 0, "110010001111010", "110010001111010"),
    ("001010011011100", 13, "001010011011000", "111010011011100"),
    ("101011001000111", 2, "101110001000111", "111111011000111"),
    ("011011100001010", 1, "011011100001011", "101011100001010"),
    ("111010110010001", 4, "111010110011001", "111110100010001"),
    ("000111101011001", 5, "000101101011001", "110111111011001"),
    ("100110111000010", 0, "100110111000010", "100110111000010"),
    ("010110010001111", 9, "010110110001111", "100110000001111"),
    ("110111000010100", 10, "010111100010100", "100111010010100"),
    ("001111010110010", 13, "001011110110010", "111111010110010"),
    ("101110000101001", 2, "101110000101011", "111010000101001"),
    ("011110101100100", 5, "011100101100100", "101010101100100"),
    ("111111111111111", 8, "111111101111111", "111111101111111"),
)

# Stock bound-comparison sweep: resulting length 265 (systematic-template
# inner length 256), swept over minimum distances 2..130. ``claimed_region``
# is the published range of distances where the one-flip bound is said to be
# at least the template bound; the reproduction diffs the exact winners
# against it.
FIG_SWEEP = {
    "n": 265,
    "d_lo": 2,
    "d_hi": 130,
    "inner_length": 256,
    "claimed_region": (20, 110),
}
