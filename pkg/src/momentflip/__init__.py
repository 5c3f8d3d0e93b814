"""Bit-flip moment balancing toolkit.

Converts substitution-error-correcting block codes into codes that also
correct a single insertion or deletion, by flipping a few bits of each
codeword so its first-order moment lands in a fixed residue class. Ships
the variable-index, one-flip, and fixed-index flip schemes, the systematic
balancing-bit template, moment-class decoders, a seeded synchronization
channel, and exact cardinality bound calculators.
"""

__version__ = "0.1.0"

from .balance import (
    POLICY_MULTI,
    POLICY_SINGLE,
    SCHEME_FIXED,
    SCHEME_MBT,
    SCHEME_MFMB,
    SCHEME_OFMB,
    BalancedCode,
    BalanceEntry,
    FlipSearchResult,
    fixed_construct,
    fixed_index_balance,
    fixed_indices,
    mbt_construct,
    mbt_encode,
    mbt_extract,
    mfmb_construct,
    min_flip_sets,
    ofmb_construct,
    one_flip_classes,
)
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
from .bounds import (
    AsymptoticReport,
    BoundValue,
    SweepRow,
    asymptotic_report,
    bound_sweep,
    combined_bound,
    gv_bound,
    inner_length,
    mbt_bound,
    ofmb_bound,
    volume,
)
from .channel import ChannelConfig, ChannelStats, EventLog, monte_carlo, transmit
from .codebook import (
    Codebook,
    CorrectabilityVerdict,
    builtin_fixture,
    gv_greedy,
    load_codebook,
    min_distance,
    single_edit_correctable,
)
from .decode import (
    AmbiguousCandidateError,
    DecodeContext,
    DecodeError,
    DecodeOutcome,
    ErasureSet,
    NoCandidateError,
    framed_decode,
    nearest_codeword,
    vt_delete,
    vt_reinsert,
)

__all__ = [
    "__version__",
    "AmbiguousCandidateError",
    "AsymptoticReport",
    "BalanceEntry",
    "BalancedCode",
    "BitWord",
    "BoundValue",
    "ChannelConfig",
    "ChannelStats",
    "Codebook",
    "CorrectabilityVerdict",
    "DecodeContext",
    "DecodeError",
    "DecodeOutcome",
    "ErasureSet",
    "EventLog",
    "FlipSearchResult",
    "NoCandidateError",
    "POLICY_MULTI",
    "POLICY_SINGLE",
    "ResidueSystem",
    "SCHEME_FIXED",
    "SCHEME_MBT",
    "SCHEME_MFMB",
    "SCHEME_OFMB",
    "Support",
    "SweepRow",
    "asymptotic_report",
    "bound_sweep",
    "builtin_fixture",
    "combined_bound",
    "fixed_construct",
    "fixed_index_balance",
    "fixed_indices",
    "flip",
    "flip_delta",
    "framed_decode",
    "gv_bound",
    "gv_greedy",
    "hamming_distance",
    "inner_length",
    "load_codebook",
    "mbt_bound",
    "mbt_construct",
    "mbt_encode",
    "mbt_extract",
    "mfmb_construct",
    "min_distance",
    "min_flip_sets",
    "moment",
    "monte_carlo",
    "nearest_codeword",
    "ofmb_bound",
    "ofmb_construct",
    "one_flip_classes",
    "single_edit_correctable",
    "support_between",
    "transmit",
    "volume",
    "vt_delete",
    "vt_reinsert",
]
