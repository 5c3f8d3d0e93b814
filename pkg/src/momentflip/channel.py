"""Seeded synchronization-error channel and a Monte Carlo decode harness.

A frame suffers at most one insertion or deletion (that is the regime the
single-edit guarantees cover, so multi-event frames are rejected by
construction rather than sampled), plus independent per-bit substitutions
applied to the post-edit word. Every random draw is driven by a seed, so a
replay with the same seed reproduces the same events, and per-trial seeds
are a pure function of the master seed and the trial index, which makes
aggregates identical for any worker count.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional, Union

import numpy as np

from .bitword import BitWord
from .decode import DecodeContext, DecodeError, framed_decode

FORCED_NONE = "none"
FORCED_DELETION = "one_deletion"
FORCED_INSERTION = "one_insertion"
FORCED_SUBSTITUTIONS = "k_substitutions"
FORCED_EVENTS = (FORCED_NONE, FORCED_DELETION, FORCED_INSERTION, FORCED_SUBSTITUTIONS)

SeedLike = Union[int, np.random.SeedSequence, np.random.Generator]


@dataclass(frozen=True)
class ChannelConfig:
    """Per-frame error model.

    ``p_del``/``p_ins`` are per-frame probabilities of a single deletion or
    insertion; ``p_sub`` is the per-bit substitution probability. A forced
    event overrides the probabilistic draw (``forced_subs`` gives the exact
    substitution count for ``k_substitutions``). ``sub_avoid`` lists 1-based
    positions never substituted, for exercising erasure-scheme guarantees.
    """

    p_sub: float = 0.0
    p_del: float = 0.0
    p_ins: float = 0.0
    forced_event: str = FORCED_NONE
    forced_subs: int = 0
    sub_avoid: tuple[int, ...] = ()
    max_sync_events_per_frame: int = 1

    def __post_init__(self) -> None:
        for name in ("p_sub", "p_del", "p_ins"):
            p = getattr(self, name)
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1], got {p}")
        if self.p_del + self.p_ins > 1.0:
            raise ValueError("p_del + p_ins must not exceed 1")
        if self.forced_event not in FORCED_EVENTS:
            raise ValueError(f"unknown forced event {self.forced_event!r}")
        if self.forced_subs < 0:
            raise ValueError("forced_subs must be >= 0")
        if self.forced_subs and self.forced_event != FORCED_SUBSTITUTIONS:
            raise ValueError("forced_subs needs forced_event='k_substitutions'")
        if self.max_sync_events_per_frame != 1:
            raise ValueError("only one synchronization event per frame is modeled")


@dataclass(frozen=True)
class EventLog:
    """Ground truth of one transmission."""

    sync: str  # "none" | "deletion" | "insertion"
    position: Optional[int] = None
    inserted_bit: Optional[int] = None
    substituted: tuple[int, ...] = ()

    @property
    def label(self) -> str:
        """Partition key for the statistics: sync kind plus substitutions."""
        if self.substituted:
            return "substitutions" if self.sync == "none" else f"{self.sync}+substitutions"
        return self.sync


def _as_rng(seed: SeedLike) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def transmit(x: BitWord, cfg: ChannelConfig, seed: SeedLike) -> tuple[BitWord, EventLog]:
    """Push one frame through the channel and report what happened.

    Order of operations: the synchronization event first (uniform position,
    uniform inserted bit), then substitutions on the post-edit word.
    """
    rng = _as_rng(seed)
    bits = list(x.bits)
    sync = "none"
    position: Optional[int] = None
    inserted: Optional[int] = None
    if cfg.forced_event == FORCED_DELETION:
        sync = "deletion"
    elif cfg.forced_event == FORCED_INSERTION:
        sync = "insertion"
    elif cfg.forced_event == FORCED_NONE and (cfg.p_del > 0 or cfg.p_ins > 0):
        u = rng.random()
        if u < cfg.p_del:
            sync = "deletion"
        elif u < cfg.p_del + cfg.p_ins:
            sync = "insertion"
    if sync == "deletion":
        if len(bits) < 2:
            raise ValueError("frame too short to sustain a deletion")
        position = int(rng.integers(1, len(bits) + 1))
        del bits[position - 1]
    elif sync == "insertion":
        position = int(rng.integers(1, len(bits) + 2))
        inserted = int(rng.integers(0, 2))
        bits.insert(position - 1, inserted)
    avoid = set(cfg.sub_avoid)
    allowed = [i for i in range(1, len(bits) + 1) if i not in avoid]
    subs: list[int] = []
    if cfg.forced_event == FORCED_SUBSTITUTIONS and cfg.forced_subs > 0:
        if cfg.forced_subs > len(allowed):
            raise ValueError(
                f"cannot place {cfg.forced_subs} substitutions on "
                f"{len(allowed)} allowed positions"
            )
        picked = rng.choice(np.array(allowed), size=cfg.forced_subs, replace=False)
        subs = sorted(int(i) for i in picked)
    elif cfg.p_sub > 0:
        subs = [i for i in allowed if rng.random() < cfg.p_sub]
    for i in subs:
        bits[i - 1] ^= 1
    return BitWord(tuple(bits)), EventLog(sync, position, inserted, tuple(subs))


@dataclass
class EventTally:
    trials: int = 0
    successes: int = 0
    failures: int = 0

    def add(self, ok: bool) -> None:
        self.trials += 1
        if ok:
            self.successes += 1
        else:
            self.failures += 1

    def merged(self, other: EventTally) -> EventTally:
        return EventTally(
            self.trials + other.trials,
            self.successes + other.successes,
            self.failures + other.failures,
        )

    @property
    def frame_error_rate(self) -> float:
        return self.failures / self.trials if self.trials else 0.0


@dataclass
class ChannelStats:
    """Aggregate of seeded trials, partitioned by injected event kind."""

    trials: int = 0
    by_event: dict[str, EventTally] = field(default_factory=dict)

    def record(self, label: str, ok: bool) -> None:
        self.trials += 1
        self.by_event.setdefault(label, EventTally()).add(ok)

    def merged(self, other: ChannelStats) -> ChannelStats:
        out = ChannelStats(trials=self.trials + other.trials)
        for label in set(self.by_event) | set(other.by_event):
            a = self.by_event.get(label, EventTally())
            b = other.by_event.get(label, EventTally())
            out.by_event[label] = a.merged(b)
        return out

    @property
    def failures(self) -> int:
        return sum(t.failures for t in self.by_event.values())

    @property
    def successes(self) -> int:
        return sum(t.successes for t in self.by_event.values())

    def to_json_dict(self) -> dict:
        return {
            "trials": self.trials,
            "failures": self.failures,
            "by_event": {
                label: {
                    "trials": tally.trials,
                    "successes": tally.successes,
                    "failures": tally.failures,
                    "frame_error_rate": tally.frame_error_rate,
                }
                for label, tally in sorted(self.by_event.items())
            },
        }


def _trial_rng(master_seed: int, trial: int) -> np.random.Generator:
    # splittable scheme: the per-trial stream depends only on (seed, index)
    return np.random.default_rng(np.random.SeedSequence(master_seed, spawn_key=(trial,)))


def monte_carlo(
    ctx: DecodeContext,
    cfg: ChannelConfig,
    trials: int,
    master_seed: int,
    workers: int = 1,
) -> ChannelStats:
    """Seeded end-to-end evaluation of a balanced code over the channel.

    Each trial draws a balanced word uniformly, transmits it, decodes the
    frame, and compares against the ground truth: success means the decoder
    reproduced both the balanced word and its original exactly. Decode
    errors (no candidate, ambiguity) count as failures.
    """
    if ctx.balanced is None:
        raise ValueError("monte_carlo needs a context with a balanced code")
    if trials < 0:
        raise ValueError("trials must be >= 0")
    entries = ctx.balanced.entries

    def run_range(lo: int, hi: int) -> ChannelStats:
        stats = ChannelStats()
        for t in range(lo, hi):
            rng = _trial_rng(master_seed, t)
            entry = entries[int(rng.integers(0, len(entries)))]
            received, log = transmit(entry.balanced, cfg, rng)
            try:
                outcome = framed_decode(received, ctx)
                ok = (
                    outcome.ok
                    and outcome.word == entry.balanced
                    and outcome.original == entry.original
                )
            except DecodeError:
                ok = False
            stats.record(log.label, ok)
        return stats

    if workers <= 1 or trials == 0:
        return run_range(0, trials)
    chunk = -(-trials // workers)
    ranges = [(lo, min(lo + chunk, trials)) for lo in range(0, trials, chunk)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(lambda r: run_range(*r), ranges))
    out = ChannelStats()
    for part in parts:
        out = out.merged(part)
    return out
