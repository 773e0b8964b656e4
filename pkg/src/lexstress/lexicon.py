"""Frequency-banded lexicon built from a corpus wordform frequency list.

A lexicon maps each wordform surface to an occurrence count and a dense
frequency rank (1 = most frequent).  Surfaces are NFC-normalized.  Every
surface, looked up through :meth:`Lexicon.band_of`, falls into exactly one
of five frequency bands:

* ``High``     - rank within the high-frequency cutoff (default 10000),
* ``Low``      - rank within the core vocabulary (default 50000),
* ``VeryLow``  - beyond the core vocabulary with a count at or above the
  very-low floor (default 4),
* ``Rare``     - present but with a count below the very-low floor,
* ``Unknown``  - absent from the lexicon altogether.

Two banding modes are supported.  ``RankBased`` (the default) applies the
rank cutoffs above.  ``CountBased`` replaces the first rule with a raw
count comparison: a surface whose count reaches ``high_count_floor``
(default 10000) is ``High`` regardless of rank; the remaining rules are
unchanged.

Lookups are case-sensitive with a single lowercase retry, so a
sentence-initial capitalized form falls back onto its lowercase entry when
no dedicated capitalized entry exists.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Iterable


class Band(Enum):
    """Frequency band of a surface relative to a lexicon."""

    HIGH = "High"
    LOW = "Low"
    VERY_LOW = "VeryLow"
    RARE = "Rare"
    UNKNOWN = "Unknown"


_BAND_MARKERS = {
    Band.HIGH: "°",
    Band.LOW: "*",
    Band.VERY_LOW: "**",
    Band.RARE: "***",
    Band.UNKNOWN: "***<ukn>",
}

# Rarity position used by monotonicity checks: High is least rare.
_BAND_RARITY = {
    Band.HIGH: 0,
    Band.LOW: 1,
    Band.VERY_LOW: 2,
    Band.RARE: 3,
    Band.UNKNOWN: 4,
}


def band_marker(band: Band) -> str:
    """Return the print marker for a band (degree sign through ***<ukn>)."""
    return _BAND_MARKERS[band]


def band_rarity(band: Band) -> int:
    """Return an integer rarity position; higher means rarer."""
    return _BAND_RARITY[band]


class BandingMode(Enum):
    RANK_BASED = "rank"
    COUNT_BASED = "count"


class LexiconFormatError(ValueError):
    """Raised for malformed frequency-list or snapshot input."""


@dataclass(frozen=True)
class BandThresholds:
    """Cutoffs that control band assignment.

    Attributes:
        high_rank_cutoff: Highest rank still considered high frequency.
        core_vocab_size: Highest rank inside the core vocabulary.
        low_count_floor: Lowest occurrence count admitted to the core list;
            informational for full-scale lists, not used in band rules.
        verylow_count_floor: Minimum count separating VeryLow from Rare.
        high_count_floor: Minimum count granting High in count-based mode.
    """

    high_rank_cutoff: int = 10000
    core_vocab_size: int = 50000
    low_count_floor: int = 1377
    verylow_count_floor: int = 4
    high_count_floor: int = 10000

    def __post_init__(self) -> None:
        for name in (
            "high_rank_cutoff",
            "core_vocab_size",
            "low_count_floor",
            "verylow_count_floor",
            "high_count_floor",
        ):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 1:
                raise ValueError(f"{name} must be a positive integer, got {value!r}")
        if self.high_rank_cutoff >= self.core_vocab_size:
            raise ValueError(
                "high_rank_cutoff must be smaller than core_vocab_size "
                f"({self.high_rank_cutoff} >= {self.core_vocab_size})"
            )
        if self.verylow_count_floor > self.low_count_floor:
            raise ValueError(
                "verylow_count_floor must not exceed low_count_floor "
                f"({self.verylow_count_floor} > {self.low_count_floor})"
            )


@dataclass(frozen=True)
class LexiconEntry:
    surface: str
    count: int
    rank: int


def _normalize(surface: str) -> str:
    return unicodedata.normalize("NFC", surface)


def _has_letter(surface: str) -> bool:
    return any(ch.isalpha() for ch in surface)


def _is_url_shaped(surface: str) -> bool:
    lowered = surface.lower()
    return "://" in lowered or lowered.startswith("www.")


@dataclass
class Lexicon:
    """Ranked frequency lexicon with band lookups.

    Entries are keyed by NFC surface.  ``band_of`` and ``lookup`` apply the
    single lowercase retry; ``entries`` access is exact.
    """

    thresholds: BandThresholds
    mode: BandingMode = BandingMode.RANK_BASED
    entries: dict[str, LexiconEntry] = field(default_factory=dict)
    dropped: int = 0

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, surface: str) -> bool:
        return self.lookup(surface) is not None

    def lookup(self, surface: str) -> LexiconEntry | None:
        """Exact NFC lookup with one lowercase retry on a miss."""
        if not surface:
            return None
        key = _normalize(surface)
        entry = self.entries.get(key)
        if entry is None:
            lowered = key.lower()
            if lowered != key:
                entry = self.entries.get(lowered)
        return entry

    def band_of(self, surface: str) -> Band:
        """Assign the frequency band of ``surface`` under the active mode.

        Args:
            surface: Raw surface; normalized to NFC before lookup.

        Returns:
            One of the five bands; ``Band.UNKNOWN`` when both the exact and
            the lowercase-retried lookup miss.
        """
        entry = self.lookup(surface)
        if entry is None:
            return Band.UNKNOWN
        if self.mode is BandingMode.COUNT_BASED:
            if entry.count >= self.thresholds.high_count_floor:
                return Band.HIGH
        else:
            if entry.rank <= self.thresholds.high_rank_cutoff:
                return Band.HIGH
        if entry.rank <= self.thresholds.core_vocab_size:
            return Band.LOW
        if entry.count >= self.thresholds.verylow_count_floor:
            return Band.VERY_LOW
        return Band.RARE

    def marker_of(self, surface: str) -> str:
        return band_marker(self.band_of(surface))

    def is_legal_word(self, surface: str) -> bool:
        """True when the surface is present in the lexicon in any band."""
        return self.lookup(surface) is not None


def _parse_count(raw: str, line_no: int) -> int:
    try:
        count = int(raw)
    except ValueError:
        raise LexiconFormatError(
            f"line {line_no}: count field is not an integer: {raw!r}"
        ) from None
    if count < 0:
        raise LexiconFormatError(f"line {line_no}: negative count {count}")
    return count


def build_lexicon(
    lines: Iterable[str],
    thresholds: BandThresholds | None = None,
    mode: BandingMode = BandingMode.RANK_BASED,
) -> Lexicon:
    """Build a ranked lexicon from raw ``surface<TAB>count`` lines.

    Cleaning: surfaces without a single letter (pure numbers, bare
    punctuation) and URL-shaped surfaces (containing ``://`` or starting
    with ``www.``) are dropped and tallied in ``Lexicon.dropped``.  Blank
    lines are skipped.

    Ranking: entries are sorted by descending count, ties broken by
    lexicographic surface order, and assigned dense ranks starting at 1.

    Raises:
        LexiconFormatError: on a line without exactly two tab-separated
            fields, an empty surface, a non-integer or negative count, or
            a surface occurring twice (the message names both lines).
    """
    if thresholds is None:
        thresholds = BandThresholds()
    seen: dict[str, tuple[int, int]] = {}
    dropped = 0
    for line_no, raw_line in enumerate(lines, start=1):
        line = raw_line.rstrip("\r\n")
        if not line.strip():
            continue
        fields = line.split("\t")
        if len(fields) != 2:
            raise LexiconFormatError(
                f"line {line_no}: expected 2 tab-separated fields, got {len(fields)}"
            )
        surface = _normalize(fields[0])
        if not surface:
            raise LexiconFormatError(f"line {line_no}: empty surface")
        count = _parse_count(fields[1], line_no)
        if not _has_letter(surface) or _is_url_shaped(surface):
            dropped += 1
            continue
        if surface in seen:
            first_line = seen[surface][1]
            raise LexiconFormatError(
                f"duplicate surface {surface!r} on lines {first_line} and {line_no}"
            )
        seen[surface] = (count, line_no)

    ordered = sorted(seen.items(), key=lambda item: (-item[1][0], item[0]))
    entries = {
        surface: LexiconEntry(surface=surface, count=count_line[0], rank=rank)
        for rank, (surface, count_line) in enumerate(ordered, start=1)
    }
    return Lexicon(thresholds=thresholds, mode=mode, entries=entries, dropped=dropped)


def save_lexicon(lexicon: Lexicon, path: str | Path) -> None:
    """Write the ranked snapshot as ``surface<TAB>count<TAB>rank`` lines."""
    ordered = sorted(lexicon.entries.values(), key=lambda e: e.rank)
    text = "".join(f"{e.surface}\t{e.count}\t{e.rank}\n" for e in ordered)
    Path(path).write_text(text, encoding="utf-8", newline="\n")


def load_lexicon(
    path: str | Path,
    thresholds: BandThresholds | None = None,
    mode: BandingMode = BandingMode.RANK_BASED,
) -> Lexicon:
    """Load a ranked snapshot, validating rank contiguity and count order."""
    if thresholds is None:
        thresholds = BandThresholds()
    entries: dict[str, LexiconEntry] = {}
    previous_count: int | None = None
    expected_rank = 1
    with open(path, encoding="utf-8") as handle:
        for line_no, raw_line in enumerate(handle, start=1):
            line = raw_line.rstrip("\r\n")
            if not line.strip():
                continue
            fields = line.split("\t")
            if len(fields) != 3:
                raise LexiconFormatError(
                    f"line {line_no}: expected 3 tab-separated fields, got {len(fields)}"
                )
            surface = _normalize(fields[0])
            if not surface:
                raise LexiconFormatError(f"line {line_no}: empty surface")
            count = _parse_count(fields[1], line_no)
            try:
                rank = int(fields[2])
            except ValueError:
                raise LexiconFormatError(
                    f"line {line_no}: rank field is not an integer: {fields[2]!r}"
                ) from None
            if rank != expected_rank:
                raise LexiconFormatError(
                    f"line {line_no}: expected rank {expected_rank}, got {rank}"
                )
            if surface in entries:
                raise LexiconFormatError(
                    f"line {line_no}: duplicate surface {surface!r} in snapshot"
                )
            if previous_count is not None and count > previous_count:
                raise LexiconFormatError(
                    f"line {line_no}: counts must be non-increasing by rank"
                )
            entries[surface] = LexiconEntry(surface=surface, count=count, rank=rank)
            previous_count = count
            expected_rank += 1
    return Lexicon(thresholds=thresholds, mode=mode, entries=entries)
