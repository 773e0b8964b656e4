"""Stress testing of masked-word predictions against a frequency-banded lexicon.

The package evaluates top-k fill-mask predictions for sentence pairs that
express the same content in a canonical and a non-canonical word order.
Results are aggregated into per-domain comparison tables, frequency-band
profiles, an out-of-vocabulary census and deterministic reports.
"""

from lexstress.lexicon import (
    Band,
    BandingMode,
    BandThresholds,
    Lexicon,
    LexiconFormatError,
    band_marker,
    build_lexicon,
)

__all__ = [
    "Band",
    "BandingMode",
    "BandThresholds",
    "Lexicon",
    "LexiconFormatError",
    "band_marker",
    "build_lexicon",
]

__version__ = "0.1.0"
