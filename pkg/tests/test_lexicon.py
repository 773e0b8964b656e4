from __future__ import annotations

import unicodedata

import pytest

from lexstress.lexicon import (
    Band,
    BandingMode,
    BandThresholds,
    LexiconFormatError,
    band_marker,
    band_rarity,
    build_lexicon,
    load_lexicon,
    save_lexicon,
)

SMALL = BandThresholds(
    high_rank_cutoff=2,
    core_vocab_size=4,
    low_count_floor=10,
    verylow_count_floor=4,
    high_count_floor=100,
)


def small_lexicon(mode: BandingMode = BandingMode.RANK_BASED):
    lines = [
        "alto\t500",
        "basso\t200",
        "terzo\t40",
        "quarto\t20",
        "quinto\t5",
        "sesto\t3",
    ]
    return build_lexicon(lines, thresholds=SMALL, mode=mode)


def test_build_assigns_dense_ranks_by_count():
    lex = small_lexicon()
    assert [lex.entries[s].rank for s in ("alto", "basso", "terzo")] == [1, 2, 3]
    assert len(lex) == 6
    assert lex.dropped == 0


def test_build_breaks_count_ties_lexicographically():
    lex = build_lexicon(["zeta\t7", "beta\t7", "alfa\t7"], thresholds=SMALL)
    assert [e.surface for e in sorted(lex.entries.values(), key=lambda e: e.rank)] == [
        "alfa",
        "beta",
        "zeta",
    ]


def test_build_drops_junk_surfaces():
    """Letterless and URL-shaped surfaces are cleaned out, not ranked."""
    lines = ["casa\t10", "1987\t90", "www.esempio.it\t80", "...\t70", "http://a.b/c\t60"]
    lex = build_lexicon(lines, thresholds=SMALL)
    assert len(lex) == 1
    assert lex.dropped == 4
    assert lex.entries["casa"].rank == 1


def test_build_skips_blank_lines():
    lex = build_lexicon(["casa\t10", "", "   ", "mare\t5"], thresholds=SMALL)
    assert len(lex) == 2


def test_build_duplicate_surface_names_both_lines():
    with pytest.raises(LexiconFormatError, match=r"lines 1 and 3"):
        build_lexicon(["casa\t10", "mare\t5", "casa\t4"], thresholds=SMALL)


@pytest.mark.parametrize(
    "line, message",
    [
        ("casa", "expected 2 tab-separated fields"),
        ("casa\t10\t3", "expected 2 tab-separated fields"),
        ("casa\tmolti", "not an integer"),
        ("casa\t-1", "negative count"),
        ("\t10", "empty surface"),
    ],
)
def test_build_rejects_malformed_lines(line: str, message: str):
    with pytest.raises(LexiconFormatError, match=message):
        build_lexicon([line], thresholds=SMALL)


def test_lookup_normalizes_to_nfc():
    lex = build_lexicon(["perché\t10"], thresholds=SMALL)
    decomposed = unicodedata.normalize("NFD", "perché")
    assert decomposed != "perché"
    entry = lex.lookup(decomposed)
    assert entry is not None
    assert entry.surface == "perché"


def test_lookup_lowercase_retry_on_miss():
    lex = small_lexicon()
    assert lex.lookup("Alto") is not None
    assert lex.lookup("ALTO") is not None
    assert lex.lookup("altissimo") is None
    assert lex.lookup("") is None


def test_exact_hit_wins_over_lowercase_retry(lexicon):
    """A capitalized entry keeps its own band even when the lowercase
    form is also listed at a different rank."""
    assert lexicon.band_of("Diventa") is Band.LOW
    assert lexicon.band_of("diventa") is Band.HIGH


def test_band_rules_rank_mode():
    lex = small_lexicon()
    assert lex.band_of("alto") is Band.HIGH
    assert lex.band_of("basso") is Band.HIGH
    assert lex.band_of("terzo") is Band.LOW
    assert lex.band_of("quarto") is Band.LOW
    assert lex.band_of("quinto") is Band.VERY_LOW
    assert lex.band_of("sesto") is Band.RARE
    assert lex.band_of("manca") is Band.UNKNOWN


def test_band_rules_count_mode_changes_only_the_high_rule():
    lex = small_lexicon(mode=BandingMode.COUNT_BASED)
    # rank 1 and 2 no longer qualify: their counts sit under the floor
    assert lex.band_of("alto") is Band.HIGH
    assert lex.band_of("basso") is Band.HIGH
    count_mode = build_lexicon(
        ["alto\t500", "basso\t99", "terzo\t40"],
        thresholds=SMALL,
        mode=BandingMode.COUNT_BASED,
    )
    assert count_mode.band_of("alto") is Band.HIGH
    assert count_mode.band_of("basso") is Band.LOW
    rank_mode = build_lexicon(["alto\t500", "basso\t99", "terzo\t40"], thresholds=SMALL)
    assert rank_mode.band_of("basso") is Band.HIGH


def test_contains_uses_lookup():
    lex = small_lexicon()
    assert "alto" in lex
    assert "Alto" in lex
    assert "altissimo" not in lex


def test_is_legal_word_accepts_any_band():
    lex = small_lexicon()
    assert lex.is_legal_word("sesto")
    assert not lex.is_legal_word("settimo")


def test_band_markers():
    assert band_marker(Band.HIGH) == "°"
    assert band_marker(Band.LOW) == "*"
    assert band_marker(Band.VERY_LOW) == "**"
    assert band_marker(Band.RARE) == "***"
    assert band_marker(Band.UNKNOWN) == "***<ukn>"


def test_band_rarity_orders_high_to_unknown():
    order = [Band.HIGH, Band.LOW, Band.VERY_LOW, Band.RARE, Band.UNKNOWN]
    assert [band_rarity(b) for b in order] == sorted(band_rarity(b) for b in order)


def test_marker_of_unknown_surface():
    lex = small_lexicon()
    assert lex.marker_of("manca") == "***<ukn>"


@pytest.mark.parametrize(
    "kwargs",
    [
        {"high_rank_cutoff": 0},
        {"core_vocab_size": 0},
        {"verylow_count_floor": 0},
        {"high_rank_cutoff": 50, "core_vocab_size": 50},
        {"high_rank_cutoff": 60, "core_vocab_size": 50},
        {"verylow_count_floor": 2000, "low_count_floor": 1377},
    ],
)
def test_threshold_validation(kwargs):
    with pytest.raises(ValueError):
        BandThresholds(**kwargs)


def test_save_load_round_trip(tmp_path):
    lex = small_lexicon()
    path = tmp_path / "snapshot.tsv"
    save_lexicon(lex, path)
    loaded = load_lexicon(path, thresholds=SMALL)
    assert loaded.entries == lex.entries
    save_lexicon(loaded, tmp_path / "again.tsv")
    assert (tmp_path / "again.tsv").read_bytes() == path.read_bytes()


def test_load_rejects_rank_gap(tmp_path):
    path = tmp_path / "snapshot.tsv"
    path.write_text("casa\t10\t1\nmare\t5\t3\n", encoding="utf-8")
    with pytest.raises(LexiconFormatError, match="expected rank 2, got 3"):
        load_lexicon(path, thresholds=SMALL)


def test_load_rejects_increasing_counts(tmp_path):
    path = tmp_path / "snapshot.tsv"
    path.write_text("casa\t10\t1\nmare\t11\t2\n", encoding="utf-8")
    with pytest.raises(LexiconFormatError, match="non-increasing"):
        load_lexicon(path, thresholds=SMALL)


def test_load_rejects_wrong_field_count(tmp_path):
    path = tmp_path / "snapshot.tsv"
    path.write_text("casa\t10\n", encoding="utf-8")
    with pytest.raises(LexiconFormatError, match="expected 3 tab-separated fields"):
        load_lexicon(path, thresholds=SMALL)


def test_fixture_snapshot_has_dense_ranks(lexicon):
    ranks = sorted(entry.rank for entry in lexicon.entries.values())
    assert ranks == list(range(1, len(lexicon) + 1))


def test_fixture_banding_modes_agree(lexicon, thresholds, fixtures_dir):
    """The snapshot is constructed so rank and count banding coincide."""
    count_mode = load_lexicon(
        fixtures_dir / "lexicon_snapshot.tsv",
        thresholds=thresholds,
        mode=BandingMode.COUNT_BASED,
    )
    for surface in lexicon.entries:
        assert lexicon.band_of(surface) is count_mode.band_of(surface), surface


def test_fixture_raw_build_matches_snapshot(thresholds, fixtures_dir, tmp_path):
    with open(fixtures_dir / "lexicon_raw.tsv", encoding="utf-8") as handle:
        built = build_lexicon(handle, thresholds=thresholds)
    assert built.dropped == 5
    save_lexicon(built, tmp_path / "rebuilt.tsv")
    original = (fixtures_dir / "lexicon_snapshot.tsv").read_bytes()
    assert (tmp_path / "rebuilt.tsv").read_bytes() == original
