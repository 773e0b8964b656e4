from __future__ import annotations

import json
import unicodedata

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lexstress.analysis import (
    CaseLabel,
    CategoryProfile,
    MaskOutcome,
    MatchBase,
    MatchPolicy,
    classify_outcome,
    match_gold,
    reassemble_subword,
)
from lexstress.corpus import Domain, NcsLabel, Sentence, Structure, Token
from lexstress.lexicon import (
    Band,
    BandingMode,
    BandThresholds,
    band_marker,
    band_rarity,
    build_lexicon,
)
from lexstress.metrics import ComparisonRow, accuracy_at_k, ratio_summary, surprisal
from lexstress.predictions import Candidate, PredictionRecord, RecordFormatError, parse_records

SURFACES = st.text(alphabet="abcdefgàèò", min_size=1, max_size=8)


@st.composite
def lexicon_inputs(draw):
    entries = draw(
        st.dictionaries(SURFACES, st.integers(min_value=0, max_value=50000),
                        min_size=1, max_size=25)
    )
    high_rank_cutoff = draw(st.integers(min_value=1, max_value=8))
    core_vocab_size = high_rank_cutoff + draw(st.integers(min_value=1, max_value=8))
    verylow_count_floor = draw(st.integers(min_value=1, max_value=500))
    low_count_floor = verylow_count_floor + draw(st.integers(min_value=0, max_value=2000))
    thresholds = BandThresholds(
        high_rank_cutoff=high_rank_cutoff,
        core_vocab_size=core_vocab_size,
        low_count_floor=low_count_floor,
        verylow_count_floor=verylow_count_floor,
        high_count_floor=draw(st.integers(min_value=1, max_value=60000)),
    )
    mode = draw(st.sampled_from(list(BandingMode)))
    return entries, thresholds, mode


@settings(max_examples=1000, deadline=None)
@given(lexicon_inputs())
def test_band_partition_respects_thresholds(inputs):
    """Every entry lands in exactly the band its rank and count dictate."""
    entries, thresholds, mode = inputs
    lex = build_lexicon(
        (f"{surface}\t{count}" for surface, count in entries.items()),
        thresholds=thresholds,
        mode=mode,
    )
    for surface, entry in lex.entries.items():
        band = lex.band_of(surface)
        assert band in Band
        assert band is not Band.UNKNOWN
        if band is Band.HIGH:
            if mode is BandingMode.COUNT_BASED:
                assert entry.count >= thresholds.high_count_floor
            else:
                assert entry.rank <= thresholds.high_rank_cutoff
        elif band is Band.LOW:
            assert entry.rank <= thresholds.core_vocab_size
            if mode is BandingMode.COUNT_BASED:
                assert entry.count < thresholds.high_count_floor
            else:
                assert entry.rank > thresholds.high_rank_cutoff
        elif band is Band.VERY_LOW:
            assert entry.rank > thresholds.core_vocab_size
            assert entry.count >= thresholds.verylow_count_floor
        else:
            assert band is Band.RARE
            assert entry.rank > thresholds.core_vocab_size
            assert entry.count < thresholds.verylow_count_floor
        assert lex.marker_of(surface) == band_marker(band)
    assert lex.band_of("zz9") is Band.UNKNOWN
    assert lex.marker_of("zz9") == "***<ukn>"


@settings(max_examples=1000, deadline=None)
@given(lexicon_inputs())
def test_band_rarity_is_monotone_in_rank_and_count(inputs):
    """Moving down the ranked list never makes a surface less rare, and a
    strictly larger count never yields a rarer band."""
    entries, thresholds, mode = inputs
    lex = build_lexicon(
        (f"{surface}\t{count}" for surface, count in entries.items()),
        thresholds=thresholds,
        mode=mode,
    )
    ranked = sorted(lex.entries.values(), key=lambda e: e.rank)
    rarities = [band_rarity(lex.band_of(e.surface)) for e in ranked]
    assert rarities == sorted(rarities)
    for a, rarity_a in zip(ranked, rarities):
        for b, rarity_b in zip(ranked, rarities):
            if a.count > b.count:
                assert rarity_a <= rarity_b


def test_band_markers_are_distinct():
    markers = [band_marker(band) for band in Band]
    assert len(set(markers)) == len(markers)


TAXONOMY_LEXICON = build_lexicon(
    ["cane\t50", "pane\t40", "lamento\t30", "rupe\t20"],
    thresholds=BandThresholds(high_rank_cutoff=1, core_vocab_size=2,
                              low_count_floor=10, verylow_count_floor=4,
                              high_count_floor=45),
)

TAXONOMY_SENTENCE = Sentence(
    id="1.A",
    domain=Domain.POETRY,
    structure=Structure.NON_CANONICAL,
    tokens=(
        Token(surface="la", pos="DET", is_content=False, index=0),
        Token(surface="rupe", pos="NOUN", is_content=True, index=1),
        Token(surface="alta", pos="ADJ", is_content=True, index=2),
    ),
    ncs_labels=(NcsLabel.ADJECTIVE_EXTRACTION,),
)

EXACT = MatchPolicy(base=MatchBase.EXACT_NFC)

candidate_kinds = st.sampled_from(["full", "piece", "special"])
candidate_surfaces = st.sampled_from(
    ["rupe", "Rupe", "cane", "ne", "mento", "zzz", "torre", "<s>"]
)


@st.composite
def taxonomy_records(draw):
    n = draw(st.integers(min_value=1, max_value=6))
    raw_scores = draw(
        st.lists(st.floats(min_value=0.001, max_value=1.0, allow_nan=False),
                 min_size=n, max_size=n)
    )
    scores = sorted((round(s, 6) for s in raw_scores), reverse=True)
    candidates = []
    for rank in range(1, n + 1):
        kind = draw(candidate_kinds)
        surface = draw(candidate_surfaces)
        candidates.append(
            Candidate(
                surface=surface,
                score=scores[rank - 1],
                rank=rank,
                is_subword_continuation=kind == "piece",
                is_special_token=kind == "special",
            )
        )
    mask_index = draw(st.integers(min_value=0, max_value=2))
    return PredictionRecord(
        sentence_id="1.A",
        mask_index=mask_index,
        gold_surface=TAXONOMY_SENTENCE.tokens[mask_index].surface,
        candidates=tuple(candidates),
    )


def derive_label(record: PredictionRecord) -> CaseLabel:
    if match_gold(record, EXACT) is not None:
        return CaseLabel.RECOGNIZED
    edge = record.mask_index in (0, len(TAXONOMY_SENTENCE.tokens) - 1)
    if edge and any(c.is_special_token for c in record.candidates):
        return CaseLabel.BOUNDARY_DEGENERATE
    left = (
        TAXONOMY_SENTENCE.tokens[record.mask_index - 1].surface
        if record.mask_index
        else ""
    )
    nonwords = legal = substitutions = 0
    for candidate in record.candidates:
        if candidate.is_special_token:
            continue
        if candidate.is_subword_continuation:
            if TAXONOMY_LEXICON.is_legal_word(reassemble_subword(left, candidate)):
                legal += 1
            else:
                nonwords += 1
        else:
            substitutions += 1
    if nonwords == 0:
        return CaseLabel.FULL_WORDS_ONLY_MISS
    if substitutions and legal:
        return CaseLabel.NONWORDS_PLUS_LEGAL_PLUS_SUBSTITUTIONS
    if substitutions:
        return CaseLabel.NONWORDS_PLUS_SUBSTITUTIONS
    if legal:
        return CaseLabel.NONWORDS_PLUS_LEGAL
    return CaseLabel.NONWORDS_ONLY


@settings(max_examples=400, deadline=None)
@given(taxonomy_records())
def test_taxonomy_is_exhaustive_and_exclusive(record):
    label = classify_outcome(record, TAXONOMY_SENTENCE, TAXONOMY_LEXICON, EXACT)
    assert label in CaseLabel
    assert label is derive_label(record)
    recognized = match_gold(record, EXACT) is not None
    assert recognized == (label is CaseLabel.RECOGNIZED)


@settings(max_examples=300, deadline=None)
@given(
    scores=st.lists(
        st.floats(min_value=0.0, max_value=1.0, allow_nan=False).map(
            lambda value: round(value, 6)
        ),
        min_size=2,
        max_size=6,
    )
)
def test_parser_accepts_exactly_non_increasing_scores(scores):
    header = json.dumps({"format_version": "1", "model_id": "m", "k": len(scores)})
    line = json.dumps(
        {
            "sentence_id": "1.A",
            "mask_index": 1,
            "gold_surface": "rupe",
            "candidates": [
                {"surface": f"w{i}", "score": score} for i, score in enumerate(scores)
            ],
        }
    )
    increases = any(b > a for a, b in zip(scores, scores[1:]))
    if increases:
        with pytest.raises(RecordFormatError, match="scores increase"):
            parse_records([header, line])
    else:
        assert len(parse_records([header, line])) == 1


def make_outcome(index: int, recognized: bool, rank: int | None) -> MaskOutcome:
    return MaskOutcome(
        sentence_id="1.A",
        mask_index=index,
        gold_surface="rupe",
        domain="Poetry",
        structure="NonCanonical",
        is_content=True,
        recognized=recognized,
        match_rank=rank,
        via_variant=False,
        effective_score=0.5,
        in_first_three=bool(rank and rank <= 3),
        case_label=CaseLabel.RECOGNIZED if recognized else CaseLabel.NONWORDS_ONLY,
        category_profile=CategoryProfile.ALL_DIFFERENT,
        profile_tally_empty=False,
        phrase=None,
        multi_piece=False,
    )


@settings(max_examples=300, deadline=None)
@given(
    st.lists(
        st.tuples(st.booleans(), st.integers(min_value=1, max_value=10)),
        min_size=1,
        max_size=30,
    )
)
def test_accuracy_is_monotone_in_k(spec):
    outcomes = [
        make_outcome(i, recognized, rank if recognized else None)
        for i, (recognized, rank) in enumerate(spec)
    ]
    values = [accuracy_at_k(outcomes, k) for k in range(1, 12)]
    assert values == sorted(values)
    assert 0.0 <= values[0] <= values[-1] <= 1.0


row_strategy = st.builds(
    ComparisonRow,
    label=st.just("1.A"),
    n_words=st.integers(min_value=1, max_value=40),
    n_masked=st.integers(min_value=0, max_value=40),
    noncanon_recognized=st.integers(min_value=0, max_value=40),
    canon_recognized=st.integers(min_value=1, max_value=40),
    high=st.integers(min_value=1, max_value=40),
    low=st.integers(min_value=0, max_value=40),
    beyond=st.integers(min_value=0, max_value=40),
)


@settings(max_examples=300, deadline=None)
@given(st.lists(row_strategy, min_size=1, max_size=12))
def test_ratio_summary_matches_column_sums(rows):
    summary = ratio_summary(rows)
    assert summary.total_words == sum(r.n_words for r in rows)
    assert summary.total_masked == sum(r.n_masked for r in rows)
    assert summary.total_noncanon == sum(r.noncanon_recognized for r in rows)
    assert summary.total_canon == sum(r.canon_recognized for r in rows)
    assert summary.total_high == sum(r.high for r in rows)
    assert summary.total_low == sum(r.low for r in rows)
    assert summary.total_beyond == sum(r.beyond for r in rows)
    assert summary.masked_ratio == pytest.approx(
        summary.total_masked / summary.total_words
    )
    assert summary.structure_ratio == pytest.approx(
        summary.total_noncanon / summary.total_canon
    )
    assert summary.lowfreq_ratio == pytest.approx(
        (summary.total_low + 2 * summary.total_beyond) / summary.total_high
    )


@settings(max_examples=300, deadline=None)
@given(
    st.floats(min_value=1e-9, max_value=1.0, allow_nan=False),
    st.floats(min_value=1e-9, max_value=1.0, allow_nan=False),
)
def test_surprisal_is_antitone(p, q):
    lo, hi = sorted((p, q))
    assert surprisal(lo) >= surprisal(hi)


@settings(max_examples=200, deadline=None)
@given(st.text(alphabet="abcdeèàò'", min_size=0, max_size=6))
def test_reassembly_is_nfc_stable(left):
    piece = Candidate(
        surface=unicodedata.normalize("NFD", "chè"),
        score=0.5,
        rank=1,
        is_subword_continuation=True,
    )
    word = reassemble_subword(left, piece)
    assert word == unicodedata.normalize("NFC", word)
    assert word.endswith("chè")
