from __future__ import annotations

import math

import pytest

from lexstress.analysis import CaseLabel, CategoryProfile, MaskOutcome
from lexstress.metrics import (
    ComparisonRow,
    MetricsError,
    accuracy_at_k,
    best_predictions_table,
    comparison_row,
    predictability_by_sentence,
    ratio_summary,
    surprisal,
    typology_table,
)


def outcome(
    sentence_id: str = "1.A",
    mask_index: int = 0,
    recognized: bool = False,
    match_rank: int | None = None,
    is_content: bool = True,
    effective: float = 0.1,
    structure: str = "NonCanonical",
    gold: str = "mare",
    phrase: str | None = None,
) -> MaskOutcome:
    return MaskOutcome(
        sentence_id=sentence_id,
        mask_index=mask_index,
        gold_surface=gold,
        domain="Poetry",
        structure=structure,
        is_content=is_content,
        recognized=recognized,
        match_rank=match_rank,
        via_variant=False,
        effective_score=effective,
        in_first_three=bool(match_rank and match_rank <= 3),
        case_label=CaseLabel.RECOGNIZED if recognized else CaseLabel.NONWORDS_ONLY,
        category_profile=CategoryProfile.ALL_DIFFERENT,
        profile_tally_empty=False,
        phrase=phrase,
        multi_piece=False,
    )


def test_accuracy_at_k_counts_recognitions_within_k():
    outcomes = [
        outcome(recognized=True, match_rank=1),
        outcome(mask_index=1, recognized=True, match_rank=7),
        outcome(mask_index=2),
        outcome(mask_index=3),
    ]
    assert accuracy_at_k(outcomes, 10) == pytest.approx(0.5)
    assert accuracy_at_k(outcomes, 3) == pytest.approx(0.25)
    assert accuracy_at_k(outcomes, 1) == pytest.approx(0.25)


def test_accuracy_rejects_bad_inputs():
    with pytest.raises(MetricsError, match="positive"):
        accuracy_at_k([outcome()], 0)
    with pytest.raises(MetricsError, match="zero outcomes"):
        accuracy_at_k([], 5)


def test_typology_counts_and_content_share():
    outcomes = [
        outcome(recognized=True, match_rank=1, is_content=True),
        outcome(mask_index=1, recognized=True, match_rank=2, is_content=False),
        outcome(mask_index=2, recognized=True, match_rank=9, is_content=False),
        outcome(mask_index=3),
    ]
    t = typology_table(outcomes)
    assert t.recognized == 3
    assert t.recognized_function == 2
    assert t.recognized_content == 1
    assert t.in_first_three == 2
    assert t.in_first_three_function == 1
    assert t.content_ratio == pytest.approx(1 / 3)


def test_typology_content_share_of_nothing_is_zero():
    assert typology_table([outcome()]).content_ratio == 0.0


def test_comparison_row_cells():
    row = ComparisonRow(
        label="1.A", n_words=10, n_masked=4, noncanon_recognized=2,
        canon_recognized=3, high=2, low=1, beyond=1,
    )
    assert row.words_cell() == "10/4"
    assert row.low_cell() == "1/1"
    flat = ComparisonRow(
        label="1.A", n_words=10, n_masked=4, noncanon_recognized=2,
        canon_recognized=3, high=3, low=1, beyond=0,
    )
    assert flat.low_cell() == "1"


def test_comparison_row_counts_recognitions_and_bands(corpus, plans, lexicon):
    pair = next(p for p in corpus.pairs if p.label == "4.A")
    plan = plans["4.A"]
    noncanon = [
        outcome(sentence_id="4.A", mask_index=i, recognized=(n < 2))
        for n, i in enumerate(plan.indices)
    ]
    canon = [outcome(sentence_id="4.Ac", mask_index=0, recognized=True)]
    row = comparison_row(pair, plan, noncanon, canon, lexicon)
    assert row.label == "4.A"
    assert row.n_words == len(pair.noncanonical.tokens)
    assert row.n_masked == len(plan.indices)
    assert row.noncanon_recognized == 2
    assert row.canon_recognized == 1
    assert row.high + row.low + row.beyond == len(plan.indices)


def test_comparison_row_uses_explicit_freq_words(corpus, plans, lexicon):
    pair = next(p for p in corpus.pairs if p.label == "9.B")
    assert pair.freq_words is not None
    row = comparison_row(pair, plans["9.B"], [], [], lexicon)
    assert row.high + row.low + row.beyond == len(pair.freq_words)


def test_comparison_row_rejects_foreign_plan(corpus, plans, lexicon):
    pair = next(p for p in corpus.pairs if p.label == "4.A")
    with pytest.raises(MetricsError, match="does not describe"):
        comparison_row(pair, plans["5.A"], [], [], lexicon)


def test_ratio_summary_sums_columns():
    rows = [
        ComparisonRow("1.A", 10, 4, 2, 3, 2, 1, 1),
        ComparisonRow("2.A", 8, 3, 1, 2, 2, 1, 0),
    ]
    summary = ratio_summary(rows)
    assert summary.total_words == 18
    assert summary.total_masked == 7
    assert summary.total_noncanon == 3
    assert summary.total_canon == 5
    assert summary.masked_ratio == pytest.approx(7 / 18)
    assert summary.structure_ratio == pytest.approx(3 / 5)
    assert summary.lowfreq_ratio == pytest.approx((2 + 2 * 1) / 4)


def test_ratio_summary_rejects_empty_and_zero_denominators():
    with pytest.raises(MetricsError, match="zero rows"):
        ratio_summary([])
    with pytest.raises(MetricsError, match="zero denominator"):
        ratio_summary([ComparisonRow("1.A", 10, 4, 2, 0, 2, 1, 1)])


def test_best_predictions_threshold_is_strict(corpus):
    at_threshold = outcome(
        sentence_id="1.B", recognized=True, match_rank=1, effective=0.5, gold="Oggi"
    )
    assert best_predictions_table([at_threshold], corpus, threshold=0.5) == []
    above = outcome(
        sentence_id="1.B", recognized=True, match_rank=1, effective=0.50001, gold="Oggi"
    )
    assert len(best_predictions_table([above], corpus, threshold=0.5)) == 1


def test_best_predictions_groups_pair_versions(corpus):
    noncanon = outcome(
        sentence_id="15.B", mask_index=12, recognized=True, match_rank=1,
        effective=0.97755, gold="ha", is_content=False, phrase="ha voluto",
        structure="NonCanonical",
    )
    canon = outcome(
        sentence_id="15.Bc", mask_index=2, recognized=True, match_rank=1,
        effective=0.97755, gold="ha", is_content=False, phrase="ha voluto",
        structure="Canonical",
    )
    rows = best_predictions_table([canon, noncanon], corpus, threshold=0.5)
    assert len(rows) == 1
    row = rows[0]
    assert row.pair_label == "15.B"
    assert row.noncanon_score == pytest.approx(0.97755)
    assert row.canon_score == pytest.approx(0.97755)
    assert row.lexical_type == "Function"
    assert row.best == pytest.approx(0.97755)


def test_best_predictions_sorted_by_pair_then_gold(corpus):
    outcomes = [
        outcome(sentence_id="16.B", mask_index=4, recognized=True, match_rank=1,
                effective=0.99582, gold="vita", phrase="senatore a vita"),
        outcome(sentence_id="16.B", mask_index=12, recognized=True, match_rank=1,
                effective=0.79483, gold="viene", is_content=False,
                phrase="viene nominato"),
        outcome(sentence_id="6.B", mask_index=2, recognized=True, match_rank=1,
                effective=0.5596, gold="più", is_content=False, phrase="più acuta"),
    ]
    rows = best_predictions_table(outcomes, corpus, threshold=0.5)
    assert [(r.pair_label, r.gold) for r in rows] == [
        ("6.B", "più"),
        ("16.B", "viene"),
        ("16.B", "vita"),
    ]


def test_best_predictions_phrase_falls_back_to_neighbours(corpus):
    hit = outcome(
        sentence_id="1.B", mask_index=1, recognized=True, match_rank=1,
        effective=0.9, gold="ringrazio",
    )
    rows = best_predictions_table([hit], corpus, threshold=0.5)
    assert rows[0].phrase == "ringrazio della"


def test_predictability_by_sentence_sums_scores():
    outcomes = [
        outcome(sentence_id="1.A", effective=0.25),
        outcome(sentence_id="1.A", mask_index=1, effective=0.5),
        outcome(sentence_id="2.A", effective=0.125),
    ]
    sums = predictability_by_sentence(outcomes)
    assert sums == {"1.A": pytest.approx(0.75), "2.A": pytest.approx(0.125)}


def test_surprisal_values():
    assert surprisal(1.0) == 0.0
    assert surprisal(0.5) == pytest.approx(1.0)
    assert surprisal(0.25) == pytest.approx(2.0)
    assert math.isclose(surprisal(0.1), -math.log2(0.1))


@pytest.mark.parametrize("bad", [0.0, -0.5, 1.0001, 2.0])
def test_surprisal_domain(bad):
    with pytest.raises(MetricsError, match="out of range"):
        surprisal(bad)
