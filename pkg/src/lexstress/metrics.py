"""Aggregation of mask outcomes into tables and summary ratios.

Comparison rows profile each sentence pair: token and mask counts,
recognized-word counts for both structural versions, and the frequency
bands of the profiled words.  The profiled word set defaults to the masked
tokens of the non-canonical sentence (a sentence-initial token is profiled
through its lowercase form when the lexicon has a dedicated lowercase
entry); a pair can override the set explicitly.

Band counting folds VeryLow, Rare and Unknown into a single beyond-core
bucket.  The summary ratio of low-frequency exposure weights that bucket
twice: (low + 2 * beyond) / high.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from lexstress.analysis import MaskOutcome
from lexstress.corpus import Corpus, MaskPlan, SentencePair, pair_number
from lexstress.lexicon import Band, Lexicon


class MetricsError(ValueError):
    """Raised for undefined aggregate values (empty inputs, zero denominators)."""


def accuracy_at_k(outcomes: Sequence[MaskOutcome], k: int) -> float:
    """Fraction of outcomes recognized at rank ``k`` or better."""
    if k < 1:
        raise MetricsError(f"k must be positive, got {k}")
    if not outcomes:
        raise MetricsError("accuracy over zero outcomes is undefined")
    hits = sum(
        1 for o in outcomes if o.recognized and o.match_rank is not None and o.match_rank <= k
    )
    return hits / len(outcomes)


@dataclass(frozen=True)
class TypologyCounts:
    recognized: int
    recognized_function: int
    in_first_three: int
    in_first_three_function: int

    @property
    def recognized_content(self) -> int:
        return self.recognized - self.recognized_function

    @property
    def content_ratio(self) -> float:
        if self.recognized == 0:
            return 0.0
        return self.recognized_content / self.recognized


def typology_table(outcomes: Sequence[MaskOutcome]) -> TypologyCounts:
    recognized = [o for o in outcomes if o.recognized]
    return TypologyCounts(
        recognized=len(recognized),
        recognized_function=sum(1 for o in recognized if not o.is_content),
        in_first_three=sum(1 for o in recognized if o.in_first_three),
        in_first_three_function=sum(
            1 for o in recognized if o.in_first_three and not o.is_content
        ),
    )


@dataclass(frozen=True)
class ComparisonRow:
    label: str
    n_words: int
    n_masked: int
    noncanon_recognized: int
    canon_recognized: int
    high: int
    low: int
    beyond: int

    def words_cell(self) -> str:
        return f"{self.n_words}/{self.n_masked}"

    def low_cell(self) -> str:
        return f"{self.low}/{self.beyond}" if self.beyond else f"{self.low}"


def _default_freq_words(pair: SentencePair, plan: MaskPlan, lexicon: Lexicon) -> list[str]:
    words: list[str] = []
    for index in plan.indices:
        token = pair.noncanonical.tokens[index]
        surface = token.surface
        if index == 0:
            lowered = surface.lower()
            if lowered != surface and lowered in lexicon.entries:
                surface = lowered
        words.append(surface)
    return words


def comparison_row(
    pair: SentencePair,
    plan: MaskPlan,
    noncanon_outcomes: Sequence[MaskOutcome],
    canon_outcomes: Sequence[MaskOutcome],
    lexicon: Lexicon,
) -> ComparisonRow:
    """Profile one sentence pair for the per-domain comparison table."""
    if plan.sentence_id != pair.noncanonical.id:
        raise MetricsError(
            f"plan {plan.sentence_id} does not describe pair {pair.label}"
        )
    freq_words = (
        list(pair.freq_words)
        if pair.freq_words is not None
        else _default_freq_words(pair, plan, lexicon)
    )
    high = low = beyond = 0
    for word in freq_words:
        band = lexicon.band_of(word)
        if band is Band.HIGH:
            high += 1
        elif band is Band.LOW:
            low += 1
        else:
            beyond += 1
    return ComparisonRow(
        label=pair.label,
        n_words=len(pair.noncanonical.tokens),
        n_masked=len(plan.indices),
        noncanon_recognized=sum(1 for o in noncanon_outcomes if o.recognized),
        canon_recognized=sum(1 for o in canon_outcomes if o.recognized),
        high=high,
        low=low,
        beyond=beyond,
    )


@dataclass(frozen=True)
class RatioSummary:
    total_words: int
    total_masked: int
    total_noncanon: int
    total_canon: int
    total_high: int
    total_low: int
    total_beyond: int

    @property
    def masked_ratio(self) -> float:
        return self.total_masked / self.total_words

    @property
    def structure_ratio(self) -> float:
        return self.total_noncanon / self.total_canon

    @property
    def lowfreq_ratio(self) -> float:
        return (self.total_low + 2 * self.total_beyond) / self.total_high


def ratio_summary(rows: Sequence[ComparisonRow]) -> RatioSummary:
    """Column sums and the three summary ratios over comparison rows."""
    if not rows:
        raise MetricsError("ratio summary over zero rows is undefined")
    summary = RatioSummary(
        total_words=sum(r.n_words for r in rows),
        total_masked=sum(r.n_masked for r in rows),
        total_noncanon=sum(r.noncanon_recognized for r in rows),
        total_canon=sum(r.canon_recognized for r in rows),
        total_high=sum(r.high for r in rows),
        total_low=sum(r.low for r in rows),
        total_beyond=sum(r.beyond for r in rows),
    )
    if summary.total_words == 0 or summary.total_canon == 0 or summary.total_high == 0:
        raise MetricsError("ratio summary has a zero denominator")
    return summary


@dataclass
class BestPredictionRow:
    pair_label: str
    gold: str
    noncanon_score: float | None
    canon_score: float | None
    phrase: str
    lexical_type: str

    @property
    def best(self) -> float:
        cells = [s for s in (self.noncanon_score, self.canon_score) if s is not None]
        return max(cells)


def _pair_label(sentence_id: str) -> str:
    return sentence_id[:-1] if sentence_id.endswith("c") else sentence_id


def _fallback_phrase(corpus: Corpus, outcome: MaskOutcome) -> str:
    sentence = corpus.sentence(outcome.sentence_id)
    index = outcome.mask_index
    tokens = sentence.tokens
    nxt = tokens[index + 1] if index + 1 < len(tokens) else None
    if nxt is not None and not nxt.is_punctuation():
        return f"{tokens[index].surface} {nxt.surface}"
    if index > 0:
        return f"{tokens[index - 1].surface} {tokens[index].surface}"
    return tokens[index].surface


def best_predictions_table(
    outcomes: Sequence[MaskOutcome], corpus: Corpus, threshold: float = 0.5
) -> list[BestPredictionRow]:
    """Recognized outcomes scoring above the threshold, grouped per pair.

    One row per (pair, gold word); the two structural versions fill the
    row's two score cells independently.  The phrase context comes from
    the token's multiword annotation when present, otherwise from the
    neighboring token.  Rows sort by pair number then gold surface.
    """
    rows: dict[tuple[int, str], BestPredictionRow] = {}
    for outcome in outcomes:
        if not outcome.recognized or outcome.effective_score <= threshold:
            continue
        label = _pair_label(outcome.sentence_id)
        key = (pair_number(label), outcome.gold_surface.casefold())
        phrase = outcome.phrase or _fallback_phrase(corpus, outcome)
        row = rows.get(key)
        if row is None:
            row = BestPredictionRow(
                pair_label=label,
                gold=outcome.gold_surface,
                noncanon_score=None,
                canon_score=None,
                phrase=phrase,
                lexical_type="Content" if outcome.is_content else "Function",
            )
            rows[key] = row
        if outcome.structure == "NonCanonical":
            row.noncanon_score = outcome.effective_score
            row.gold = outcome.gold_surface
            row.phrase = phrase
        else:
            row.canon_score = outcome.effective_score
    return [rows[key] for key in sorted(rows)]


def predictability_by_sentence(outcomes: Sequence[MaskOutcome]) -> dict[str, float]:
    """Sum of effective scores per sentence id."""
    sums: dict[str, float] = {}
    for outcome in outcomes:
        sums[outcome.sentence_id] = sums.get(outcome.sentence_id, 0.0) + outcome.effective_score
    return sums


def surprisal(probability: float) -> float:
    """Surprisal in bits of an event probability.

    Raises:
        MetricsError: for probabilities outside (0, 1].
    """
    if probability <= 0 or probability > 1:
        raise MetricsError(f"probability out of range (0, 1]: {probability}")
    return -math.log2(probability)
