"""Per-record analysis of masked-word predictions.

Recognition: a record is recognized when the gold surface appears among
its candidates under the active match policy.  Matching is NFC-exact by
default with two relaxations: a sentence-initial gold (mask index 0) also
matches its lowercased form, and, when morphological variants are enabled,
any surface listed in the record's ``gold_variants``.  Subword
continuations and special tokens never match the gold.

Every record yields an effective score: the matched candidate's score when
recognized, the rank-1 score otherwise.  Sentence predictability is the
sum of effective scores over a sentence's records.

Non-recognized records are classified into a miss taxonomy.  Records at a
sentence boundary whose candidates include a special token are boundary
degenerate.  Otherwise the candidates partition into non-word reassemblies
(N), full-word substitutions (S) and legal reassemblies (L); the label
follows from which of the three sets are populated.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Iterable, Sequence

from lexstress.corpus import Corpus, Sentence
from lexstress.lexicon import Lexicon
from lexstress.predictions import Candidate, PredictionRecord, PredictionSet


class AnalysisError(ValueError):
    """Raised for precondition violations during record analysis."""


class MatchBase(Enum):
    EXACT_NFC = "exact_nfc"
    CASEFOLDED_NFC = "casefolded_nfc"


@dataclass(frozen=True)
class MatchPolicy:
    """How candidate surfaces are compared with the gold surface."""

    base: MatchBase = MatchBase.EXACT_NFC
    count_morph_variants: bool = False


class CaseLabel(Enum):
    RECOGNIZED = "Recognized"
    BOUNDARY_DEGENERATE = "BoundaryDegenerate"
    NONWORDS_ONLY = "NonwordsOnly"
    NONWORDS_PLUS_SUBSTITUTIONS = "NonwordsPlusSubstitutions"
    NONWORDS_PLUS_LEGAL = "NonwordsPlusLegal"
    NONWORDS_PLUS_LEGAL_PLUS_SUBSTITUTIONS = "NonwordsPlusLegalPlusSubstitutions"
    FULL_WORDS_ONLY_MISS = "FullWordsOnlyMiss"


class CategoryProfile(Enum):
    ALL_SAME = "AllSame"
    MAJORITY_SAME = "MajoritySame"
    MAJORITY_DIFFERENT = "MajorityDifferent"
    ALL_DIFFERENT = "AllDifferent"


def _nfc(text: str) -> str:
    return unicodedata.normalize("NFC", text)


@dataclass(frozen=True)
class Match:
    candidate: Candidate
    via_variant: bool

    @property
    def rank(self) -> int:
        return self.candidate.rank


def match_gold(record: PredictionRecord, policy: MatchPolicy) -> Match | None:
    """Find the best-ranked candidate matching the gold surface, if any.

    Candidates flagged as subword continuations or special tokens are not
    eligible.  Returns the lowest-ranked match; ``None`` when the record
    is not recognized.
    """
    gold = _nfc(record.gold_surface)
    targets = {gold}
    if record.mask_index == 0:
        targets.add(gold.lower())
    if policy.base is MatchBase.CASEFOLDED_NFC:
        targets = {t.casefold() for t in targets}
    variants = (
        {_nfc(v) for v in record.gold_variants} if policy.count_morph_variants else set()
    )
    for candidate in record.candidates:
        if candidate.is_subword_continuation or candidate.is_special_token:
            continue
        surface = _nfc(candidate.surface)
        compared = surface.casefold() if policy.base is MatchBase.CASEFOLDED_NFC else surface
        if compared in targets:
            return Match(candidate=candidate, via_variant=False)
        if surface in variants:
            return Match(candidate=candidate, via_variant=True)
    return None


def effective_score(record: PredictionRecord, policy: MatchPolicy) -> float:
    """Matched candidate's score when recognized, else the rank-1 score."""
    match = match_gold(record, policy)
    if match is not None:
        return match.candidate.score
    return record.rank_one().score


def sentence_predictability(
    records: Sequence[PredictionRecord], policy: MatchPolicy
) -> float:
    """Sum of effective scores over a sentence's records.

    Raises:
        AnalysisError: when ``records`` is empty.
    """
    if not records:
        raise AnalysisError("sentence predictability over zero records is undefined")
    return sum(effective_score(record, policy) for record in records)


def reassemble_subword(left_surface: str, candidate: Candidate) -> str:
    """Concatenate a continuation piece onto the preceding surface.

    Plain concatenation with no inserted separator.

    Raises:
        AnalysisError: when the candidate is not a subword continuation.
    """
    if not candidate.is_subword_continuation:
        raise AnalysisError(
            f"candidate {candidate.surface!r} is a full word, not a continuation piece"
        )
    return _nfc(left_surface) + _nfc(candidate.surface)


def classify_outcome(
    record: PredictionRecord,
    sentence: Sentence,
    lexicon: Lexicon,
    policy: MatchPolicy,
) -> CaseLabel:
    """Assign the outcome taxonomy label for one record.

    Order of rules: recognized; boundary degenerate (first or last token
    position with a special-token candidate); otherwise the N/S/L
    partition of the candidates, where N are reassemblies absent from the
    lexicon, S are full-word substitutions and L are reassemblies the
    lexicon accepts.
    """
    if match_gold(record, policy) is not None:
        return CaseLabel.RECOGNIZED
    at_boundary = record.mask_index == 0 or record.mask_index == len(sentence.tokens) - 1
    if at_boundary and any(c.is_special_token for c in record.candidates):
        return CaseLabel.BOUNDARY_DEGENERATE
    left_surface = (
        sentence.tokens[record.mask_index - 1].surface if record.mask_index > 0 else ""
    )
    nonwords = substitutions = legal = 0
    for candidate in record.candidates:
        if candidate.is_special_token:
            continue
        if candidate.is_subword_continuation:
            if lexicon.is_legal_word(reassemble_subword(left_surface, candidate)):
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


def load_pos_lookup(path: str | Path) -> dict[str, str]:
    """Load a ``surface<TAB>pos`` table; conflicting duplicates are errors."""
    lookup: dict[str, str] = {}
    with open(path, encoding="utf-8") as handle:
        for line_no, raw_line in enumerate(handle, start=1):
            line = raw_line.rstrip("\r\n")
            if not line.strip():
                continue
            fields = line.split("\t")
            if len(fields) != 2:
                raise AnalysisError(
                    f"pos lookup line {line_no}: expected 2 fields, got {len(fields)}"
                )
            surface = _nfc(fields[0])
            pos = fields[1]
            if surface in lookup and lookup[surface] != pos:
                raise AnalysisError(
                    f"pos lookup line {line_no}: conflicting tag for {surface!r}"
                )
            lookup[surface] = pos
    return lookup


def category_profile(
    record: PredictionRecord, gold_pos: str, pos_lookup: dict[str, str]
) -> tuple[CategoryProfile, int]:
    """Profile the part-of-speech agreement of the candidate list.

    Tallies full-word candidates only (continuation pieces and special
    tokens are excluded).  Returns the profile and the tally size; an
    empty tally reports ``AllDifferent`` with size 0 so the caller can
    flag it.

    Raises:
        AnalysisError: when a tallied candidate is missing from the lookup.
    """
    same = different = 0
    for candidate in record.candidates:
        if candidate.is_subword_continuation or candidate.is_special_token:
            continue
        surface = _nfc(candidate.surface)
        pos = pos_lookup.get(surface)
        if pos is None:
            raise AnalysisError(f"pos lookup lacks candidate surface {surface!r}")
        if pos == gold_pos:
            same += 1
        else:
            different += 1
    tallied = same + different
    if tallied == 0:
        return (CategoryProfile.ALL_DIFFERENT, 0)
    if different == 0:
        return (CategoryProfile.ALL_SAME, tallied)
    if same == 0:
        return (CategoryProfile.ALL_DIFFERENT, tallied)
    if same > different:
        return (CategoryProfile.MAJORITY_SAME, tallied)
    return (CategoryProfile.MAJORITY_DIFFERENT, tallied)


@dataclass(frozen=True)
class MaskOutcome:
    """Everything downstream aggregation needs about one analyzed record."""

    sentence_id: str
    mask_index: int
    gold_surface: str
    domain: str
    structure: str
    is_content: bool
    recognized: bool
    match_rank: int | None
    via_variant: bool
    effective_score: float
    in_first_three: bool
    case_label: CaseLabel
    category_profile: CategoryProfile
    profile_tally_empty: bool
    phrase: str | None
    multi_piece: bool


def evaluate_record(
    record: PredictionRecord,
    sentence: Sentence,
    lexicon: Lexicon,
    policy: MatchPolicy,
    pos_lookup: dict[str, str],
) -> MaskOutcome:
    if record.mask_index >= len(sentence.tokens):
        raise AnalysisError(
            f"record {record.key}: mask index beyond sentence of {len(sentence.tokens)} tokens"
        )
    token = sentence.tokens[record.mask_index]
    match = match_gold(record, policy)
    label = classify_outcome(record, sentence, lexicon, policy)
    profile, tallied = category_profile(record, token.pos, pos_lookup)
    return MaskOutcome(
        sentence_id=sentence.id,
        mask_index=record.mask_index,
        gold_surface=record.gold_surface,
        domain=sentence.domain.value,
        structure=sentence.structure.value,
        is_content=token.is_content,
        recognized=match is not None,
        match_rank=match.rank if match else None,
        via_variant=match.via_variant if match else False,
        effective_score=effective_score(record, policy),
        in_first_three=match is not None and match.rank <= 3,
        case_label=label,
        category_profile=profile,
        profile_tally_empty=tallied == 0,
        phrase=token.phrase,
        multi_piece=record.multi_piece,
    )


def evaluate_records(
    predictions: PredictionSet,
    corpus: Corpus,
    lexicon: Lexicon,
    policy: MatchPolicy,
    pos_lookup: dict[str, str],
    records: Iterable[PredictionRecord] | None = None,
) -> list[MaskOutcome]:
    """Analyze records against their sentences; output is sorted by key.

    ``records`` narrows the evaluation to a subset (used by parallel
    drivers, which merge and re-sort partial results).
    """
    chosen = list(records) if records is not None else predictions.records
    outcomes = [
        evaluate_record(record, corpus.sentence(record.sentence_id), lexicon, policy, pos_lookup)
        for record in chosen
    ]
    outcomes.sort(key=lambda o: (o.sentence_id, o.mask_index))
    return outcomes
