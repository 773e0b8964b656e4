"""Sentence-pair corpus model and mask planning.

A corpus holds sentences in two structural versions: a non-canonical
original and a canonical paraphrase.  Sentence ids follow the pattern
``<number>.<A|B>`` with a trailing ``c`` on the canonical member of a
pair; ``A`` marks the poetry domain and ``B`` the newswire domain.  Every
non-canonical sentence carries at least one non-canonical-structure label;
canonical sentences carry none.

Masking follows one of two policies.  ``ContentOnly`` masks every content
token.  ``ContentPlusListedFunction`` masks every content token plus an
explicit list of function-token indices; listing a content token or a
punctuation token is an error.  Punctuation is never masked.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Iterable, Union


class CorpusFormatError(ValueError):
    """Raised when corpus input violates the format or its invariants."""


class Domain(Enum):
    POETRY = "Poetry"
    NEWSWIRE = "Newswire"


class Structure(Enum):
    CANONICAL = "Canonical"
    NON_CANONICAL = "NonCanonical"


class NcsLabel(Enum):
    """Non-canonical-structure phenomena annotated on original sentences."""

    ARGUMENT_INVERSION = "ArgumentInversion"
    OBJECT_FRONTING = "ObjectFronting"
    ADJECTIVE_EXTRACTION = "AdjectiveExtraction"
    PP_ADJUNCT_PREPOSING = "PpAdjunctPreposing"
    VERB_LEFT_EXTRACTION = "VerbLeftExtraction"
    SUBJECT_RIGHT_DISLOCATION = "SubjectRightDislocation"
    SUBJECT_OBJECT_FRONTING = "SubjectObjectFronting"
    PP_SPEC_EXTRACTION_FRONTED = "PpSpecExtractionFronted"
    CLITIC_LEFT_DISLOCATION = "CliticLeftDislocation"
    OBJECT_RIGHT_DISLOCATION = "ObjectRightDislocation"
    PARENTHETICAL_INSERTION = "ParentheticalInsertion"
    ADJECTIVE_RIGHT_EXTRACTION = "AdjectiveRightExtraction"
    PP_SPEC_RIGHT_STRANDING = "PpSpecRightStranding"
    VERB_RIGHT_EXTRACTION = "VerbRightExtraction"
    DOUBLE_PARENTHETICAL = "DoubleParenthetical"
    HANGING_TOPIC = "HangingTopic"


@dataclass(frozen=True)
class Token:
    surface: str
    pos: str
    is_content: bool
    index: int
    is_elided: bool = False
    phrase: str | None = None

    def is_punctuation(self) -> bool:
        return self.pos == "PUNCT"


@dataclass(frozen=True)
class Sentence:
    id: str
    domain: Domain
    structure: Structure
    tokens: tuple[Token, ...]
    ncs_labels: tuple[NcsLabel, ...] = ()

    def __len__(self) -> int:
        return len(self.tokens)

    def surface_text(self) -> str:
        return " ".join(t.surface for t in self.tokens)

    def content_indices(self) -> list[int]:
        return [t.index for t in self.tokens if t.is_content]


@dataclass(frozen=True)
class SentencePair:
    """A non-canonical sentence with its canonical paraphrase.

    ``freq_words`` optionally overrides the word set used for frequency
    profiling (defaults to the masked tokens of the non-canonical member).
    ``substitutions`` maps non-canonical content surfaces to the canonical
    surface that replaces them; ``added_words`` lists surfaces present only
    in the canonical version.
    """

    noncanonical: Sentence
    canonical: Sentence
    freq_words: tuple[str, ...] | None = None
    substitutions: dict[str, str] = field(default_factory=dict)
    added_words: tuple[str, ...] = ()
    notes: str = ""

    @property
    def label(self) -> str:
        return self.noncanonical.id

    @property
    def number(self) -> int:
        return pair_number(self.noncanonical.id)


@dataclass
class Corpus:
    sentences: dict[str, Sentence]
    pairs: list[SentencePair]

    def sentence(self, sentence_id: str) -> Sentence:
        try:
            return self.sentences[sentence_id]
        except KeyError:
            raise CorpusFormatError(f"unknown sentence id {sentence_id!r}") from None

    def ordered_sentences(self) -> list[Sentence]:
        return [self.sentences[sid] for sid in sorted(self.sentences, key=sentence_sort_key)]


def pair_number(sentence_id: str) -> int:
    """Numeric prefix of a pair-style id; -1 for non-numeric prefixes."""
    prefix = sentence_id.split(".", 1)[0]
    try:
        return int(prefix)
    except ValueError:
        return -1


def sentence_sort_key(sentence_id: str) -> tuple[int, int, str]:
    number = pair_number(sentence_id)
    return (0 if number >= 0 else 1, number, sentence_id)


def _expected_structure(sentence_id: str) -> Structure:
    return Structure.CANONICAL if sentence_id.endswith("c") else Structure.NON_CANONICAL


def _expected_domain(sentence_id: str) -> Domain:
    stem = sentence_id[:-1] if sentence_id.endswith("c") else sentence_id
    letter = stem.rsplit(".", 1)[-1]
    if letter == "A":
        return Domain.POETRY
    if letter == "B":
        return Domain.NEWSWIRE
    raise CorpusFormatError(
        f"sentence id {sentence_id!r} does not end in a domain letter A or B"
    )


def _parse_token(raw: dict, index: int, sentence_id: str) -> Token:
    try:
        surface = raw["surface"]
        pos = raw["pos"]
        is_content = raw["is_content"]
    except KeyError as missing:
        raise CorpusFormatError(
            f"sentence {sentence_id}: token {index} lacks key {missing}"
        ) from None
    if not isinstance(surface, str) or not surface:
        raise CorpusFormatError(f"sentence {sentence_id}: token {index} surface invalid")
    if not isinstance(is_content, bool):
        raise CorpusFormatError(f"sentence {sentence_id}: token {index} is_content not bool")
    return Token(
        surface=surface,
        pos=str(pos),
        is_content=is_content,
        index=index,
        is_elided=bool(raw.get("is_elided", False)),
        phrase=raw.get("phrase"),
    )


def _parse_sentence(raw: dict) -> Sentence:
    sentence_id = raw.get("id")
    if not isinstance(sentence_id, str) or "." not in sentence_id:
        raise CorpusFormatError(f"invalid sentence id {sentence_id!r}")
    try:
        domain = Domain(raw["domain"])
        structure = Structure(raw["structure"])
    except (KeyError, ValueError) as exc:
        raise CorpusFormatError(f"sentence {sentence_id}: {exc}") from None
    if structure is not _expected_structure(sentence_id):
        raise CorpusFormatError(
            f"sentence {sentence_id}: structure {structure.value} clashes with id suffix"
        )
    if domain is not _expected_domain(sentence_id):
        raise CorpusFormatError(
            f"sentence {sentence_id}: domain {domain.value} clashes with id letter"
        )
    labels_raw = raw.get("ncs_labels", [])
    try:
        labels = tuple(NcsLabel(value) for value in labels_raw)
    except ValueError as exc:
        raise CorpusFormatError(f"sentence {sentence_id}: {exc}") from None
    if structure is Structure.CANONICAL and labels:
        raise CorpusFormatError(f"sentence {sentence_id}: canonical sentence carries labels")
    if structure is Structure.NON_CANONICAL and not labels:
        raise CorpusFormatError(f"sentence {sentence_id}: non-canonical sentence lacks labels")
    tokens_raw = raw.get("tokens")
    if not isinstance(tokens_raw, list) or not tokens_raw:
        raise CorpusFormatError(f"sentence {sentence_id}: empty token list")
    tokens = tuple(_parse_token(t, i, sentence_id) for i, t in enumerate(tokens_raw))
    return Sentence(
        id=sentence_id, domain=domain, structure=structure, tokens=tokens, ncs_labels=labels
    )


def _check_containment(pair: SentencePair) -> None:
    canonical_surfaces = {t.surface.casefold() for t in pair.canonical.tokens}
    substitutions = {k.casefold(): v.casefold() for k, v in pair.substitutions.items()}
    for token in pair.noncanonical.tokens:
        if not token.is_content:
            continue
        folded = token.surface.casefold()
        target = substitutions.get(folded, folded)
        if target not in canonical_surfaces:
            raise CorpusFormatError(
                f"pair {pair.label}: content word {token.surface!r} missing from "
                "canonical version and not covered by a substitution"
            )


def _parse_pair(raw: dict, sentences: dict[str, Sentence]) -> SentencePair:
    nc_id = raw.get("noncanonical")
    canon_id = raw.get("canonical")
    for sid in (nc_id, canon_id):
        if sid not in sentences:
            raise CorpusFormatError(f"pair references unknown sentence {sid!r}")
    if canon_id != f"{nc_id}c":
        raise CorpusFormatError(
            f"pair {nc_id!r}/{canon_id!r}: canonical id must be the non-canonical id plus 'c'"
        )
    noncanonical = sentences[nc_id]
    canonical = sentences[canon_id]
    if noncanonical.structure is not Structure.NON_CANONICAL:
        raise CorpusFormatError(f"pair {nc_id}: first member is not non-canonical")
    if canonical.structure is not Structure.CANONICAL:
        raise CorpusFormatError(f"pair {canon_id}: second member is not canonical")
    if noncanonical.domain is not canonical.domain:
        raise CorpusFormatError(f"pair {nc_id}: members disagree on domain")
    freq_words_raw = raw.get("freq_words")
    freq_words = tuple(freq_words_raw) if freq_words_raw is not None else None
    pair = SentencePair(
        noncanonical=noncanonical,
        canonical=canonical,
        freq_words=freq_words,
        substitutions=dict(raw.get("substitutions", {})),
        added_words=tuple(raw.get("added_words", ())),
        notes=str(raw.get("notes", "")),
    )
    _check_containment(pair)
    return pair


def load_corpus(path: str | Path) -> Corpus:
    """Load and validate a corpus JSON file of sentences and pairs."""
    try:
        payload = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise CorpusFormatError(f"corpus is not valid JSON: {exc}") from None
    if not isinstance(payload, dict):
        raise CorpusFormatError("corpus top level must be an object")
    sentences: dict[str, Sentence] = {}
    for raw in payload.get("sentences", []):
        sentence = _parse_sentence(raw)
        if sentence.id in sentences:
            raise CorpusFormatError(f"duplicate sentence id {sentence.id!r}")
        sentences[sentence.id] = sentence
    pairs = [_parse_pair(raw, sentences) for raw in payload.get("pairs", [])]
    return Corpus(sentences=sentences, pairs=pairs)


@dataclass(frozen=True)
class ContentOnly:
    """Mask every content token."""


@dataclass(frozen=True)
class ContentPlusListedFunction:
    """Mask every content token plus the listed function-token indices."""

    function_indices: tuple[int, ...] = ()


MaskPolicy = Union[ContentOnly, ContentPlusListedFunction]


@dataclass(frozen=True)
class MaskPlan:
    sentence_id: str
    indices: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.indices:
            raise CorpusFormatError(f"plan for {self.sentence_id}: no indices")
        if list(self.indices) != sorted(set(self.indices)):
            raise CorpusFormatError(
                f"plan for {self.sentence_id}: indices must be sorted and unique"
            )


def make_mask_plan(sentence: Sentence, policy: MaskPolicy) -> MaskPlan:
    """Derive the masked positions of a sentence under a policy.

    Raises:
        CorpusFormatError: when a listed function index is out of range,
            points at a content token, or points at punctuation.
    """
    indices = set(sentence.content_indices())
    if isinstance(policy, ContentPlusListedFunction):
        for index in policy.function_indices:
            if index < 0 or index >= len(sentence.tokens):
                raise CorpusFormatError(
                    f"plan for {sentence.id}: function index {index} out of range"
                )
            token = sentence.tokens[index]
            if token.is_content:
                raise CorpusFormatError(
                    f"plan for {sentence.id}: index {index} ({token.surface!r}) "
                    "is a content token, not function"
                )
            if token.is_punctuation():
                raise CorpusFormatError(
                    f"plan for {sentence.id}: index {index} is punctuation; "
                    "punctuation is never masked"
                )
            indices.add(index)
    return MaskPlan(sentence_id=sentence.id, indices=tuple(sorted(indices)))


def load_plans(path: str | Path, corpus: Corpus) -> dict[str, MaskPlan]:
    """Load a plans file: a policy name plus per-sentence function indices.

    Format: ``{"policy": "content_plus_listed_function",
    "function_indices": {"1.B": [0, 5, 12], ...}}`` or
    ``{"policy": "content_only"}``.  Plans are built for every sentence in
    the corpus.
    """
    try:
        payload = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise CorpusFormatError(f"plans file is not valid JSON: {exc}") from None
    policy_name = payload.get("policy")
    per_sentence = payload.get("function_indices", {})
    plans: dict[str, MaskPlan] = {}
    for sentence in corpus.sentences.values():
        if policy_name == "content_only":
            policy: MaskPolicy = ContentOnly()
        elif policy_name == "content_plus_listed_function":
            listed = per_sentence.get(sentence.id, [])
            policy = ContentPlusListedFunction(function_indices=tuple(listed))
        else:
            raise CorpusFormatError(f"unknown mask policy {policy_name!r}")
        plans[sentence.id] = make_mask_plan(sentence, policy)
    return plans


def masked_tokens(sentence: Sentence, plan: MaskPlan) -> Iterable[Token]:
    for index in plan.indices:
        yield sentence.tokens[index]
