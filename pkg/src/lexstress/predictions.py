"""Prediction record wire format: JSONL with a header line.

The first line is a header object carrying ``format_version`` (currently
``"1"``), ``model_id`` and ``k``; extra header keys are preserved.  Every
following line is one record::

    {"sentence_id": "1.B", "mask_index": 5, "gold_surface": "...",
     "candidates": [{"surface": "...", "score": 0.287,
                     "is_subword_continuation": false,
                     "is_special_token": false}, ...]}

Records may carry ``gold_variants`` (acceptable morphological variants of
the gold surface) and ``multi_piece`` (the gold tokenizes to more than one
piece under the producing model).  Candidates are ranked 1..k in file
order; scores must be non-increasing and every record must list exactly
``k`` candidates.  Scores are opaque model affinities and parse as floats
at full precision.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator

from lexstress.corpus import Corpus, MaskPlan

FORMAT_VERSION = "1"


class RecordFormatError(ValueError):
    """Raised for malformed prediction record input."""


@dataclass(frozen=True)
class Candidate:
    surface: str
    score: float
    rank: int
    is_subword_continuation: bool = False
    is_special_token: bool = False

    def __post_init__(self) -> None:
        if self.is_special_token and self.is_subword_continuation:
            raise RecordFormatError(
                f"candidate {self.surface!r}: special tokens are never subword continuations"
            )
        if self.rank < 1:
            raise RecordFormatError(f"candidate {self.surface!r}: rank must be 1-based")
        if not math.isfinite(self.score):
            raise RecordFormatError(f"candidate {self.surface!r}: non-finite score")


@dataclass(frozen=True)
class PredictionRecord:
    sentence_id: str
    mask_index: int
    gold_surface: str
    candidates: tuple[Candidate, ...]
    gold_variants: tuple[str, ...] = ()
    multi_piece: bool = False

    @property
    def key(self) -> tuple[str, int]:
        return (self.sentence_id, self.mask_index)

    def rank_one(self) -> Candidate:
        return self.candidates[0]


@dataclass
class PredictionSet:
    model_id: str
    k: int
    records: list[PredictionRecord] = field(default_factory=list)
    header_extras: dict = field(default_factory=dict)

    def by_key(self) -> dict[tuple[str, int], PredictionRecord]:
        return {record.key: record for record in self.records}

    def __len__(self) -> int:
        return len(self.records)


def _parse_candidate(raw: dict, rank: int, line_no: int) -> Candidate:
    try:
        surface = raw["surface"]
        score = raw["score"]
    except (KeyError, TypeError):
        raise RecordFormatError(f"line {line_no}: candidate {rank} lacks surface/score") from None
    if not isinstance(surface, str):
        raise RecordFormatError(f"line {line_no}: candidate {rank} surface not a string")
    if isinstance(score, bool) or not isinstance(score, (int, float)):
        raise RecordFormatError(f"line {line_no}: candidate {rank} score not numeric")
    return Candidate(
        surface=surface,
        score=float(score),
        rank=rank,
        is_subword_continuation=bool(raw.get("is_subword_continuation", False)),
        is_special_token=bool(raw.get("is_special_token", False)),
    )


def _parse_record(raw: dict, k: int, line_no: int) -> PredictionRecord:
    for key in ("sentence_id", "mask_index", "gold_surface", "candidates"):
        if key not in raw:
            raise RecordFormatError(f"line {line_no}: record lacks key {key!r}")
    candidates_raw = raw["candidates"]
    if not isinstance(candidates_raw, list):
        raise RecordFormatError(f"line {line_no}: candidates must be a list")
    if len(candidates_raw) != k:
        raise RecordFormatError(
            f"line {line_no}: expected {k} candidates, got {len(candidates_raw)}"
        )
    candidates = tuple(
        _parse_candidate(c, rank, line_no) for rank, c in enumerate(candidates_raw, start=1)
    )
    for earlier, later in zip(candidates, candidates[1:]):
        if later.score > earlier.score:
            raise RecordFormatError(
                f"line {line_no}: scores increase from rank {earlier.rank} "
                f"({earlier.score}) to rank {later.rank} ({later.score})"
            )
    mask_index = raw["mask_index"]
    if isinstance(mask_index, bool) or not isinstance(mask_index, int) or mask_index < 0:
        raise RecordFormatError(f"line {line_no}: mask_index must be a non-negative integer")
    return PredictionRecord(
        sentence_id=str(raw["sentence_id"]),
        mask_index=mask_index,
        gold_surface=str(raw["gold_surface"]),
        candidates=candidates,
        gold_variants=tuple(raw.get("gold_variants", ())),
        multi_piece=bool(raw.get("multi_piece", False)),
    )


def parse_records(source: str | Path | Iterable[str]) -> PredictionSet:
    """Parse a JSONL prediction stream into a validated record set.

    Raises:
        RecordFormatError: missing or malformed header; a record with the
            wrong candidate count; scores out of non-increasing order; a
            duplicated (sentence_id, mask_index) key.
    """
    if isinstance(source, (str, Path)):
        lines: Iterator[str] = iter(
            Path(source).read_text(encoding="utf-8").splitlines()
        )
    else:
        lines = iter(source)
    header_line = next(lines, None)
    if header_line is None or not header_line.strip():
        raise RecordFormatError("line 1: missing header")
    try:
        header = json.loads(header_line)
    except json.JSONDecodeError as exc:
        raise RecordFormatError(f"line 1: header is not valid JSON: {exc}") from None
    if not isinstance(header, dict) or "format_version" not in header:
        raise RecordFormatError("line 1: header must carry format_version")
    if str(header["format_version"]) != FORMAT_VERSION:
        raise RecordFormatError(
            f"line 1: unsupported format_version {header['format_version']!r}"
        )
    if "model_id" not in header or "k" not in header:
        raise RecordFormatError("line 1: header must carry model_id and k")
    k = header["k"]
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise RecordFormatError(f"line 1: k must be a positive integer, got {k!r}")
    extras = {
        key: value
        for key, value in header.items()
        if key not in ("format_version", "model_id", "k")
    }
    result = PredictionSet(model_id=str(header["model_id"]), k=k, header_extras=extras)
    seen: dict[tuple[str, int], int] = {}
    for line_no, line in enumerate(lines, start=2):
        if not line.strip():
            continue
        try:
            raw = json.loads(line)
        except json.JSONDecodeError as exc:
            raise RecordFormatError(f"line {line_no}: not valid JSON: {exc}") from None
        record = _parse_record(raw, k, line_no)
        if record.key in seen:
            raise RecordFormatError(
                f"line {line_no}: duplicate record for {record.key}, "
                f"first seen on line {seen[record.key]}"
            )
        seen[record.key] = line_no
        result.records.append(record)
    return result


def _candidate_payload(candidate: Candidate) -> dict:
    return {
        "surface": candidate.surface,
        "score": candidate.score,
        "is_subword_continuation": candidate.is_subword_continuation,
        "is_special_token": candidate.is_special_token,
    }


def _record_payload(record: PredictionRecord) -> dict:
    payload: dict = {
        "sentence_id": record.sentence_id,
        "mask_index": record.mask_index,
        "gold_surface": record.gold_surface,
        "candidates": [_candidate_payload(c) for c in record.candidates],
    }
    if record.gold_variants:
        payload["gold_variants"] = list(record.gold_variants)
    if record.multi_piece:
        payload["multi_piece"] = True
    return payload


def write_records(predictions: PredictionSet, path: str | Path) -> None:
    """Serialize a record set back to JSONL, preserving score precision."""
    header: dict = {
        "format_version": FORMAT_VERSION,
        "model_id": predictions.model_id,
        "k": predictions.k,
    }
    header.update(predictions.header_extras)
    lines = [json.dumps(header, ensure_ascii=False)]
    lines.extend(
        json.dumps(_record_payload(record), ensure_ascii=False)
        for record in predictions.records
    )
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")


@dataclass
class ValidationReport:
    """Outcome of checking records against mask plans; never raises."""

    missing: list[tuple[str, int]] = field(default_factory=list)
    spurious: list[tuple[str, int]] = field(default_factory=list)
    gold_mismatches: list[tuple[str, int, str, str]] = field(default_factory=list)

    @property
    def has_findings(self) -> bool:
        return bool(self.missing or self.spurious or self.gold_mismatches)

    def summary(self) -> str:
        return (
            f"missing={len(self.missing)} spurious={len(self.spurious)} "
            f"gold_mismatches={len(self.gold_mismatches)}"
        )


def validate_against_plan(
    predictions: PredictionSet, corpus: Corpus, plans: dict[str, MaskPlan]
) -> ValidationReport:
    """Compare a record set against the planned masks of a corpus.

    Reports planned slots without a record (missing), records for slots no
    plan asked for (spurious), and records whose gold surface disagrees
    with the corpus token at that position.
    """
    report = ValidationReport()
    by_key = predictions.by_key()
    planned: set[tuple[str, int]] = set()
    for sentence_id, plan in sorted(plans.items(), key=lambda item: item[0]):
        for index in plan.indices:
            planned.add((sentence_id, index))
            if (sentence_id, index) not in by_key:
                report.missing.append((sentence_id, index))
    for record in predictions.records:
        if record.key not in planned:
            report.spurious.append(record.key)
            continue
        sentence = corpus.sentences.get(record.sentence_id)
        if sentence is None:
            continue
        expected = sentence.tokens[record.mask_index].surface
        if expected != record.gold_surface:
            report.gold_mismatches.append(
                (record.sentence_id, record.mask_index, expected, record.gold_surface)
            )
    return report
