"""Report bundle assembly and deterministic rendering.

A bundle gathers every aggregate the pipeline produces: accuracy,
recognized-word typology, per-domain pair comparisons with ratio
summaries, the best-prediction extraction, per-sentence predictability,
the out-of-vocabulary census and plan-validation findings.  Renderers
emit Markdown, per-table CSV and JSON; output is byte-identical across
runs (UTF-8, LF line endings, fully ordered iteration).

Percentages render with two decimals and ratios with three; scores keep
five decimal places in tables while the JSON bundle stores full-precision
values that round-trip exactly.
"""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from lexstress.analysis import (
    MaskOutcome,
    MatchPolicy,
    evaluate_records,
    reassemble_subword,
)
from lexstress.corpus import Corpus, MaskPlan, sentence_sort_key
from lexstress.lexicon import Lexicon
from lexstress.metrics import (
    BestPredictionRow,
    ComparisonRow,
    RatioSummary,
    TypologyCounts,
    accuracy_at_k,
    best_predictions_table,
    comparison_row,
    predictability_by_sentence,
    ratio_summary,
    typology_table,
)
from lexstress.predictions import PredictionSet, ValidationReport, validate_against_plan


class ReportError(ValueError):
    pass


@dataclass(frozen=True)
class ReferenceCheck:
    """Stated reference totals compared against row-derived totals."""

    domain: str
    stated_noncanon: int
    stated_canon: int
    stated_structure_ratio: float
    derived_noncanon: int
    derived_canon: int
    derived_structure_ratio: float

    @property
    def consistent(self) -> bool:
        return (
            self.stated_noncanon == self.derived_noncanon
            and self.stated_canon == self.derived_canon
            and abs(self.stated_structure_ratio - self.derived_structure_ratio) < 0.0005
        )


@dataclass
class DomainComparison:
    domain: str
    rows: list[ComparisonRow]
    summary: RatioSummary
    reference: ReferenceCheck | None = None


@dataclass
class CensusEntry:
    sentence_id: str
    mask_index: int
    gold: str
    label: str
    units: list[str]
    reassembled: list[str]
    legal: list[str]
    full_words: list[str]
    specials: list[str]


@dataclass
class ReportBundle:
    model_id: str
    k: int
    match_policy: str
    banding_mode: str
    table6_threshold: float
    n_outcomes: int
    n_recognized: int
    accuracy_pct: float
    typology: TypologyCounts
    comparisons: list[DomainComparison]
    best_rows: list[BestPredictionRow]
    predictability: list[tuple[str, float]]
    census: list[CensusEntry]
    validation_missing: list[tuple[str, int]]
    validation_spurious: list[tuple[str, int]]
    validation_gold_mismatches: list[tuple[str, int, str, str]]
    flags: list[str] = field(default_factory=list)

    @property
    def has_validation_findings(self) -> bool:
        return bool(
            self.validation_missing
            or self.validation_spurious
            or self.validation_gold_mismatches
        )


def build_census(
    predictions: PredictionSet,
    corpus: Corpus,
    lexicon: Lexicon,
    policy: MatchPolicy,
    outcomes: list[MaskOutcome],
) -> list[CensusEntry]:
    """Detail every non-recognized record: pieces, reassemblies, full words."""
    by_key = predictions.by_key()
    entries: list[CensusEntry] = []
    for outcome in outcomes:
        if outcome.recognized:
            continue
        record = by_key[(outcome.sentence_id, outcome.mask_index)]
        sentence = corpus.sentence(outcome.sentence_id)
        left = (
            sentence.tokens[record.mask_index - 1].surface if record.mask_index > 0 else ""
        )
        units: list[str] = []
        reassembled: list[str] = []
        legal: list[str] = []
        full_words: list[str] = []
        specials: list[str] = []
        for candidate in record.candidates:
            if candidate.is_special_token:
                specials.append(candidate.surface)
            elif candidate.is_subword_continuation:
                units.append(candidate.surface)
                word = reassemble_subword(left, candidate)
                reassembled.append(word)
                if lexicon.is_legal_word(word):
                    legal.append(word)
            else:
                full_words.append(candidate.surface)
        entries.append(
            CensusEntry(
                sentence_id=outcome.sentence_id,
                mask_index=outcome.mask_index,
                gold=outcome.gold_surface,
                label=outcome.case_label.value,
                units=units,
                reassembled=reassembled,
                legal=legal,
                full_words=full_words,
                specials=specials,
            )
        )
    entries.sort(key=lambda e: (sentence_sort_key(e.sentence_id), e.mask_index))
    return entries


def _parallel_outcomes(
    predictions: PredictionSet,
    corpus: Corpus,
    lexicon: Lexicon,
    policy: MatchPolicy,
    pos_lookup: dict[str, str],
    workers: int,
) -> list[MaskOutcome]:
    if workers <= 1 or len(predictions.records) < 2:
        return evaluate_records(predictions, corpus, lexicon, policy, pos_lookup)
    chunks = [predictions.records[i::workers] for i in range(workers)]
    outcomes: list[MaskOutcome] = []
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [
            pool.submit(
                evaluate_records, predictions, corpus, lexicon, policy, pos_lookup, chunk
            )
            for chunk in chunks
            if chunk
        ]
        for future in futures:
            outcomes.extend(future.result())
    outcomes.sort(key=lambda o: (o.sentence_id, o.mask_index))
    return outcomes


def load_reference_totals(path: str | Path) -> dict[str, dict]:
    payload = json.loads(Path(path).read_text(encoding="utf-8"))
    if not isinstance(payload, dict):
        raise ReportError("reference totals file must be a JSON object")
    return payload


def build_bundle(
    corpus: Corpus,
    predictions: PredictionSet,
    lexicon: Lexicon,
    plans: dict[str, MaskPlan],
    policy: MatchPolicy,
    pos_lookup: dict[str, str],
    table6_threshold: float = 0.5,
    k_limit: int | None = None,
    workers: int = 1,
    reference_totals: dict[str, dict] | None = None,
) -> ReportBundle:
    """Run the full aggregation pipeline over one record set."""
    outcomes = _parallel_outcomes(predictions, corpus, lexicon, policy, pos_lookup, workers)
    validation = validate_against_plan(predictions, corpus, plans)

    k = min(k_limit, predictions.k) if k_limit else predictions.k
    accuracy = accuracy_at_k(outcomes, k) if outcomes else 0.0
    typology = typology_table(outcomes)

    by_id = {o.sentence_id: True for o in outcomes}
    outcome_map: dict[str, list[MaskOutcome]] = {}
    for outcome in outcomes:
        outcome_map.setdefault(outcome.sentence_id, []).append(outcome)

    comparisons: list[DomainComparison] = []
    flags: list[str] = []
    for domain in ("Poetry", "Newswire"):
        rows: list[ComparisonRow] = []
        for pair in sorted(corpus.pairs, key=lambda p: sentence_sort_key(p.label)):
            if pair.noncanonical.domain.value != domain:
                continue
            if pair.noncanonical.id not in by_id and pair.canonical.id not in by_id:
                continue
            plan = plans[pair.noncanonical.id]
            rows.append(
                comparison_row(
                    pair,
                    plan,
                    outcome_map.get(pair.noncanonical.id, []),
                    outcome_map.get(pair.canonical.id, []),
                    lexicon,
                )
            )
        if not rows:
            continue
        summary = ratio_summary(rows)
        reference = None
        stated = (reference_totals or {}).get(domain.lower())
        if stated:
            reference = ReferenceCheck(
                domain=domain,
                stated_noncanon=int(stated["noncanon_recognized"]),
                stated_canon=int(stated["canon_recognized"]),
                stated_structure_ratio=float(stated["structure_ratio"]),
                derived_noncanon=summary.total_noncanon,
                derived_canon=summary.total_canon,
                derived_structure_ratio=summary.structure_ratio,
            )
            if not reference.consistent:
                flags.append(
                    f"{domain}: stated reference totals "
                    f"{reference.stated_noncanon}/{reference.stated_canon} "
                    f"(ratio {reference.stated_structure_ratio:.3f}) disagree with "
                    f"row-derived totals {reference.derived_noncanon}/"
                    f"{reference.derived_canon} (ratio "
                    f"{reference.derived_structure_ratio:.3f})"
                )
        comparisons.append(
            DomainComparison(domain=domain, rows=rows, summary=summary, reference=reference)
        )

    for outcome in outcomes:
        if outcome.profile_tally_empty:
            flags.append(
                f"category profile tally empty for "
                f"{outcome.sentence_id}@{outcome.mask_index}"
            )

    predictability = sorted(
        predictability_by_sentence(outcomes).items(),
        key=lambda item: sentence_sort_key(item[0]),
    )
    census = build_census(predictions, corpus, lexicon, policy, outcomes)
    policy_text = policy.base.value + (
        "+morph_variants" if policy.count_morph_variants else ""
    )
    return ReportBundle(
        model_id=predictions.model_id,
        k=k,
        match_policy=policy_text,
        banding_mode=lexicon.mode.value,
        table6_threshold=table6_threshold,
        n_outcomes=len(outcomes),
        n_recognized=typology.recognized,
        accuracy_pct=accuracy * 100,
        typology=typology,
        comparisons=comparisons,
        best_rows=best_predictions_table(outcomes, corpus, table6_threshold),
        predictability=[(sid, value) for sid, value in predictability],
        census=census,
        validation_missing=list(validation.missing),
        validation_spurious=list(validation.spurious),
        validation_gold_mismatches=list(validation.gold_mismatches),
        flags=flags,
    )


def validation_report(bundle: ReportBundle) -> ValidationReport:
    return ValidationReport(
        missing=list(bundle.validation_missing),
        spurious=list(bundle.validation_spurious),
        gold_mismatches=list(bundle.validation_gold_mismatches),
    )


def _pct(value: float) -> str:
    return f"{value:.2f}%"


def _ratio(value: float) -> str:
    return f"{value:.3f}"


def _score(value: float | None) -> str:
    return "" if value is None else f"{value:.5f}"


def _md_table(headers: list[str], rows: list[list[str]]) -> list[str]:
    lines = ["| " + " | ".join(headers) + " |"]
    lines.append("|" + "|".join(" --- " for _ in headers) + "|")
    for row in rows:
        lines.append("| " + " | ".join(row) + " |")
    return lines


def _census_lines(entry: CensusEntry) -> list[str]:
    head = (
        f"- `{entry.gold}` ({entry.sentence_id}@{entry.mask_index}) "
        f"[{entry.label}]"
    )
    parts = [f"SUBWORD UNITS = {', '.join(entry.units) if entry.units else '(none)'}"]
    if entry.reassembled:
        parts.append(f"// {', '.join(entry.reassembled)}")
    if entry.legal:
        parts.append(f"BUT--- {', '.join(entry.legal)}")
    if entry.full_words:
        parts.append(f"FULL--- {', '.join(entry.full_words)}")
    if entry.specials:
        parts.append(f"SPECIAL--- {', '.join(entry.specials)}")
    return [head, "  " + " ".join(parts)]


def render_markdown(bundle: ReportBundle) -> bytes:
    lines: list[str] = []
    lines.append("# Masked-prediction stress report")
    lines.append("")
    lines.append(
        f"Model: `{bundle.model_id}` | k={bundle.k} | match: {bundle.match_policy} "
        f"| banding: {bundle.banding_mode}"
    )
    lines.append("")
    lines.append("## Accuracy")
    lines.append("")
    lines.extend(
        _md_table(
            ["Masked words", "Recognized", f"Accuracy at k={bundle.k}"],
            [[str(bundle.n_outcomes), str(bundle.n_recognized), _pct(bundle.accuracy_pct)]],
        )
    )
    lines.append("")
    lines.append("## Recognized-word typology")
    lines.append("")
    t = bundle.typology
    lines.extend(
        _md_table(
            [
                "Recognized",
                "Function words",
                "Within first 3",
                "Function within first 3",
                "Content words",
                "Content share",
            ],
            [
                [
                    str(t.recognized),
                    str(t.recognized_function),
                    str(t.in_first_three),
                    str(t.in_first_three_function),
                    str(t.recognized_content),
                    _pct(t.content_ratio * 100),
                ]
            ],
        )
    )
    for comparison in bundle.comparisons:
        lines.append("")
        lines.append(f"## Pair comparison: {comparison.domain}")
        lines.append("")
        rows = [
            [
                row.label,
                row.words_cell(),
                str(row.noncanon_recognized),
                str(row.canon_recognized),
                str(row.high),
                row.low_cell(),
            ]
            for row in comparison.rows
        ]
        s = comparison.summary
        totals = ComparisonRow(
            label="totals",
            n_words=s.total_words,
            n_masked=s.total_masked,
            noncanon_recognized=s.total_noncanon,
            canon_recognized=s.total_canon,
            high=s.total_high,
            low=s.total_low,
            beyond=s.total_beyond,
        )
        rows.append(
            [
                "totals",
                totals.words_cell(),
                str(totals.noncanon_recognized),
                str(totals.canon_recognized),
                str(totals.high),
                totals.low_cell(),
            ]
        )
        rows.append(
            [
                "ratios",
                _ratio(s.masked_ratio),
                _ratio(s.structure_ratio),
                "",
                "",
                _ratio(s.lowfreq_ratio),
            ]
        )
        lines.extend(
            _md_table(
                [
                    "Pair",
                    "No. Words/Masked",
                    "Recognized NonCanonical",
                    "Recognized Canonical",
                    "High Freq. Words",
                    "Low Freq. Words",
                ],
                rows,
            )
        )
        if comparison.reference is not None:
            ref = comparison.reference
            verdict = "consistent" if ref.consistent else "MISMATCH"
            lines.append("")
            lines.append(
                f"Reference totals check ({verdict}): stated "
                f"{ref.stated_noncanon}/{ref.stated_canon} ratio "
                f"{_ratio(ref.stated_structure_ratio)}, row-derived "
                f"{ref.derived_noncanon}/{ref.derived_canon} ratio "
                f"{_ratio(ref.derived_structure_ratio)}"
            )
    lines.append("")
    lines.append(f"## Best predictions (score > {bundle.table6_threshold:g})")
    lines.append("")
    lines.extend(
        _md_table(
            ["Pair", "Word", "NonCanonical", "Canonical", "Phrase", "Type"],
            [
                [
                    row.pair_label,
                    row.gold,
                    _score(row.noncanon_score),
                    _score(row.canon_score),
                    row.phrase,
                    row.lexical_type,
                ]
                for row in bundle.best_rows
            ],
        )
    )
    lines.append("")
    lines.append("## Sentence predictability")
    lines.append("")
    lines.extend(
        _md_table(
            ["Sentence", "Sum of effective scores"],
            [[sid, f"{value:.5f}"] for sid, value in bundle.predictability],
        )
    )
    lines.append("")
    lines.append("## Out-of-vocabulary census")
    lines.append("")
    if bundle.census:
        for entry in bundle.census:
            lines.extend(_census_lines(entry))
    else:
        lines.append("No unrecognized records.")
    lines.append("")
    lines.append("## Validation")
    lines.append("")
    lines.append(
        f"missing={len(bundle.validation_missing)} "
        f"spurious={len(bundle.validation_spurious)} "
        f"gold_mismatches={len(bundle.validation_gold_mismatches)}"
    )
    for sid, idx in bundle.validation_missing:
        lines.append(f"- missing record for {sid}@{idx}")
    for sid, idx in bundle.validation_spurious:
        lines.append(f"- spurious record for {sid}@{idx}")
    for sid, idx, expected, got in bundle.validation_gold_mismatches:
        lines.append(f"- gold mismatch at {sid}@{idx}: corpus {expected!r}, record {got!r}")
    lines.append("")
    lines.append("## Flags")
    lines.append("")
    if bundle.flags:
        for flag in bundle.flags:
            lines.append(f"- {flag}")
    else:
        lines.append("None.")
    lines.append("")
    return "\n".join(lines).encode("utf-8")


def _csv_bytes(headers: list[str], rows: list[list[str]]) -> bytes:
    buffer = io.StringIO()
    writer = csv.writer(buffer, quoting=csv.QUOTE_ALL, lineterminator="\n")
    writer.writerow(headers)
    writer.writerows(rows)
    return buffer.getvalue().encode("utf-8")


def render_csv_tables(bundle: ReportBundle) -> dict[str, bytes]:
    """One CSV document per table, keyed by table name."""
    tables: dict[str, bytes] = {}
    tables["accuracy"] = _csv_bytes(
        ["masked_words", "recognized", "accuracy_pct", "k"],
        [[str(bundle.n_outcomes), str(bundle.n_recognized), _pct(bundle.accuracy_pct), str(bundle.k)]],
    )
    t = bundle.typology
    tables["typology"] = _csv_bytes(
        [
            "recognized",
            "recognized_function",
            "in_first_three",
            "in_first_three_function",
            "recognized_content",
            "content_share_pct",
        ],
        [
            [
                str(t.recognized),
                str(t.recognized_function),
                str(t.in_first_three),
                str(t.in_first_three_function),
                str(t.recognized_content),
                _pct(t.content_ratio * 100),
            ]
        ],
    )
    for comparison in bundle.comparisons:
        rows = [
            [
                row.label,
                row.words_cell(),
                str(row.noncanon_recognized),
                str(row.canon_recognized),
                str(row.high),
                row.low_cell(),
            ]
            for row in comparison.rows
        ]
        s = comparison.summary
        rows.append(
            [
                "totals",
                f"{s.total_words}/{s.total_masked}",
                str(s.total_noncanon),
                str(s.total_canon),
                str(s.total_high),
                f"{s.total_low}/{s.total_beyond}" if s.total_beyond else str(s.total_low),
            ]
        )
        rows.append(
            [
                "ratios",
                _ratio(s.masked_ratio),
                _ratio(s.structure_ratio),
                "",
                "",
                _ratio(s.lowfreq_ratio),
            ]
        )
        tables[f"comparison_{comparison.domain.lower()}"] = _csv_bytes(
            [
                "pair",
                "words_masked",
                "recognized_noncanonical",
                "recognized_canonical",
                "high_freq_words",
                "low_freq_words",
            ],
            rows,
        )
    tables["best_predictions"] = _csv_bytes(
        ["pair", "word", "noncanonical", "canonical", "phrase", "type"],
        [
            [
                row.pair_label,
                row.gold,
                _score(row.noncanon_score),
                _score(row.canon_score),
                row.phrase,
                row.lexical_type,
            ]
            for row in bundle.best_rows
        ],
    )
    tables["predictability"] = _csv_bytes(
        ["sentence", "predictability"],
        [[sid, f"{value:.5f}"] for sid, value in bundle.predictability],
    )
    tables["census"] = _csv_bytes(
        ["sentence", "mask_index", "gold", "label", "units", "reassembled", "legal", "full_words", "specials"],
        [
            [
                e.sentence_id,
                str(e.mask_index),
                e.gold,
                e.label,
                " ".join(e.units),
                " ".join(e.reassembled),
                " ".join(e.legal),
                " ".join(e.full_words),
                " ".join(e.specials),
            ]
            for e in bundle.census
        ],
    )
    return tables


def bundle_to_json(bundle: ReportBundle) -> dict:
    return {
        "model_id": bundle.model_id,
        "k": bundle.k,
        "match_policy": bundle.match_policy,
        "banding_mode": bundle.banding_mode,
        "table6_threshold": bundle.table6_threshold,
        "accuracy": {
            "masked_words": bundle.n_outcomes,
            "recognized": bundle.n_recognized,
            "accuracy_pct": bundle.accuracy_pct,
        },
        "typology": {
            "recognized": bundle.typology.recognized,
            "recognized_function": bundle.typology.recognized_function,
            "in_first_three": bundle.typology.in_first_three,
            "in_first_three_function": bundle.typology.in_first_three_function,
            "recognized_content": bundle.typology.recognized_content,
            "content_ratio": bundle.typology.content_ratio,
        },
        "comparisons": [
            {
                "domain": c.domain,
                "rows": [
                    {
                        "label": r.label,
                        "n_words": r.n_words,
                        "n_masked": r.n_masked,
                        "noncanon_recognized": r.noncanon_recognized,
                        "canon_recognized": r.canon_recognized,
                        "high": r.high,
                        "low": r.low,
                        "beyond": r.beyond,
                    }
                    for r in c.rows
                ],
                "totals": {
                    "words": c.summary.total_words,
                    "masked": c.summary.total_masked,
                    "noncanon_recognized": c.summary.total_noncanon,
                    "canon_recognized": c.summary.total_canon,
                    "high": c.summary.total_high,
                    "low": c.summary.total_low,
                    "beyond": c.summary.total_beyond,
                },
                "ratios": {
                    "masked": c.summary.masked_ratio,
                    "structure": c.summary.structure_ratio,
                    "lowfreq": c.summary.lowfreq_ratio,
                },
                "reference": None
                if c.reference is None
                else {
                    "stated_noncanon": c.reference.stated_noncanon,
                    "stated_canon": c.reference.stated_canon,
                    "stated_structure_ratio": c.reference.stated_structure_ratio,
                    "derived_noncanon": c.reference.derived_noncanon,
                    "derived_canon": c.reference.derived_canon,
                    "derived_structure_ratio": c.reference.derived_structure_ratio,
                    "consistent": c.reference.consistent,
                },
            }
            for c in bundle.comparisons
        ],
        "best_predictions": {
            "threshold": bundle.table6_threshold,
            "rows": [
                {
                    "pair": r.pair_label,
                    "word": r.gold,
                    "noncanonical": r.noncanon_score,
                    "canonical": r.canon_score,
                    "phrase": r.phrase,
                    "type": r.lexical_type,
                }
                for r in bundle.best_rows
            ],
        },
        "predictability": [
            {"sentence": sid, "value": value} for sid, value in bundle.predictability
        ],
        "census": [
            {
                "sentence": e.sentence_id,
                "mask_index": e.mask_index,
                "gold": e.gold,
                "label": e.label,
                "units": e.units,
                "reassembled": e.reassembled,
                "legal": e.legal,
                "full_words": e.full_words,
                "specials": e.specials,
            }
            for e in bundle.census
        ],
        "validation": {
            "missing": [[sid, idx] for sid, idx in bundle.validation_missing],
            "spurious": [[sid, idx] for sid, idx in bundle.validation_spurious],
            "gold_mismatches": [
                [sid, idx, expected, got]
                for sid, idx, expected, got in bundle.validation_gold_mismatches
            ],
        },
        "flags": list(bundle.flags),
    }


def render_json(bundle: ReportBundle) -> bytes:
    payload = bundle_to_json(bundle)
    return (json.dumps(payload, ensure_ascii=False, indent=2) + "\n").encode("utf-8")


def bundle_from_json(payload: dict) -> ReportBundle:
    """Rebuild a bundle from its JSON form; numeric fields round-trip exactly."""
    typology = TypologyCounts(
        recognized=payload["typology"]["recognized"],
        recognized_function=payload["typology"]["recognized_function"],
        in_first_three=payload["typology"]["in_first_three"],
        in_first_three_function=payload["typology"]["in_first_three_function"],
    )
    comparisons = []
    for raw in payload["comparisons"]:
        rows = [
            ComparisonRow(
                label=r["label"],
                n_words=r["n_words"],
                n_masked=r["n_masked"],
                noncanon_recognized=r["noncanon_recognized"],
                canon_recognized=r["canon_recognized"],
                high=r["high"],
                low=r["low"],
                beyond=r["beyond"],
            )
            for r in raw["rows"]
        ]
        summary = RatioSummary(
            total_words=raw["totals"]["words"],
            total_masked=raw["totals"]["masked"],
            total_noncanon=raw["totals"]["noncanon_recognized"],
            total_canon=raw["totals"]["canon_recognized"],
            total_high=raw["totals"]["high"],
            total_low=raw["totals"]["low"],
            total_beyond=raw["totals"]["beyond"],
        )
        reference = None
        if raw.get("reference"):
            ref = raw["reference"]
            reference = ReferenceCheck(
                domain=raw["domain"],
                stated_noncanon=ref["stated_noncanon"],
                stated_canon=ref["stated_canon"],
                stated_structure_ratio=ref["stated_structure_ratio"],
                derived_noncanon=ref["derived_noncanon"],
                derived_canon=ref["derived_canon"],
                derived_structure_ratio=ref["derived_structure_ratio"],
            )
        comparisons.append(
            DomainComparison(
                domain=raw["domain"], rows=rows, summary=summary, reference=reference
            )
        )
    best_rows = [
        BestPredictionRow(
            pair_label=r["pair"],
            gold=r["word"],
            noncanon_score=r["noncanonical"],
            canon_score=r["canonical"],
            phrase=r["phrase"],
            lexical_type=r["type"],
        )
        for r in payload["best_predictions"]["rows"]
    ]
    census = [
        CensusEntry(
            sentence_id=e["sentence"],
            mask_index=e["mask_index"],
            gold=e["gold"],
            label=e["label"],
            units=list(e["units"]),
            reassembled=list(e["reassembled"]),
            legal=list(e["legal"]),
            full_words=list(e["full_words"]),
            specials=list(e["specials"]),
        )
        for e in payload["census"]
    ]
    return ReportBundle(
        model_id=payload["model_id"],
        k=payload["k"],
        match_policy=payload["match_policy"],
        banding_mode=payload["banding_mode"],
        table6_threshold=payload["table6_threshold"],
        n_outcomes=payload["accuracy"]["masked_words"],
        n_recognized=payload["accuracy"]["recognized"],
        accuracy_pct=payload["accuracy"]["accuracy_pct"],
        typology=typology,
        comparisons=comparisons,
        best_rows=best_rows,
        predictability=[(p["sentence"], p["value"]) for p in payload["predictability"]],
        census=census,
        validation_missing=[tuple(v) for v in payload["validation"]["missing"]],
        validation_spurious=[tuple(v) for v in payload["validation"]["spurious"]],
        validation_gold_mismatches=[
            tuple(v) for v in payload["validation"]["gold_mismatches"]
        ],
        flags=list(payload["flags"]),
    )


def load_bundle(path: str | Path) -> ReportBundle:
    return bundle_from_json(json.loads(Path(path).read_text(encoding="utf-8")))


def write_reports(bundle: ReportBundle, out_dir: str | Path) -> list[Path]:
    """Write report.md, report.json and the per-table CSV files."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []
    md_path = out / "report.md"
    md_path.write_bytes(render_markdown(bundle))
    written.append(md_path)
    json_path = out / "report.json"
    json_path.write_bytes(render_json(bundle))
    written.append(json_path)
    for name, data in render_csv_tables(bundle).items():
        csv_path = out / f"report.{name}.csv"
        csv_path.write_bytes(data)
        written.append(csv_path)
    return written
