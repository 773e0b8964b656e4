"""Run a backend over a mask plan and serialize the wire format.

The output is newline-delimited JSON: a header object first, then one
record per planned mask in corpus order.  Candidate flags and the
``multi_piece`` marker are written only when true, keeping lines short
and byte-stable across runs.
"""

from __future__ import annotations

import json
from pathlib import Path

from lexstress_runner.backends import FillCandidate, FillMaskBackend
from lexstress_runner.config import RunnerConfig
from lexstress_runner.corpus_io import MaskTask, load_mask_tasks

FORMAT_VERSION = "1"


def _candidate_payload(candidate: FillCandidate) -> dict:
    payload: dict = {"surface": candidate.surface, "score": candidate.score}
    if candidate.is_subword_continuation:
        payload["is_subword_continuation"] = True
    if candidate.is_special_token:
        payload["is_special_token"] = True
    return payload


def run_fill_mask(config: RunnerConfig, backend: FillMaskBackend) -> list[dict]:
    """Fill every planned mask and return the serializable record dicts."""
    tasks: list[MaskTask] = load_mask_tasks(config.corpus_path, config.plan_path)
    records: list[dict] = []
    for task in tasks:
        result = backend.fill(task.tokens, task.mask_index, config.k)
        record: dict = {
            "sentence_id": task.sentence_id,
            "mask_index": task.mask_index,
            "gold_surface": task.gold_surface,
            "candidates": [_candidate_payload(c) for c in result.candidates],
        }
        if result.multi_piece:
            record["multi_piece"] = True
        records.append(record)
    return records


def write_wire_records(config: RunnerConfig, backend: FillMaskBackend) -> Path:
    """Write header plus records to ``config.output_path`` and return it."""
    records = run_fill_mask(config, backend)
    header = {
        "format_version": FORMAT_VERSION,
        "model_id": backend.model_id,
        "k": config.k,
        "scoring": backend.scoring,
    }
    lines = [json.dumps(header, ensure_ascii=False)]
    lines.extend(json.dumps(record, ensure_ascii=False) for record in records)
    config.output_path.parent.mkdir(parents=True, exist_ok=True)
    config.output_path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return config.output_path
