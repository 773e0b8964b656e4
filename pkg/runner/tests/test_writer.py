from __future__ import annotations

import json
from pathlib import Path

import pytest

from lexstress_runner.backends import StubBackend
from lexstress_runner.config import RunnerConfig
from lexstress_runner.corpus_io import PlanError, load_mask_tasks
from lexstress_runner.writer import run_fill_mask, write_wire_records


def _write_inputs(tmp_path: Path) -> tuple[Path, Path]:
    corpus = {
        "sentences": [
            {
                "id": "s1",
                "tokens": [
                    {"surface": "Il", "pos": "DET", "is_content": False},
                    {"surface": "vento", "pos": "NOUN", "is_content": True},
                    {"surface": "passa", "pos": "VERB", "is_content": True},
                    {"surface": ".", "pos": "PUNCT", "is_content": False},
                ],
            },
            {
                "id": "s2",
                "tokens": [
                    {"surface": "Piove", "pos": "VERB", "is_content": True},
                    {"surface": "sempre", "pos": "ADV", "is_content": False},
                ],
            },
        ]
    }
    plan = {"policy": "content_plus_listed_function", "function_indices": {"s2": [1]}}
    corpus_path = tmp_path / "corpus.json"
    plan_path = tmp_path / "plan.json"
    corpus_path.write_text(json.dumps(corpus), encoding="utf-8")
    plan_path.write_text(json.dumps(plan), encoding="utf-8")
    return corpus_path, plan_path


def _config(tmp_path: Path, k: int = 10) -> RunnerConfig:
    corpus_path, plan_path = _write_inputs(tmp_path)
    return RunnerConfig(
        model_id="stub-rotor-v1",
        corpus_path=corpus_path,
        plan_path=plan_path,
        output_path=tmp_path / "out.jsonl",
        k=k,
    )


def test_mask_tasks_follow_corpus_order_then_index(tmp_path: Path) -> None:
    corpus_path, plan_path = _write_inputs(tmp_path)
    tasks = load_mask_tasks(corpus_path, plan_path)
    assert [(t.sentence_id, t.mask_index) for t in tasks] == [
        ("s1", 1),
        ("s1", 2),
        ("s2", 0),
        ("s2", 1),
    ]
    assert tasks[0].gold_surface == "vento"
    assert tasks[3].gold_surface == "sempre"


def test_content_only_policy_skips_listed_indices(tmp_path: Path) -> None:
    corpus_path, plan_path = _write_inputs(tmp_path)
    plan_path.write_text(json.dumps({"policy": "content_only"}), encoding="utf-8")
    tasks = load_mask_tasks(corpus_path, plan_path)
    assert [(t.sentence_id, t.mask_index) for t in tasks] == [
        ("s1", 1),
        ("s1", 2),
        ("s2", 0),
    ]


def test_unknown_policy_is_rejected(tmp_path: Path) -> None:
    corpus_path, plan_path = _write_inputs(tmp_path)
    plan_path.write_text(json.dumps({"policy": "everything"}), encoding="utf-8")
    with pytest.raises(PlanError):
        load_mask_tasks(corpus_path, plan_path)


def test_out_of_range_listed_index_is_rejected(tmp_path: Path) -> None:
    corpus_path, plan_path = _write_inputs(tmp_path)
    plan_path.write_text(
        json.dumps(
            {"policy": "content_plus_listed_function", "function_indices": {"s2": [9]}}
        ),
        encoding="utf-8",
    )
    with pytest.raises(PlanError):
        load_mask_tasks(corpus_path, plan_path)


def test_records_carry_k_candidates_with_descending_scores(tmp_path: Path) -> None:
    config = _config(tmp_path)
    records = run_fill_mask(config, StubBackend())
    assert len(records) == 4
    for record in records:
        assert len(record["candidates"]) == 10
        scores = [c["score"] for c in record["candidates"]]
        assert scores == sorted(scores, reverse=True)
        for candidate in record["candidates"]:
            assert "is_subword_continuation" not in candidate
            assert "is_special_token" not in candidate
        assert "multi_piece" not in record


def test_header_carries_model_and_k(tmp_path: Path) -> None:
    config = _config(tmp_path, k=3)
    path = write_wire_records(config, StubBackend())
    lines = path.read_text(encoding="utf-8").splitlines()
    header = json.loads(lines[0])
    assert header == {
        "format_version": "1",
        "model_id": "stub-rotor-v1",
        "k": 3,
        "scoring": "stub-rotation",
    }
    assert len(lines) == 1 + 4
    assert all(len(json.loads(line)["candidates"]) == 3 for line in lines[1:])


def test_two_runs_produce_identical_bytes(tmp_path: Path) -> None:
    config = _config(tmp_path)
    first = write_wire_records(config, StubBackend()).read_bytes()
    second = write_wire_records(config, StubBackend()).read_bytes()
    assert first == second


def test_k_of_one_keeps_a_single_candidate(tmp_path: Path) -> None:
    config = _config(tmp_path, k=1)
    records = run_fill_mask(config, StubBackend())
    assert all(len(record["candidates"]) == 1 for record in records)


def test_k_below_one_is_rejected(tmp_path: Path) -> None:
    with pytest.raises(ValueError):
        _config(tmp_path, k=0)


def test_stub_refuses_k_beyond_its_pool(tmp_path: Path) -> None:
    config = _config(tmp_path, k=40)
    with pytest.raises(ValueError):
        run_fill_mask(config, StubBackend())
