"""Load corpus sentences and derive the masks a plan asks for.

The corpus file is a JSON object whose ``sentences`` list carries token
streams in document order.  The plan file names a masking policy and, for
the ``content_plus_listed_function`` policy, the extra function-word
indices per sentence.  Neither file is altered here; this module only
turns the two into a flat, ordered list of masking tasks.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

KNOWN_POLICIES = ("content_only", "content_plus_listed_function")


class PlanError(ValueError):
    """The plan file asks for something the corpus cannot satisfy."""


@dataclass(frozen=True)
class MaskTask:
    """One mask to fill: a sentence, the index to hide, and its gold surface."""

    sentence_id: str
    tokens: tuple[str, ...]
    mask_index: int
    gold_surface: str


def _sentence_entries(corpus_path: Path) -> list[dict]:
    with open(corpus_path, encoding="utf-8") as handle:
        payload = json.load(handle)
    sentences = payload.get("sentences")
    if not isinstance(sentences, list):
        raise PlanError(f"{corpus_path}: corpus file has no sentences list")
    return sentences


def load_mask_tasks(corpus_path: Path, plan_path: Path) -> list[MaskTask]:
    """Expand a corpus and plan into masking tasks.

    Tasks come back in corpus document order, and within a sentence in
    ascending mask index, which is also the order records must be written.
    """
    with open(plan_path, encoding="utf-8") as handle:
        plan = json.load(handle)
    policy = plan.get("policy")
    if policy not in KNOWN_POLICIES:
        raise PlanError(f"{plan_path}: unknown masking policy {policy!r}")
    listed: dict[str, list[int]] = plan.get("function_indices", {})

    tasks: list[MaskTask] = []
    for entry in _sentence_entries(corpus_path):
        sid = entry["id"]
        tokens = entry["tokens"]
        surfaces = tuple(token["surface"] for token in tokens)
        indices = {i for i, token in enumerate(tokens) if token.get("is_content")}
        if policy == "content_plus_listed_function":
            for index in listed.get(sid, []):
                if not 0 <= index < len(tokens):
                    raise PlanError(
                        f"{plan_path}: sentence {sid} has no token {index}"
                    )
                indices.add(index)
        for index in sorted(indices):
            tasks.append(
                MaskTask(
                    sentence_id=sid,
                    tokens=surfaces,
                    mask_index=index,
                    gold_surface=surfaces[index],
                )
            )
    return tasks
