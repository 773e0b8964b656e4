from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path


@dataclass(frozen=True)
class RunnerConfig:
    """Settings for one prediction run.

    ``model_id`` names the masked language model to query.  ``corpus_path``
    and ``plan_path`` point at the corpus and mask-plan files; ``output_path``
    is where the JSONL records land.  ``k`` is the number of candidates kept
    per mask and must be at least 1.  ``device`` is an optional backend hint
    such as ``"cpu"`` or ``"cuda:0"``.
    """

    model_id: str
    corpus_path: Path
    plan_path: Path
    output_path: Path
    k: int = 10
    device: str | None = None

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError(f"k must be at least 1, got {self.k}")
