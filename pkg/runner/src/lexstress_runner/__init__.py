"""Masked-LM adapter producing wire-format prediction records."""

from __future__ import annotations

from lexstress_runner.backends import FillCandidate, FillMaskBackend, FillResult, StubBackend
from lexstress_runner.config import RunnerConfig
from lexstress_runner.corpus_io import MaskTask, load_mask_tasks
from lexstress_runner.writer import run_fill_mask, write_wire_records

__all__ = [
    "FillCandidate",
    "FillMaskBackend",
    "FillResult",
    "MaskTask",
    "RunnerConfig",
    "StubBackend",
    "load_mask_tasks",
    "run_fill_mask",
    "write_wire_records",
]
