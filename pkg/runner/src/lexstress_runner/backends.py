"""Fill-mask backends.

Two implementations live here.  ``StubBackend`` is deterministic and
network-free: it rotates through a small pool of common Italian nouns so
pipelines can be exercised end to end without a model download.  The
``TransformersBackend`` wraps a Hugging Face fill-mask pipeline and maps
tokenizer conventions onto the wire-format candidate flags.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from typing import Protocol, Sequence


@dataclass(frozen=True)
class FillCandidate:
    """One ranked guess for a masked slot."""

    surface: str
    score: float
    is_subword_continuation: bool = False
    is_special_token: bool = False


@dataclass(frozen=True)
class FillResult:
    """Candidates for one mask plus whether the gold word is multi-piece."""

    candidates: tuple[FillCandidate, ...]
    multi_piece: bool = False


class FillMaskBackend(Protocol):
    model_id: str
    scoring: str

    def fill(self, tokens: Sequence[str], mask_index: int, k: int) -> FillResult:
        ...


_STUB_POOL = (
    "acqua",
    "campagna",
    "campo",
    "casa",
    "cielo",
    "corpo",
    "cosa",
    "mondo",
    "notte",
    "parte",
    "punto",
    "sera",
    "strada",
    "tempo",
    "terra",
    "vento",
)


@dataclass(frozen=True)
class StubBackend:
    """Deterministic offline backend.

    The candidate list is a rotation of a fixed noun pool keyed on the
    sentence text and mask position, so repeated runs produce identical
    bytes.  Scores decay geometrically from just under 0.5; nothing the
    stub emits ever clears a best-prediction threshold.
    """

    model_id: str = "stub-rotor-v1"
    scoring: str = "stub-rotation"

    def fill(self, tokens: Sequence[str], mask_index: int, k: int) -> FillResult:
        if k > len(_STUB_POOL):
            raise ValueError(
                f"stub backend holds {len(_STUB_POOL)} surfaces, cannot return {k}"
            )
        key = "\x1f".join(tokens) + f"\x1f{mask_index}"
        digest = hashlib.md5(key.encode("utf-8")).digest()
        start = digest[0] % len(_STUB_POOL)
        rotated = _STUB_POOL[start:] + _STUB_POOL[:start]
        candidates = tuple(
            FillCandidate(surface=surface, score=round(0.48 * (0.82**rank), 6))
            for rank, surface in enumerate(rotated[:k])
        )
        return FillResult(candidates=candidates)


@dataclass
class TransformersBackend:
    """Backend backed by a Hugging Face fill-mask pipeline.

    The pipeline is built lazily on first use so importing this module
    stays cheap and tests can construct the class without the heavy
    dependencies installed.  Candidate flags come from the tokenizer:
    WordPiece continuations carry a ``##`` prefix, SentencePiece marks
    word starts with a metaspace instead, and special tokens are the
    tokenizer's own control ids.
    """

    model_id: str
    device: str | None = None
    scoring: str = "model-softmax"
    _pipeline: object = field(default=None, repr=False, compare=False)
    _tokenizer: object = field(default=None, repr=False, compare=False)

    def _ensure_pipeline(self) -> None:
        if self._pipeline is not None:
            return
        from transformers import pipeline

        kwargs: dict = {"model": self.model_id, "top_k": 1}
        if self.device is not None:
            kwargs["device"] = self.device
        pipe = pipeline("fill-mask", **kwargs)
        self._pipeline = pipe
        self._tokenizer = pipe.tokenizer

    def _candidate_from(self, token_id: int, score: float) -> FillCandidate:
        tokenizer = self._tokenizer
        piece = tokenizer.convert_ids_to_tokens(token_id)
        special = token_id in set(tokenizer.all_special_ids)
        continuation = False
        surface = piece
        if not special:
            if piece.startswith("##"):
                continuation = True
                surface = piece[2:]
            elif piece.startswith("▁") or piece.startswith("Ġ"):
                surface = piece.lstrip("▁Ġ")
            elif getattr(tokenizer, "sp_model", None) is not None:
                # SentencePiece vocabularies mark word starts, so a bare
                # piece with no metaspace is a continuation.
                continuation = True
        return FillCandidate(
            surface=surface,
            score=float(score),
            is_subword_continuation=continuation,
            is_special_token=special,
        )

    def fill(self, tokens: Sequence[str], mask_index: int, k: int) -> FillResult:
        self._ensure_pipeline()
        pipe = self._pipeline
        tokenizer = self._tokenizer
        gold = tokens[mask_index]
        text_tokens = list(tokens)
        text_tokens[mask_index] = tokenizer.mask_token
        outputs = pipe(" ".join(text_tokens), top_k=k)
        if outputs and isinstance(outputs[0], list):
            outputs = outputs[0]
        candidates = [
            self._candidate_from(entry["token"], entry["score"]) for entry in outputs
        ]
        candidates.sort(key=lambda c: -c.score)
        multi_piece = len(tokenizer.tokenize(gold)) != 1
        return FillResult(candidates=tuple(candidates), multi_piece=multi_piece)
