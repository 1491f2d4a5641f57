"""Valence/Arousal/Dominance lexicon loading and intensity scoring.

The lexicon file is tab-separated with a header row
(word, valence, arousal, dominance); all scores lie in [0, 1].
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, TextIO

from dialogue_concepts.errors import IngestionError

# Analytic range of ||(Va - 1/2, Ar / 2)||_2 over [0,1]^2: the norm is
# maximized at (Va, Ar) = (0, 1) or (1, 1), giving sqrt(1/4 + 1/4).
INTENSITY_NORM_MAX = math.sqrt(2.0) / 2.0

# Knowledge-graph confidence weights nominally span [1, 10].
CONFIDENCE_MIN = 1.0
CONFIDENCE_MAX = 10.0


@dataclass(frozen=True)
class VadEntry:
    word: str
    valence: float
    arousal: float
    dominance: float


@dataclass(frozen=True)
class NormalizationBounds:
    min: float
    max: float

    def __post_init__(self) -> None:
        if not self.min < self.max:
            raise ValueError(f"bounds require min < max, got [{self.min}, {self.max}]")


CONFIDENCE_BOUNDS = NormalizationBounds(CONFIDENCE_MIN, CONFIDENCE_MAX)
INTENSITY_BOUNDS = NormalizationBounds(0.0, INTENSITY_NORM_MAX)


class VadLexicon:
    """Immutable word -> VadEntry map, safe for concurrent readers."""

    def __init__(self, entries: Iterable[VadEntry]):
        self._entries: dict[str, VadEntry] = {}
        for entry in entries:
            if entry.word in self._entries:
                raise IngestionError(f"duplicate lexicon word: {entry.word!r}")
            self._entries[entry.word] = entry

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, word: str) -> bool:
        return word in self._entries

    def get(self, word: str) -> VadEntry | None:
        return self._entries.get(word)

    def words(self) -> list[str]:
        return list(self._entries)


def load_vad(source: TextIO) -> VadLexicon:
    """Parse a tab-separated VAD lexicon stream (header row required)."""
    lines = iter(enumerate(source, start=1))
    try:
        next(lines)
    except StopIteration:
        raise IngestionError("lexicon stream is empty (missing header)") from None

    entries: dict[str, VadEntry] = {}
    for lineno, line in lines:
        line = line.rstrip("\n")
        if not line:
            continue
        parts = line.split("\t")
        if len(parts) != 4:
            raise IngestionError(
                f"line {lineno}: expected 4 tab-separated fields, got {len(parts)}"
            )
        word = parts[0].strip().lower()
        if not word:
            raise IngestionError(f"line {lineno}: empty word")
        try:
            scores = [float(p) for p in parts[1:]]
        except ValueError:
            raise IngestionError(f"line {lineno}: non-numeric score") from None
        for score in scores:
            if not 0.0 <= score <= 1.0:
                raise IngestionError(f"line {lineno}: score {score} outside [0, 1]")
        if word in entries:
            raise IngestionError(f"line {lineno}: duplicate word {word!r}")
        entries[word] = VadEntry(word, *scores)
    return VadLexicon(entries.values())


def min_max_scale(value: float, bounds: NormalizationBounds = CONFIDENCE_BOUNDS) -> float:
    """Min-max normalize `value` into [0, 1], clamping out-of-range inputs."""
    clamped = min(max(value, bounds.min), bounds.max)
    return (clamped - bounds.min) / (bounds.max - bounds.min)


def emotion_intensity(lexicon: VadLexicon, concept: str) -> float:
    """Intensity of a concept from its valence/arousal; 0.5 when unknown.

    The score is the l2 norm of (valence - 1/2, arousal / 2), min-max
    normalized over its analytic range so known concepts span [0, 1].
    """
    entry = lexicon.get(concept)
    if entry is None:
        return 0.5
    norm = math.hypot(entry.valence - 0.5, entry.arousal / 2.0)
    return min_max_scale(norm, INTENSITY_BOUNDS)
