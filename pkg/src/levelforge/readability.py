"""FKGL computation and the complexity-level scheme algebra.

Levels live in one of four schemes: CEFR6 (A1..C2), CEFR3 (A/B/C),
NEWSELA (0..4, larger = simpler), and FKGL (real, 2-decimal precision).
Cross-scheme comparison is an error, never a silent coercion.
"""
from __future__ import annotations

from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from enum import Enum
from typing import Iterable

from .textcore import Sentence, sentence_stats

__all__ = [
    "Scheme",
    "ComplexityLevel",
    "SchemeMismatchError",
    "fkgl",
    "fkgl_from_counts",
    "corpus_fkgl",
    "level_of",
    "cefr6_to_cefr3",
    "level_delta",
    "round2",
]

CEFR6_LABELS = ("A1", "A2", "B1", "B2", "C1", "C2")
CEFR3_LABELS = ("A", "B", "C")

# Kincaid (1975) grade-level constants.
_WORDS_PER_SENT_WEIGHT = 0.39
_SYLLABLES_PER_WORD_WEIGHT = 11.8
_FKGL_OFFSET = 15.59


class Scheme(str, Enum):
    CEFR6 = "cefr6"
    CEFR3 = "cefr3"
    NEWSELA = "newsela"
    FKGL = "fkgl"


class SchemeMismatchError(ValueError):
    """Raised when levels from different schemes are compared."""


class UnsupportedSchemeError(ValueError):
    """Raised when a level cannot be computed for the requested scheme."""


_CENT = Decimal("0.01")


def round2(value: float) -> float:
    """Round half-up to 2 decimals (labeling-time convention)."""
    return float(Decimal(repr(value)).quantize(_CENT, rounding=ROUND_HALF_UP))


@dataclass(frozen=True, order=False)
class ComplexityLevel:
    scheme: Scheme
    value: float

    def __post_init__(self) -> None:
        if self.scheme is Scheme.CEFR6:
            if self.value not in range(6):
                raise ValueError(f"CEFR6 index must be 0..5, got {self.value}")
        elif self.scheme is Scheme.CEFR3:
            if self.value not in range(3):
                raise ValueError(f"CEFR3 index must be 0..2, got {self.value}")
        elif self.scheme is Scheme.NEWSELA:
            if self.value not in range(5):
                raise ValueError(f"Newsela level must be 0..4, got {self.value}")
        else:
            object.__setattr__(self, "value", round2(float(self.value)))

    @classmethod
    def cefr6(cls, label: str) -> "ComplexityLevel":
        return cls(Scheme.CEFR6, CEFR6_LABELS.index(label.upper()))

    @classmethod
    def cefr3(cls, label: str) -> "ComplexityLevel":
        return cls(Scheme.CEFR3, CEFR3_LABELS.index(label.upper()))

    @classmethod
    def newsela(cls, level: int) -> "ComplexityLevel":
        return cls(Scheme.NEWSELA, int(level))

    @classmethod
    def fkgl(cls, score: float) -> "ComplexityLevel":
        return cls(Scheme.FKGL, score)

    @classmethod
    def parse(cls, scheme: Scheme, raw: str | float) -> "ComplexityLevel":
        if scheme is Scheme.CEFR6:
            return cls.cefr6(str(raw))
        if scheme is Scheme.CEFR3:
            return cls.cefr3(str(raw))
        if scheme is Scheme.NEWSELA:
            return cls.newsela(int(raw))
        return cls.fkgl(float(raw))

    @property
    def label(self) -> str:
        if self.scheme is Scheme.CEFR6:
            return CEFR6_LABELS[int(self.value)]
        if self.scheme is Scheme.CEFR3:
            return CEFR3_LABELS[int(self.value)]
        if self.scheme is Scheme.NEWSELA:
            return str(int(self.value))
        return f"{self.value:.2f}"

    @property
    def complexity_rank(self) -> float:
        """Value on a shared axis where larger always means more complex.

        Newsela is inverted relative to its raw level numbers: level 0 is
        the complex original and 4 the simplest rewrite.
        """
        if self.scheme is Scheme.NEWSELA:
            return -self.value
        return self.value


def fkgl_from_counts(word_count: int, sentence_count: int, syllable_count: int) -> float:
    """0.39 * words/sentences + 11.8 * syllables/words - 15.59."""
    if word_count < 1 or sentence_count < 1:
        raise ValueError(
            f"FKGL undefined for word_count={word_count}, sentence_count={sentence_count}"
        )
    return (
        _WORDS_PER_SENT_WEIGHT * word_count / sentence_count
        + _SYLLABLES_PER_WORD_WEIGHT * syllable_count / word_count
        - _FKGL_OFFSET
    )


def fkgl(doc: Sentence | str) -> float:
    """FKGL of one text or precomputed stats aggregate."""
    stats = sentence_stats(doc) if isinstance(doc, str) else doc
    return fkgl_from_counts(stats.word_count, stats.sentence_count, stats.syllable_count)


def corpus_fkgl(texts: Iterable[str]) -> float:
    """FKGL over pooled counts: sum words/sentences/syllables, then score.

    Pooling (not averaging per text) is the corpus-level convention; the
    choice is recorded in score reports.
    """
    words = sentences = syllables = 0
    for text in texts:
        stats = sentence_stats(text)
        words += stats.word_count
        sentences += stats.sentence_count
        syllables += stats.syllable_count
    if words == 0:
        raise ValueError("corpus_fkgl needs at least one non-empty text")
    return fkgl_from_counts(words, sentences, syllables)


def level_of(text: str, scheme: Scheme = Scheme.FKGL) -> ComplexityLevel:
    """Compute a level from raw text. Only the FKGL scheme is computable;
    CEFR/Newsela levels come from ingested predictions."""
    if scheme is not Scheme.FKGL:
        raise UnsupportedSchemeError(
            f"{scheme.value} levels cannot be computed from text; "
            "ingest them from a prediction file"
        )
    # ComplexityLevel.fkgl rounds to 2 decimals on construction.
    return ComplexityLevel.fkgl(fkgl(text))


def cefr6_to_cefr3(level: ComplexityLevel) -> ComplexityLevel:
    """Collapse A1,A2 -> A; B1,B2 -> B; C1,C2 -> C."""
    if level.scheme is not Scheme.CEFR6:
        raise SchemeMismatchError(f"expected CEFR6 level, got {level.scheme.value}")
    return ComplexityLevel(Scheme.CEFR3, int(level.value) // 2)


def level_delta(a: ComplexityLevel, b: ComplexityLevel) -> float:
    """Signed difference a - b on the shared complexity axis.

    Positive means ``a`` is more complex than ``b`` in every scheme,
    including Newsela where raw level numbers run the other way.
    """
    if a.scheme is not b.scheme:
        raise SchemeMismatchError(
            f"cannot compare levels across schemes: {a.scheme.value} vs {b.scheme.value}"
        )
    delta = a.complexity_rank - b.complexity_rank
    if a.scheme is Scheme.FKGL:
        return round2(delta)
    return delta
