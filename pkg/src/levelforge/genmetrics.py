"""System-output scoring: SARI, corpus FKGL, copy-rate, repetition diagnostics.

The SARI implementation follows the reference convention used by the
standard simplification toolchain: n-grams for n=1..4, keep and add scored
as F1, delete scored as precision, reference counts pooled with
multiplicity scaling by the number of references. Conformance is pinned by
a committed fixture of oracle outputs.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .readability import corpus_fkgl
from .textcore import ngrams, tokenize

__all__ = [
    "EvalInstance",
    "SariBreakdown",
    "sari",
    "corpus_sari",
    "copy_rate",
    "repetition_score",
    "sari_r",
    "score_report",
]


@dataclass(frozen=True)
class EvalInstance:
    source: str
    output: str
    references: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.references:
            raise ValueError("EvalInstance needs at least one reference")
        object.__setattr__(self, "references", tuple(self.references))


@dataclass(frozen=True)
class SariBreakdown:
    add_score: float
    keep_score: float
    del_score: float
    sari: float
    per_n: dict[int, tuple[float, float, float]] = field(default_factory=dict)


def _grams(tokens: Sequence[str], n: int) -> Counter:
    return ngrams(tokens, n)


def _component_scores(
    src: Counter, out: Counter, refs: list[Counter], numref: int
) -> tuple[float, float, float]:
    """(keep, delete, add) for one n-gram order, each in [0, 1]."""
    ref_pool = Counter()
    for r in refs:
        ref_pool.update(r)
    src_rep = Counter({g: c * numref for g, c in src.items()})
    out_rep = Counter({g: c * numref for g, c in out.items()})

    # Keep: F1 over grams retained from the source.
    keep_cand = src_rep & out_rep
    keep_good = keep_cand & ref_pool
    keep_all = src_rep & ref_pool
    keep_p = (
        sum(keep_good[g] / keep_cand[g] for g in keep_good) / len(keep_cand)
        if keep_cand
        else 0.0
    )
    keep_r = (
        sum(keep_good[g] / keep_all[g] for g in keep_good) / len(keep_all)
        if keep_all
        else 0.0
    )
    keep = 2 * keep_p * keep_r / (keep_p + keep_r) if keep_p + keep_r > 0 else 0.0

    # Delete: precision only, per the reference convention.
    del_cand = src_rep - out_rep
    del_good = del_cand - ref_pool
    delete = (
        sum(del_good[g] / del_cand[g] for g in del_good) / len(del_cand)
        if del_cand
        else 0.0
    )

    # Add: F1 over distinct new grams.
    add_cand = set(out) - set(src)
    add_good = add_cand & set(ref_pool)
    add_all = set(ref_pool) - set(src)
    add_p = len(add_good) / len(add_cand) if add_cand else 0.0
    add_r = len(add_good) / len(add_all) if add_all else 0.0
    add = 2 * add_p * add_r / (add_p + add_r) if add_p + add_r > 0 else 0.0

    return keep, delete, add


def sari(instance: EvalInstance, max_n: int = 4) -> SariBreakdown:
    """SARI breakdown in [0, 100] for one (source, output, references) triple."""
    src_tokens = [t.lower() for t in tokenize(instance.source)]
    out_tokens = [t.lower() for t in tokenize(instance.output)]
    ref_tokens = [[t.lower() for t in tokenize(r)] for r in instance.references]
    numref = len(ref_tokens)

    per_n: dict[int, tuple[float, float, float]] = {}
    for n in range(1, max_n + 1):
        per_n[n] = _component_scores(
            _grams(src_tokens, n),
            _grams(out_tokens, n),
            [_grams(r, n) for r in ref_tokens],
            numref,
        )
    keep = 100.0 * sum(s[0] for s in per_n.values()) / max_n
    delete = 100.0 * sum(s[1] for s in per_n.values()) / max_n
    add = 100.0 * sum(s[2] for s in per_n.values()) / max_n
    return SariBreakdown(
        add_score=add,
        keep_score=keep,
        del_score=delete,
        sari=(add + keep + delete) / 3.0,
        per_n={n: tuple(100.0 * x for x in s) for n, s in per_n.items()},
    )


def corpus_sari(instances: Iterable[EvalInstance]) -> float:
    """Mean per-instance SARI (corpus convention pinned by fixture)."""
    scores = [sari(inst).sari for inst in instances]
    if not scores:
        raise ValueError("corpus_sari needs at least one instance")
    return sum(scores) / len(scores)


def copy_rate(instances: Iterable[EvalInstance]) -> float:
    """Fraction of instances whose case-folded tokenization equals the source's."""
    total = copies = 0
    for inst in instances:
        total += 1
        src = [t.lower() for t in tokenize(inst.source)]
        out = [t.lower() for t in tokenize(inst.output)]
        if src == out:
            copies += 1
    if total == 0:
        raise ValueError("copy_rate needs at least one instance")
    return copies / total


def repetition_score(text: str, n: int = 4) -> float:
    """Degenerate-repetition diagnostic in [0, 1].

    1 - distinct/total over n-grams pooled across orders 1..n, so looped
    phrases show up both as repeated long spans and as inflated low-order
    counts. 0 when the text has at most one token.
    """
    tokens = tokenize(text)
    total = 0
    distinct = 0
    for order in range(1, n + 1):
        grams = ngrams(tokens, order)
        total += sum(grams.values())
        distinct += len(grams)
    if total <= 1:
        return 0.0
    return 1.0 - distinct / total


def _single_order_distinct_ratio(tokens: Sequence[str], n: int) -> float:
    grams = ngrams(tokens, n)
    total = sum(grams.values())
    if total == 0:
        # No n-grams means no repeated n-grams; the multiplier is neutral.
        return 1.0
    return len(grams) / total


def sari_r(instance: EvalInstance, n: int = 4) -> float:
    """Repetition-penalized SARI: sari * (distinct / total output n-grams).

    Equals plain SARI exactly when the output's n-grams are all distinct;
    a fully degenerate output collapses toward sari / total.
    """
    base = sari(instance).sari
    out_tokens = tokenize(instance.output)
    return base * _single_order_distinct_ratio(out_tokens, n)


def score_report(instances: Sequence[EvalInstance], repetition_n: int = 4) -> dict:
    """Corpus-level metrics dict for a scored system."""
    if not instances:
        raise ValueError("score_report needs at least one instance")
    reps = [repetition_score(inst.output, repetition_n) for inst in instances]
    saris = [sari(inst).sari for inst in instances]
    sari_rs = [sari_r(inst, repetition_n) for inst in instances]
    outputs = [inst.output for inst in instances]
    try:
        fkgl_value = corpus_fkgl(outputs)
    except ValueError:
        fkgl_value = None
    return {
        "sari": sum(saris) / len(saris),
        "sari_r": sum(sari_rs) / len(sari_rs),
        "fkgl": fkgl_value,
        "fkgl_convention": "corpus-pooled counts",
        "copy_rate": copy_rate(instances),
        "mean_repetition": sum(reps) / len(reps),
        "instances": len(instances),
    }
