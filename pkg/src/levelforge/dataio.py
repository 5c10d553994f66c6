"""Streaming readers and writers for the JSONL/TSV interchange formats."""
from __future__ import annotations

import hashlib
import json
from pathlib import Path
from typing import Iterable, Iterator, Optional, TextIO

from .corpus import ParaphrasePair
from .readability import ComplexityLevel, Scheme

__all__ = [
    "read_jsonl",
    "write_jsonl",
    "read_pairs",
    "read_predictions",
    "read_ratings_tsv",
    "pair_to_record",
    "file_sha256",
    "ParseError",
]


class ParseError(ValueError):
    """Malformed input line; carries the path and 1-based line number."""

    def __init__(self, path: str | Path, lineno: int, message: str) -> None:
        super().__init__(f"{path}:{lineno}: {message}")
        self.path = str(path)
        self.lineno = lineno


def read_jsonl(path: str | Path) -> Iterator[tuple[int, dict]]:
    """Yield (lineno, object) for each non-empty line."""
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                yield lineno, json.loads(line)
            except json.JSONDecodeError as exc:
                raise ParseError(path, lineno, f"invalid JSON: {exc}") from exc


def write_jsonl(records: Iterable[dict], out: TextIO) -> int:
    """Write records as compact JSON lines with stable key order."""
    n = 0
    for record in records:
        out.write(json.dumps(record, ensure_ascii=False, sort_keys=True))
        out.write("\n")
        n += 1
    return n


def read_pairs(path: str | Path) -> Iterator[ParaphrasePair]:
    """Read paraphrase pairs from JSONL or TSV.

    JSONL objects carry {"id", "source", "target", "similarity"?}. TSV
    rows are source<TAB>target[<TAB>similarity] with ids auto-assigned
    from line numbers.
    """
    path = Path(path)
    if path.suffix.lower() == ".tsv":
        yield from _read_pairs_tsv(path)
        return
    for lineno, obj in read_jsonl(path):
        try:
            yield ParaphrasePair(
                id=str(obj["id"]),
                source=obj["source"],
                target=obj["target"],
                similarity=obj.get("similarity"),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(path, lineno, f"bad pair record: {exc}") from exc


def _read_pairs_tsv(path: Path) -> Iterator[ParaphrasePair]:
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line:
                continue
            cols = line.split("\t")
            if len(cols) < 2:
                raise ParseError(path, lineno, "expected source<TAB>target")
            similarity = None
            if len(cols) >= 3 and cols[2]:
                try:
                    similarity = float(cols[2])
                except ValueError as exc:
                    raise ParseError(path, lineno, f"bad similarity: {cols[2]!r}") from exc
            try:
                yield ParaphrasePair(
                    id=str(lineno), source=cols[0], target=cols[1], similarity=similarity
                )
            except ValueError as exc:
                raise ParseError(path, lineno, str(exc)) from exc


def read_predictions(path: str | Path) -> tuple[Scheme, dict[str, ComplexityLevel]]:
    """Read a level-prediction file.

    The first line is a header object declaring the scheme; each following
    line is {"id" or "text_sha256", "level"}.
    """
    rows = read_jsonl(path)
    try:
        lineno, header = next(rows)
    except StopIteration:
        raise ParseError(path, 1, "empty prediction file") from None
    if "scheme" not in header:
        raise ParseError(path, lineno, 'missing {"scheme": ...} header line')
    try:
        scheme = Scheme(header["scheme"])
    except ValueError as exc:
        raise ParseError(path, lineno, f"unknown scheme {header['scheme']!r}") from exc
    predictions: dict[str, ComplexityLevel] = {}
    for lineno, obj in rows:
        key = obj.get("text_sha256") or obj.get("id")
        if key is None or "level" not in obj:
            raise ParseError(path, lineno, 'need "id" or "text_sha256" plus "level"')
        try:
            predictions[str(key)] = ComplexityLevel.parse(scheme, obj["level"])
        except (ValueError, TypeError) as exc:
            raise ParseError(path, lineno, f"bad level {obj['level']!r}: {exc}") from exc
    return scheme, predictions


def read_ratings_tsv(path: str | Path) -> Iterator[tuple[str, str, str, float]]:
    """Yield (item_id, rater_id, group, value) rows, skipping a header row."""
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line:
                continue
            cols = line.split("\t")
            if len(cols) != 4:
                raise ParseError(path, lineno, "expected item_id, rater_id, group, value")
            if lineno == 1 and cols[0].lower() in ("item", "item_id"):
                continue
            try:
                yield cols[0], cols[1], cols[2], float(cols[3])
            except ValueError as exc:
                raise ParseError(path, lineno, f"bad rating value {cols[3]!r}") from exc


def pair_to_record(pair: ParaphrasePair, task: Optional[str] = None) -> dict:
    record = {
        "id": pair.id,
        "source": pair.source,
        "target": pair.target,
    }
    if pair.source_level is not None:
        record["source_level"] = pair.source_level.label
    if pair.target_level is not None:
        record["target_level"] = pair.target_level.label
    if task is not None:
        record["task"] = task
    return record


def file_sha256(path: str | Path) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 20), b""):
            digest.update(chunk)
    return digest.hexdigest()
