"""Delimiter-separated input files, serializers, and report emission.

File schemas (UTF-8, one header line, comma-separated)::

    journals.csv  journal_id,name,categories        categories joined by ";"
    stats.csv     journal_id,year,items,citations
    pubs.csv      record_id,journal_id,pub_year,citations
    ratings.csv   record_id,aspect,value
    scores.csv    record_id,variant,value,n_used,n_excluded,warnings

Only "." is accepted as decimal separator.
"""

from __future__ import annotations

import csv
import io
import json
import math
import re
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from decimal import ROUND_HALF_UP, Decimal
from pathlib import Path
from typing import TextIO, Union

from .errors import DuplicateStatsRow, EmptyCategorySet, NegativeCount, ParseError, PartnormError
from .model import (
    VARIANT_NAMES,
    IndicatorResult,
    JournalClassification,
    JournalYearStats,
    Number,
    Publication,
    PublicationRecord,
    RatingVector,
)

FORMATS = ("text", "csv", "json")

JOURNALS_HEADER = ("journal_id", "name", "categories")
STATS_HEADER = ("journal_id", "year", "items", "citations")
PUBS_HEADER = ("record_id", "journal_id", "pub_year", "citations")
RATINGS_HEADER = ("record_id", "aspect", "value")
SCORES_HEADER = ("record_id", "variant", "value", "n_used", "n_excluded", "warnings")

_INT = re.compile(r"[+-]?\d+")
_FLOAT = re.compile(r"[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?")

Source = Union[str, Path, TextIO]


@dataclass
class RunConfig:
    variants: tuple[str, ...] = VARIANT_NAMES
    strict: bool = False
    fmt: str = "text"
    digits: int = 2
    paths: dict[str, Path] = field(default_factory=dict)

    def __post_init__(self):
        if self.fmt not in FORMATS:
            raise ValueError(f"format must be one of {FORMATS}, got {self.fmt!r}")
        if self.digits < 0:
            raise ValueError("rounding digits must be >= 0")


# --------------------------------------------------------------------------
# reading


def _open(source: Source):
    if isinstance(source, (str, Path)):
        return open(source, encoding="utf-8", newline=""), str(source)
    return source, getattr(source, "name", None)


def _rows(source: Source, header: Sequence[str]):
    """Yield (line_number, fields) for each data row after checking the header."""
    fh, path = _open(source)
    try:
        reader = csv.reader(fh)
        first = next(reader, None)
        if first is None:
            raise ParseError("empty file, expected a header line", line=1, path=path)
        got = tuple(c.strip() for c in first)
        if got != tuple(header):
            raise ParseError(f"expected header {','.join(header)}, got {','.join(got)}", line=1, path=path)
        for fields in reader:
            if not fields or all(not f.strip() for f in fields):
                continue
            if len(fields) != len(header):
                raise ParseError(
                    f"expected {len(header)} fields, got {len(fields)}", line=reader.line_num, path=path
                )
            yield reader.line_num, [f.strip() for f in fields], path
    finally:
        if isinstance(source, (str, Path)):
            fh.close()


def parse_number(token: str, what: str, line=None, path=None) -> Number:
    if _INT.fullmatch(token):
        value: Number = int(token)
    elif _FLOAT.fullmatch(token):
        value = float(token)
    else:
        raise ParseError(f"{what}: not a number: {token!r}", line=line, path=path)
    if isinstance(value, float) and not math.isfinite(value):
        raise ParseError(f"{what}: not finite: {token!r}", line=line, path=path)
    return value


def _count(token, what, line, path) -> Number:
    value = parse_number(token, what, line, path)
    if value < 0:
        raise NegativeCount(f"{path or ''}:{line}: {what} must be non-negative, got {token}")
    return value


def _year(token, line, path) -> int:
    if not _INT.fullmatch(token):
        raise ParseError(f"year must be an integer, got {token!r}", line=line, path=path)
    return int(token)


def _nonempty(token, what, line, path) -> str:
    if not token:
        raise ParseError(f"{what} is empty", line=line, path=path)
    return token


def parse_journals(source: Source) -> list[JournalClassification]:
    out = []
    for line, (jid, name, cats), path in _rows(source, JOURNALS_HEADER):
        _nonempty(jid, "journal_id", line, path)
        tokens = [c.strip() for c in cats.split(";")]
        tokens = [c for c in tokens if c]
        if not tokens:
            raise EmptyCategorySet(jid, line=line)
        if len(set(tokens)) != len(tokens):
            raise ParseError(f"journal {jid!r} lists a category twice", line=line, path=path)
        out.append(JournalClassification(jid, frozenset(tokens), name or None))
    return out


def parse_stats(source: Source) -> list[JournalYearStats]:
    out, seen = [], set()
    for line, (jid, year, items, cites), path in _rows(source, STATS_HEADER):
        _nonempty(jid, "journal_id", line, path)
        y = _year(year, line, path)
        if (jid, y) in seen:
            raise DuplicateStatsRow(jid, y, line=line)
        seen.add((jid, y))
        out.append(JournalYearStats(jid, y, _count(items, "items", line, path), _count(cites, "citations", line, path)))
    return out


def parse_pubs(source: Source) -> list[PublicationRecord]:
    """Group publication rows by record id, keeping first-seen record order
    and per-record file order."""
    grouped: dict[str, list[Publication]] = {}
    for line, (rid, jid, year, cites), path in _rows(source, PUBS_HEADER):
        _nonempty(rid, "record_id", line, path)
        _nonempty(jid, "journal_id", line, path)
        pub = Publication(jid, _year(year, line, path), _count(cites, "citations", line, path))
        grouped.setdefault(rid, []).append(pub)
    return [PublicationRecord(rid, tuple(pubs)) for rid, pubs in grouped.items()]


def parse_ratings(source: Source) -> list[RatingVector]:
    grouped: dict[str, dict[str, float]] = {}
    for line, (rid, aspect, value), path in _rows(source, RATINGS_HEADER):
        _nonempty(rid, "record_id", line, path)
        _nonempty(aspect, "aspect", line, path)
        values = grouped.setdefault(aspect, {})
        if rid in values:
            raise ParseError(f"duplicate rating for ({rid!r}, {aspect!r})", line=line, path=path)
        values[rid] = float(parse_number(value, "value", line, path))
    return [RatingVector(aspect, values) for aspect, values in grouped.items()]


def parse_scores(source: Source) -> list[IndicatorResult]:
    out = []
    for line, (rid, variant, value, n_used, n_excl, warns), path in _rows(source, SCORES_HEADER):
        if variant not in VARIANT_NAMES:
            raise ParseError(f"unknown variant {variant!r}", line=line, path=path)
        out.append(
            IndicatorResult(
                rid,
                variant,
                float(parse_number(value, "value", line, path)),
                int(_count(n_used, "n_used", line, path)),
                int(_count(n_excl, "n_excluded", line, path)),
                tuple(w for w in warns.split("|") if w),
            )
        )
    return out


# --------------------------------------------------------------------------
# writing


def format_number(value) -> str:
    """Full-precision text for machine formats (round-trips through parse_number)."""
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return repr(value)
    return str(value)


def round_half_up(value: float, digits: int) -> str:
    """Display rounding: 16.7999 -> "16.80", 2.675 -> "2.68"."""
    q = Decimal(1).scaleb(-digits)
    return str(Decimal(repr(float(value))).quantize(q, rounding=ROUND_HALF_UP))


def _write_csv(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([format_number(v) if not isinstance(v, str) else v for v in row])
    return buf.getvalue()


def serialize_journals(classifications: Iterable[JournalClassification]) -> str:
    return _write_csv(
        JOURNALS_HEADER,
        ((c.journal, c.name or "", ";".join(sorted(c.categories))) for c in classifications),
    )


def serialize_stats(stats: Iterable[JournalYearStats]) -> str:
    return _write_csv(STATS_HEADER, ((s.journal, s.year, s.items, s.citations) for s in stats))


def serialize_pubs(records: Iterable[PublicationRecord]) -> str:
    return _write_csv(
        PUBS_HEADER,
        ((r.record_id, p.journal, p.pub_year, p.citations) for r in records for p in r.publications),
    )


def serialize_ratings(ratings: Iterable[RatingVector]) -> str:
    return _write_csv(
        RATINGS_HEADER,
        ((rid, rv.aspect, float(v)) for rv in ratings for rid, v in rv.values.items()),
    )


def indicator_rows(results: Iterable[IndicatorResult]) -> list[dict]:
    return [
        {
            "record_id": r.record_id,
            "variant": r.variant,
            "value": r.value,
            "n_used": r.n_used,
            "n_excluded": r.n_excluded,
            "warnings": list(r.warnings),
        }
        for r in results
    ]


def _text_cell(value, digits: int) -> str:
    if isinstance(value, bool):
        return "PASS" if value else "FAIL"
    if isinstance(value, float):
        return round_half_up(value, digits)
    if isinstance(value, (list, tuple)):
        return "; ".join(str(v) for v in value)
    if value is None:
        return "-"
    return str(value)


def _csv_cell(value) -> str:
    if isinstance(value, (list, tuple)):
        return "|".join(str(v) for v in value)
    if value is None:
        return ""
    return format_number(value)


def emit_rows(rows: Sequence[dict], columns: Sequence[str], fmt: str = "text", digits: int = 2, title: str | None = None) -> str:
    """Render rows deterministically. Text rounds floats half-up to ``digits``;
    csv and json keep full precision."""
    if fmt == "json":
        body = [{c: row.get(c) for c in columns} for row in rows]
        doc = body if title is None else {"title": title, "rows": body}
        return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(columns)
        for row in rows:
            w.writerow([_csv_cell(row.get(c)) for c in columns])
        return buf.getvalue()
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    cells = [[_text_cell(row.get(c), digits) for c in columns] for row in rows]
    widths = [max([len(c)] + [len(r[i]) for r in cells]) for i, c in enumerate(columns)]
    lines = []
    if title:
        lines.append(title)
    lines.append("  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip())
    lines.append("  ".join("-" * w for w in widths))
    for r in cells:
        lines.append("  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip())
    return "\n".join(lines) + "\n"


def emit_report(results, config: RunConfig) -> str:
    """Format indicator results or a reproduction report per ``config``."""
    from .reproduce import Report

    if isinstance(results, Report):
        return results.render(config.fmt, config.digits)
    results = list(results)
    if all(isinstance(r, IndicatorResult) for r in results):
        return emit_rows(indicator_rows(results), SCORES_HEADER, config.fmt, config.digits)
    raise PartnormError(f"cannot emit results of type {type(results[0]).__name__}")
