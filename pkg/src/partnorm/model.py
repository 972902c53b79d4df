"""Shared domain vocabulary: journals, classifications, yearly statistics,
publication records, and the result containers every other module returns."""

from __future__ import annotations

import math
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from functools import cached_property
from typing import Union

from .errors import (
    DuplicateJournal,
    DuplicateStatsRow,
    EmptyCategorySet,
    NegativeCount,
    UnknownJournal,
    UnknownJournalInStats,
    ValidationError,
)

SubjectCategoryId = str
JournalId = str
Number = Union[int, float]

VARIANT_NAMES = ("NMCR", "MNCR", "P-NMCR", "P-MNCR")


def _check_token(token, what):
    if not isinstance(token, str) or not token.strip():
        raise ValidationError(f"{what} must be a non-empty string, got {token!r}")
    return token


def _check_count(value, what):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ValidationError(f"{what} must be a number, got {value!r}")
    if not math.isfinite(value):
        raise ValidationError(f"{what} must be finite, got {value!r}")
    if value < 0:
        raise NegativeCount(f"{what} must be non-negative, got {value!r}")
    return value


@dataclass(frozen=True)
class JournalClassification:
    """A journal and the subject categories it is classified in.

    ``len(categories)`` is the journal's multiplicity N used for 1/N
    fractional counting.
    """

    journal: JournalId
    categories: frozenset[SubjectCategoryId]
    name: str | None = None

    def __post_init__(self):
        _check_token(self.journal, "journal id")
        cats = self.categories
        if isinstance(cats, str):
            raise ValidationError("categories must be a collection, not a single string")
        cats = list(cats)
        if not cats:
            raise EmptyCategorySet(self.journal)
        for c in cats:
            _check_token(c, "subject category")
        if len(set(cats)) != len(cats):
            raise ValidationError(f"journal {self.journal!r} lists a category twice")
        object.__setattr__(self, "categories", frozenset(cats))
        if self.name == "":
            object.__setattr__(self, "name", None)

    @property
    def multiplicity(self) -> int:
        return len(self.categories)


@dataclass(frozen=True)
class JournalYearStats:
    journal: JournalId
    year: int
    items: Number
    citations: Number

    def __post_init__(self):
        _check_token(self.journal, "journal id")
        if isinstance(self.year, bool) or not isinstance(self.year, int):
            raise ValidationError(f"year must be an integer, got {self.year!r}")
        _check_count(self.items, "items")
        _check_count(self.citations, "citations")


@dataclass(frozen=True)
class Publication:
    journal: JournalId
    pub_year: int
    citations: Number

    def __post_init__(self):
        _check_token(self.journal, "journal id")
        if isinstance(self.pub_year, bool) or not isinstance(self.pub_year, int):
            raise ValidationError(f"publication year must be an integer, got {self.pub_year!r}")
        _check_count(self.citations, "citations")


@dataclass(frozen=True)
class PublicationRecord:
    record_id: str
    publications: tuple[Publication, ...]

    def __post_init__(self):
        _check_token(self.record_id, "record id")
        pubs = tuple(self.publications)
        if not pubs:
            raise ValidationError(f"record {self.record_id!r} has no publications")
        object.__setattr__(self, "publications", pubs)

    def __len__(self):
        return len(self.publications)

    @property
    def journals(self) -> frozenset[JournalId]:
        return frozenset(p.journal for p in self.publications)


@dataclass(frozen=True)
class ExpectedRate:
    """Citations per item for a reference set in one publication year.

    ``scope`` is ``"cell"`` (key is a CellKey), ``"category"`` (key is a
    category token) or ``"publication"`` (key identifies the publication).
    """

    value: float
    scope: str
    key: object
    year: int

    def __post_init__(self):
        if self.scope not in ("cell", "category", "publication"):
            raise ValueError(f"unknown rate scope {self.scope!r}")
        if not math.isfinite(self.value) or self.value < 0:
            raise ValueError(f"expected rate must be finite and >= 0, got {self.value!r}")

    def __float__(self):
        return float(self.value)


@dataclass(frozen=True)
class IndicatorResult:
    record_id: str
    variant: str
    value: float
    n_used: int
    n_excluded: int = 0
    warnings: tuple[str, ...] = ()

    def __post_init__(self):
        if self.variant not in VARIANT_NAMES:
            raise ValueError(f"unknown variant {self.variant!r}")
        object.__setattr__(self, "warnings", tuple(self.warnings))

    @property
    def n_total(self) -> int:
        return self.n_used + self.n_excluded


@dataclass(frozen=True)
class CorrelationResult:
    method: str
    r: float
    p_one_tailed: float
    n: int


@dataclass(frozen=True)
class RatingVector:
    aspect: str
    values: Mapping[str, float] = field(default_factory=dict)


@dataclass(frozen=True, eq=True)
class Universe:
    """A validated, immutable journal universe.

    Build it with :func:`validate_universe`; direct construction skips the
    cross-row checks.
    """

    journals: Mapping[JournalId, JournalClassification]
    stats: Mapping[tuple[JournalId, int], JournalYearStats]

    __hash__ = None  # mappings are not hashable

    def __len__(self):
        return len(self.journals)

    def __contains__(self, journal):
        return journal in self.journals

    def classification(self, journal: JournalId) -> JournalClassification:
        try:
            return self.journals[journal]
        except KeyError:
            raise UnknownJournal(journal) from None

    def categories_of(self, journal: JournalId) -> frozenset[SubjectCategoryId]:
        return self.classification(journal).categories

    def counts(self, journal: JournalId, year: int) -> tuple[Number, Number]:
        """(items, citations) for a journal-year; (0, 0) when no row exists."""
        row = self.stats.get((journal, year))
        if row is None:
            return 0, 0
        return row.items, row.citations

    @cached_property
    def categories(self) -> tuple[SubjectCategoryId, ...]:
        return tuple(sorted({c for j in self.journals.values() for c in j.categories}))

    @cached_property
    def years(self) -> tuple[int, ...]:
        return tuple(sorted({y for _, y in self.stats}))

    @cached_property
    def _by_category(self) -> dict[SubjectCategoryId, tuple[JournalId, ...]]:
        out: dict[SubjectCategoryId, list[JournalId]] = {}
        for jid, cls in self.journals.items():
            for c in cls.categories:
                out.setdefault(c, []).append(jid)
        return {c: tuple(v) for c, v in out.items()}

    def journals_in_category(self, category: SubjectCategoryId) -> tuple[JournalId, ...]:
        return self._by_category.get(category, ())

    @property
    def classifications(self) -> list[JournalClassification]:
        return list(self.journals.values())

    @property
    def stats_rows(self) -> list[JournalYearStats]:
        return list(self.stats.values())


def validate_universe(
    classifications: Iterable[JournalClassification],
    stats: Iterable[JournalYearStats] = (),
) -> Universe:
    """Check cross-row consistency and freeze the universe.

    Raises DuplicateJournal, UnknownJournalInStats, EmptyCategorySet or
    DuplicateStatsRow naming the offending row.
    """
    journals: dict[JournalId, JournalClassification] = {}
    for cls in classifications:
        if not cls.categories:
            raise EmptyCategorySet(cls.journal)
        if cls.journal in journals:
            raise DuplicateJournal(cls.journal)
        journals[cls.journal] = cls

    rows: dict[tuple[JournalId, int], JournalYearStats] = {}
    for row in stats:
        if row.journal not in journals:
            raise UnknownJournalInStats(row.journal, row.year)
        key = (row.journal, row.year)
        if key in rows:
            raise DuplicateStatsRow(row.journal, row.year)
        rows[key] = row
    return Universe(journals=journals, stats=rows)


def check_record(record: PublicationRecord, universe: Universe) -> None:
    for pub in record.publications:
        if pub.journal not in universe:
            raise UnknownJournal(pub.journal)


def record_from_rows(record_id: str, rows: Sequence[tuple[JournalId, int, Number]]) -> PublicationRecord:
    """Shorthand: build a record from (journal, year, citations) triples."""
    return PublicationRecord(record_id, tuple(Publication(j, y, c) for j, y, c in rows))
