"""Partition of a journal universe by exact category combination, and the
three nested reference domains (journal, partition, field)."""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from fractions import Fraction

from .errors import UnknownJournal
from .model import JournalId, PublicationRecord, SubjectCategoryId, Universe, check_record

DOMAIN_KINDS = ("D_j", "D_p", "D_f")


@dataclass(frozen=True, order=True)
class CellKey:
    """Canonical (sorted) category combination identifying one cell."""

    categories: tuple[SubjectCategoryId, ...]

    def __init__(self, categories: Iterable[SubjectCategoryId]):
        cats = tuple(sorted(set(categories)))
        if not cats:
            raise ValueError("a cell key needs at least one category")
        object.__setattr__(self, "categories", cats)

    def __str__(self):
        return ";".join(self.categories)

    def __len__(self):
        return len(self.categories)

    def __contains__(self, category):
        return category in self.categories

    @property
    def is_intersection(self) -> bool:
        return len(self.categories) > 1


@dataclass(frozen=True)
class Partition:
    cells: Mapping[CellKey, frozenset[JournalId]]
    index: Mapping[JournalId, CellKey]

    __hash__ = None

    def __len__(self):
        return len(self.cells)

    def members(self, key: CellKey) -> frozenset[JournalId]:
        return self.cells[key]

    def sorted_cells(self) -> list[tuple[CellKey, list[JournalId]]]:
        return [(k, sorted(self.cells[k])) for k in sorted(self.cells)]


@dataclass(frozen=True)
class ReferenceDomain:
    kind: str
    journals: frozenset[JournalId]
    weights: Mapping[JournalId, Fraction]

    __hash__ = None

    def __len__(self):
        return len(self.journals)


def build_partition(universe: Universe) -> Partition:
    cells: dict[CellKey, set[JournalId]] = {}
    index: dict[JournalId, CellKey] = {}
    for jid, cls in universe.journals.items():
        key = CellKey(cls.categories)
        cells.setdefault(key, set()).add(jid)
        index[jid] = key
    return Partition(cells={k: frozenset(v) for k, v in cells.items()}, index=index)


def cell_of(partition: Partition, journal: JournalId) -> CellKey:
    try:
        return partition.index[journal]
    except KeyError:
        raise UnknownJournal(journal) from None


def reference_domain(
    record: PublicationRecord,
    partition: Partition,
    universe: Universe,
    kind: str,
) -> ReferenceDomain:
    """Journals that determine the record's expected rates under ``kind``.

    D_f carries, per journal, the share of its categories that the record
    touches (an exact Fraction); D_j and D_p weigh every journal 1.
    """
    check_record(record, universe)
    touched = record.journals
    if kind == "D_j":
        journals = frozenset(touched)
        return ReferenceDomain(kind, journals, {j: Fraction(1) for j in journals})
    if kind == "D_p":
        keys = {cell_of(partition, j) for j in touched}
        journals = frozenset().union(*(partition.cells[k] for k in keys))
        return ReferenceDomain(kind, journals, {j: Fraction(1) for j in journals})
    if kind == "D_f":
        cats = frozenset().union(*(universe.categories_of(j) for j in touched))
        weights = {}
        for c in sorted(cats):
            for j in universe.journals_in_category(c):
                if j not in weights:
                    own = universe.categories_of(j)
                    weights[j] = Fraction(len(own & cats), len(own))
        return ReferenceDomain(kind, frozenset(weights), weights)
    raise ValueError(f"unknown reference domain kind {kind!r}; expected one of {DOMAIN_KINDS}")


def reference_domains(record, partition, universe) -> dict[str, ReferenceDomain]:
    return {k: reference_domain(record, partition, universe, k) for k in DOMAIN_KINDS}
