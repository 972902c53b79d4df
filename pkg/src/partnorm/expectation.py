"""Expected citation rates.

Two reference sets are supported: a partition cell (all journals with exactly
the same category combination) and a whole subject category with 1/N
fractional counting. Rates are strictly per publication year; a journal
without a stats row for the year contributes zero items and zero citations.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass

from .errors import HarmonicZero, UndefinedRate, UnknownKey
from .model import ExpectedRate, JournalId, Number, Publication, SubjectCategoryId, Universe
from .partition import CellKey, Partition, cell_of

MEAN_KINDS = ("arithmetic", "harmonic")


def cell_mass(cell: CellKey, year: int, universe: Universe, partition: Partition) -> tuple[float, float]:
    """Pooled (items, citations) of a cell's journals in one year."""
    try:
        members = partition.cells[cell]
    except KeyError:
        raise UnknownKey(cell) from None
    counts = [universe.counts(j, year) for j in sorted(members)]
    return math.fsum(i for i, _ in counts), math.fsum(c for _, c in counts)


def category_mass_fractional(category: SubjectCategoryId, year: int, universe: Universe) -> tuple[float, float]:
    """1/N-weighted (items, citations) of a category in one year.

    The 1/N weight applies to both items and citations.
    """
    members = universe.journals_in_category(category)
    if not members:
        raise UnknownKey(category)
    items, cites = [], []
    for j in members:
        n = universe.classification(j).multiplicity
        i, c = universe.counts(j, year)
        items.append(i / n)
        cites.append(c / n)
    return math.fsum(items), math.fsum(cites)


def _rate(items: float, cites: float, scope: str, key, year: int) -> ExpectedRate:
    if items == 0:
        raise UndefinedRate(f"no items for {scope} {key} in {year}")
    return ExpectedRate(cites / items, scope, key, year)


def cell_expected_rate(cell: CellKey, year: int, universe: Universe, partition: Partition) -> ExpectedRate:
    items, cites = cell_mass(cell, year, universe, partition)
    return _rate(items, cites, "cell", cell, year)


def category_expected_rate_fractional(category: SubjectCategoryId, year: int, universe: Universe) -> ExpectedRate:
    items, cites = category_mass_fractional(category, year, universe)
    return _rate(items, cites, "category", category, year)


def combine_category_rates(rates: Sequence[float], mean_kind: str) -> float:
    """Equal-weight mean of the category rates of a multi-category journal."""
    if mean_kind not in MEAN_KINDS:
        raise ValueError(f"mean_kind must be one of {MEAN_KINDS}, got {mean_kind!r}")
    if not rates:
        raise ValueError("no category rates to combine")
    if len(rates) == 1:
        return float(rates[0])
    if mean_kind == "arithmetic":
        return math.fsum(rates) / len(rates)
    if any(r == 0 for r in rates):
        raise HarmonicZero("harmonic mean over a zero category rate")
    return len(rates) / math.fsum(1.0 / r for r in rates)


def partition_expected_for_publication(pub: Publication, partition: Partition, universe: Universe) -> ExpectedRate:
    key = cell_of(partition, pub.journal)
    return cell_expected_rate(key, pub.pub_year, universe, partition)


def standard_expected_for_publication(pub: Publication, universe: Universe, mean_kind: str) -> ExpectedRate:
    cats = sorted(universe.categories_of(pub.journal))
    rates = [category_expected_rate_fractional(c, pub.pub_year, universe).value for c in cats]
    return ExpectedRate(combine_category_rates(rates, mean_kind), "publication", pub.journal, pub.pub_year)


def aggregate_impact_factor(
    journals: Iterable[JournalId],
    if_stats: Mapping[JournalId, tuple[Number, Number]],
) -> float:
    """Pooled citations over pooled citable items for a set of journals.

    ``if_stats`` maps each journal to ``(items_two_prior_years, cites_received)``.
    """
    rows = []
    for j in journals:
        if j not in if_stats:
            raise UnknownKey(j)
        rows.append(if_stats[j])
    items = math.fsum(i for i, _ in rows)
    cites = math.fsum(c for _, c in rows)
    if items == 0:
        raise UndefinedRate("aggregate impact factor over zero items")
    return cites / items


@dataclass(frozen=True)
class RateTable:
    """All cell and category rates of a universe.

    ``None`` marks a key-year that exists (some member has a stats row) but
    whose item mass is zero, so its rate is undefined.
    """

    cell_rates: Mapping[tuple[CellKey, int], ExpectedRate | None]
    category_rates: Mapping[tuple[SubjectCategoryId, int], ExpectedRate | None]

    __hash__ = None

    def cell(self, key: CellKey, year: int) -> ExpectedRate:
        rate = self.cell_rates.get((key, year))
        if rate is None:
            raise UndefinedRate(f"no rate for cell {key} in {year}")
        return rate

    def category(self, category: SubjectCategoryId, year: int) -> ExpectedRate:
        rate = self.category_rates.get((category, year))
        if rate is None:
            raise UndefinedRate(f"no rate for category {category} in {year}")
        return rate


def build_rate_table(universe: Universe, partition: Partition) -> RateTable:
    present = {}
    for j, y in universe.stats:
        present.setdefault(y, set()).add(j)

    cell_rates: dict = {}
    category_rates: dict = {}
    for year in sorted(present):
        have = present[year]
        for key, members in partition.sorted_cells():
            if have.isdisjoint(members):
                continue
            try:
                cell_rates[key, year] = cell_expected_rate(key, year, universe, partition)
            except UndefinedRate:
                cell_rates[key, year] = None
        for cat in universe.categories:
            if have.isdisjoint(universe.journals_in_category(cat)):
                continue
            try:
                category_rates[cat, year] = category_expected_rate_fractional(cat, year, universe)
            except UndefinedRate:
                category_rates[cat, year] = None
    return RateTable(cell_rates, category_rates)
