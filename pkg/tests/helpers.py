"""Generators and exact-arithmetic oracles shared by the test modules."""

import random
from fractions import Fraction

from hypothesis import strategies as st

from partnorm import fixtures as fx
from partnorm.model import JournalClassification, JournalYearStats, Publication, PublicationRecord, validate_universe

CATEGORY_POOL = ("A", "B", "C", "D", "E")
YEARS = (2004, 2005)


def random_universe(rng: random.Random, *, max_journals=8, single_category=False, positive=True):
    """A small universe with yearly stats for every journal.

    ``positive`` keeps items >= 1 so every rate is defined; citations are 0
    whenever items are 0.
    """
    n = rng.randint(1, max_journals)
    classes, rows = [], []
    for i in range(n):
        if single_category:
            cats = {rng.choice(CATEGORY_POOL)}
        else:
            cats = set(rng.sample(CATEGORY_POOL, rng.randint(1, 3)))
        classes.append(JournalClassification(f"j{i}", frozenset(cats)))
        for y in YEARS:
            items = rng.randint(1 if positive else 0, 40)
            cites = rng.randint(0, 300) if items else 0
            rows.append(JournalYearStats(f"j{i}", y, items, cites))
    return validate_universe(classes, rows)


def random_record(rng: random.Random, universe, size=None, rid="r"):
    ids = list(universe.journals)
    size = size or rng.randint(1, 6)
    pubs = tuple(Publication(rng.choice(ids), rng.choice(YEARS), rng.randint(0, 100)) for _ in range(size))
    return PublicationRecord(rid, pubs)


def all_items_record(universe, journals=None):
    """Every published item as its own publication carrying the journal-year's
    mean citations."""
    pubs = []
    for (j, y), row in universe.stats.items():
        if journals is not None and j not in journals:
            continue
        if row.items:
            pubs.extend([Publication(j, y, row.citations / row.items)] * int(row.items))
    return PublicationRecord("world", tuple(pubs))


@st.composite
def universes(draw, max_journals=8, single_category=False):
    seed = draw(st.integers(0, 2**32 - 1))
    return random_universe(random.Random(seed), max_journals=max_journals, single_category=single_category)


# --------------------------------------------------------------------------
# exact-arithmetic oracles over raw Table 7 data (no engine code involved)


def oracle_cell_rate(cats, year):
    items = cites = 0
    for cs, rows in fx.TABLE7.values():
        if set(cs) == set(cats):
            idx = fx.TABLE7_YEARS.index(year)
            if idx < len(rows):
                items += rows[idx][0]
                cites += rows[idx][1]
    return Fraction(cites, items)


def oracle_category_rate(cat, year):
    items = cites = Fraction(0)
    for cs, rows in fx.TABLE7.values():
        if cat in cs:
            idx = fx.TABLE7_YEARS.index(year)
            if idx < len(rows):
                items += Fraction(rows[idx][0], len(cs))
                cites += Fraction(rows[idx][1], len(cs))
    return cites / items


def oracle_indicators(pubs):
    """Four variants for a list of (journal, year, citations), exact where possible."""
    exp_p, exp_a, exp_h = [], [], []
    for j, y, _ in pubs:
        cats = fx.TABLE7[j][0]
        exp_p.append(oracle_cell_rate(cats, y))
        rates = [oracle_category_rate(c, y) for c in cats]
        exp_a.append(sum(rates) / len(rates))
        exp_h.append(len(rates) / sum(1 / r for r in rates))
    cites = [c for _, _, c in pubs]
    n = len(pubs)
    return {
        "P-NMCR": sum(cites) / sum(exp_p),
        "NMCR": sum(cites) / sum(exp_a),
        "P-MNCR": sum(Fraction(c) / e for c, e in zip(cites, exp_p)) / n,
        "MNCR": sum(Fraction(c) / e for c, e in zip(cites, exp_h)) / n,
    }
