"""Embedded example data.

Two settings are shipped:

* The two-category intersection (computer science / information science).
  Only aggregate impact factors and journal counts are published for it, so
  :func:`table2_universe` rebuilds a one-year universe whose cell and
  category aggregates match the published ones. The citable-item masses
  behind the impact factors are recovered from the fact that a whole
  category's aggregate is the item-weighted pool of its two cells.
* The ten-researcher example: yearly article/citation counts per journal
  and the five most cited articles of each researcher, stored verbatim,
  with the published indicator values, peer ratings and correlations.
"""

from __future__ import annotations

from .model import (
    JournalClassification,
    JournalYearStats,
    Publication,
    PublicationRecord,
    RatingVector,
    Universe,
    validate_universe,
)

# --------------------------------------------------------------------------
# two-category intersection

CAT_CS = "COMPUTER SCIENCE, INTERDISCIPLINARY APPLICATIONS"
CAT_IS = "INFORMATION SCIENCE & LIBRARY SCIENCE"
TABLE2_YEAR = 2009

TABLE2_PUBLISHED = {
    "journals": {"S_1": 95, "S_1e": 92, "I": 3, "S_2e": 63, "S_2": 66},
    "articles_and_reviews": {"S_1": 9576, "S_1e": 9246, "I": 330, "S_2e": 2289, "S_2": 2619},
    "aggregate_if": {"S_1": 1.649, "S_1e": 1.618, "I": 2.659, "S_2e": 1.191, "S_2": 1.331},
    "max_if": {"S_1": 3.974, "S_1e": 3.882, "I": 3.974, "S_2e": 4.485, "S_2": 4.485},
    "min_if": {"S_1": 0.203, "S_1e": 0.203, "I": 0.635, "S_2e": 0.000, "S_2": 0.000},
    # authors publishing in the intersection who also publish in ...
    "author_overlap": {"only_first": 0.174, "only_second": 0.075, "both": 0.164, "neither": 0.586},
}

INTERSECTION_JOURNALS = {
    "I_1": "SCIENTOMETRICS",
    "I_2": "JOURNAL OF THE AMERICAN MEDICAL INFORMATICS ASSOCIATION",
    "I_3": "SOCIAL SCIENCE COMPUTER REVIEW",
}

# citable items (two prior years) behind the intersection's impact factor;
# only the ratios between cells matter for any rate
INTERSECTION_IF_ITEMS = 660

# expected rates as used in the fictive two-record example
TABLE5_E_VALUES = {
    "cell": {"S_1e": 1.618, "I": 2.659, "S_2e": 1.191},
    "category": {"S_1": 1.633, "S_2": 1.265},
}

TABLE5_PUBLISHED = {
    "record 1": {"P-NMCR": 1.000, "NMCR": 1.564, "P-MNCR": 1.000, "MNCR": 1.557},
    "record 2": {"P-NMCR": 1.000, "NMCR": 1.267, "P-MNCR": 1.000, "MNCR": 1.250},
    "Q": {"P-NMCR": 1.00, "NMCR": 1.23, "P-MNCR": 1.00, "MNCR": 1.25},
}


def table2_item_masses(items_intersection: float = INTERSECTION_IF_ITEMS) -> dict[str, float]:
    """Citable-item masses per cell consistent with the published aggregates.

    For category k: IF_k * (n_I + n_ke) = IF_I * n_I + IF_ke * n_ke, hence
    n_ke / n_I = (IF_I - IF_k) / (IF_k - IF_ke).
    """
    agg = TABLE2_PUBLISHED["aggregate_if"]
    ratio_1 = (agg["I"] - agg["S_1"]) / (agg["S_1"] - agg["S_1e"])
    ratio_2 = (agg["I"] - agg["S_2"]) / (agg["S_2"] - agg["S_2e"])
    return {"S_1e": ratio_1 * items_intersection, "I": float(items_intersection), "S_2e": ratio_2 * items_intersection}


def _spread(total: int, k: int) -> list[int]:
    base, extra = divmod(total, k)
    return [base + (1 if i < extra else 0) for i in range(k)]


def table2_cells() -> dict[str, dict]:
    """Per-cell journal ids, categories and integer (items, citations) totals."""
    masses = table2_item_masses()
    agg = TABLE2_PUBLISHED["aggregate_if"]
    n = TABLE2_PUBLISHED["journals"]
    out = {}
    for cell, prefix, cats in (
        ("S_1e", "S1E", (CAT_CS,)),
        ("I", None, (CAT_CS, CAT_IS)),
        ("S_2e", "S2E", (CAT_IS,)),
    ):
        items = round(masses[cell])
        cites = round(agg[cell] * items)
        if prefix is None:
            ids = list(INTERSECTION_JOURNALS)
        else:
            ids = [f"{prefix}_{i:02d}" for i in range(1, n[cell] + 1)]
        out[cell] = {"journals": ids, "categories": cats, "items": items, "citations": cites}
    return out


def table2_universe() -> Universe:
    classes, rows = [], []
    for cell in table2_cells().values():
        ids = cell["journals"]
        for jid, i, c in zip(ids, _spread(cell["items"], len(ids)), _spread(cell["citations"], len(ids))):
            classes.append(JournalClassification(jid, frozenset(cell["categories"]), INTERSECTION_JOURNALS.get(jid)))
            rows.append(JournalYearStats(jid, TABLE2_YEAR, i, c))
    return validate_universe(classes, rows)


def table5_records(a: float = 1.0) -> list[PublicationRecord]:
    """The two fictive records: shares 2/3 vs 1/3 in the intersection.

    Every publication receives ``a`` times its cell's expected rate.
    """
    e_int = a * TABLE5_E_VALUES["cell"]["I"]
    e_2e = a * TABLE5_E_VALUES["cell"]["S_2e"]
    y = TABLE2_YEAR
    return [
        PublicationRecord("record 1", (Publication("I_1", y, e_int), Publication("I_2", y, e_int), Publication("S2E_01", y, e_2e))),
        PublicationRecord("record 2", (Publication("I_1", y, e_int), Publication("S2E_01", y, e_2e), Publication("S2E_02", y, e_2e))),
    ]


# --------------------------------------------------------------------------
# ten-researcher example

TABLE7_YEARS = (2004, 2005, 2006, 2007, 2008)

# journal -> (categories, [(articles, citations until 2010) per year from 2004])
TABLE7 = {
    "J_1": (("S_1", "S_2", "S_3", "S_4"), [(1721, 11048), (1355, 8990), (1643, 7259), (1886, 6541), (871, 2434)]),
    "J_2": (("S_5",), [(3575, 145480), (3692, 125678), (3758, 105279), (3545, 78090), (3905, 64803)]),
    "J_3": (("S_6",), [(916, 136688)]),
    "J_4": (("S_5",), [(1036, 22966), (953, 18003), (997, 15271), (837, 11505), (918, 9174)]),
    "J_5": (("S_2", "S_7"), [(2206, 51808), (2161, 44028), (2287, 39834), (2177, 32220), (2750, 29020)]),
    "J_6": (("S_2", "S_7"), [(131, 2916), (147, 3145), (203, 3923), (262, 3691), (321, 3600)]),
    "J_7": (("S_2",), [(649, 4730), (342, 4180), (270, 2531), (359, 2557), (314, 1853)]),
    "J_8": (("S_5",), [(547, 1125), (299, 587), (570, 817), (0, 0), (0, 0)]),
    "J_9": (("S_5",), [(246, 1128), (309, 1149), (298, 734), (363, 903), (274, 299)]),
    "J_10": (("S_1",), [(0, 0), (0, 0), (43, 136), (79, 198), (93, 468)]),
    "J_11": (("S_2", "S_7"), [(103, 2138), (90, 1758), (87, 1101), (107, 1263), (88, 782)]),
    # all other journals classified in that category only
    "REST_S_1": (("S_1",), [(101, 701), (161, 836), (166, 843), (243, 1887), (250, 1846)]),
    "REST_S_2": (("S_2",), [(1357, 27149), (1380, 24556), (1407, 20283), (1523, 18938), (1589, 17527)]),
    "REST_S_3": (("S_3",), [(1535, 13058), (1797, 15080), (1400, 9487), (1717, 9051), (1675, 6487)]),
    "REST_S_4": (("S_4",), [(1500, 5467), (2184, 6953), (2024, 6154), (2301, 4986), (2827, 4020)]),
    "REST_S_5": (("S_5",), [(8450, 49897), (9025, 51516), (9376, 50736), (11276, 48096), (12839, 43789)]),
    "REST_S_6": (("S_6",), [(7418, 366766)]),
    "REST_S_7": (("S_7",), [(8324, 194774), (8345, 163913), (9095, 156132), (9184, 121031), (8309, 71890)]),
}

# researcher -> five most cited articles as (journal, year, citations)
TABLE6 = {
    "Researcher 1": [("J_1", 2006, 226), ("J_2", 2004, 180), ("J_3", 2004, 125), ("J_2", 2008, 74), ("J_2", 2007, 71)],
    "Researcher 2": [("J_4", 2004, 298), ("J_2", 2005, 278), ("J_5", 2005, 133), ("J_2", 2004, 86), ("J_6", 2007, 40)],
    "Researcher 3": [("J_1", 2006, 226), ("J_2", 2004, 180), ("J_2", 2008, 74), ("J_2", 2007, 71), ("J_2", 2007, 59)],
    "Researcher 4": [("J_1", 2006, 226), ("J_2", 2004, 180), ("J_2", 2004, 58), ("J_2", 2005, 54), ("J_2", 2005, 36)],
    "Researcher 5": [("J_7", 2006, 9), ("J_1", 2005, 2), ("J_8", 2005, 1), ("J_9", 2007, 0), ("J_10", 2008, 0)],
    "Researcher 6": [("J_2", 2004, 276), ("J_4", 2004, 136), ("J_7", 2005, 69), ("J_7", 2006, 66), ("J_7", 2006, 64)],
    "Researcher 7": [("J_4", 2004, 136), ("J_7", 2005, 69), ("J_7", 2006, 66), ("J_7", 2006, 64), ("J_7", 2005, 63)],
    "Researcher 8": [("J_11", 2008, 144), ("J_2", 2008, 139), ("J_2", 2008, 96), ("J_11", 2008, 63), ("J_2", 2008, 50)],
    "Researcher 9": [("J_5", 2005, 329), ("J_2", 2004, 249), ("J_2", 2006, 170), ("J_5", 2005, 125), ("J_2", 2008, 96)],
    "Researcher 10": [("J_7", 2007, 51), ("J_7", 2004, 48), ("J_7", 2004, 24), ("J_4", 2005, 23), ("J_4", 2005, 14)],
}

TABLE8_INDICATORS = {
    "Researcher 1": {"P-NMCR": 7.04, "NMCR": 6.86, "P-MNCR": 16.80, "MNCR": 15.15},
    "Researcher 2": {"P-NMCR": 10.35, "NMCR": 10.92, "P-MNCR": 10.71, "MNCR": 10.96},
    "Researcher 3": {"P-NMCR": 13.79, "NMCR": 13.04, "P-MNCR": 17.75, "MNCR": 16.10},
    "Researcher 4": {"P-NMCR": 8.68, "NMCR": 8.34, "P-MNCR": 14.52, "MNCR": 12.87},
    "Researcher 5": {"P-NMCR": 0.24, "NMCR": 0.24, "P-MNCR": 0.21, "MNCR": 0.21},
    "Researcher 6": {"P-NMCR": 8.07, "NMCR": 7.96, "P-MNCR": 7.91, "MNCR": 7.85},
    "Researcher 7": {"P-NMCR": 5.20, "NMCR": 5.11, "P-MNCR": 5.20, "MNCR": 5.13},
    "Researcher 8": {"P-NMCR": 12.03, "NMCR": 12.74, "P-MNCR": 12.57, "MNCR": 13.06},
    "Researcher 9": {"P-NMCR": 12.95, "NMCR": 13.69, "P-MNCR": 13.44, "MNCR": 13.96},
    "Researcher 10": {"P-NMCR": 2.26, "NMCR": 2.17, "P-MNCR": 2.34, "MNCR": 2.26},
}

# shortlisted pair: Researcher 1 over Researcher 2
TABLE8_Q = {"P-NMCR": 0.68, "NMCR": 0.63, "P-MNCR": 1.57, "MNCR": 1.38}
TABLE8_PAIR = ("Researcher 1", "Researcher 2")

ASPECT_BACKGROUND = "Scientific background"
ASPECT_ALL = "All aspects"

# average peer ratings, 1 (best) to 5
TABLE8_RATINGS = {
    ASPECT_BACKGROUND: [1.67, 2.00, 2.00, 2.00, 2.67, 2.33, 2.00, 2.67, 2.50, 4.00],
    ASPECT_ALL: [1.44, 1.70, 1.70, 1.78, 1.96, 2.04, 2.06, 2.30, 2.33, 2.44],
}

# (method, aspect, variant) -> (r, one-tailed p)
TABLE8_CORRELATIONS = {
    ("pearson", ASPECT_BACKGROUND, "P-NMCR"): (-0.43, 0.11),
    ("pearson", ASPECT_BACKGROUND, "NMCR"): (-0.40, 0.13),
    ("pearson", ASPECT_BACKGROUND, "P-MNCR"): (-0.61, 0.03),
    ("pearson", ASPECT_BACKGROUND, "MNCR"): (-0.59, 0.04),
    ("pearson", ASPECT_ALL, "P-NMCR"): (-0.12, 0.37),
    ("pearson", ASPECT_ALL, "NMCR"): (-0.07, 0.43),
    ("pearson", ASPECT_ALL, "P-MNCR"): (-0.50, 0.07),
    ("pearson", ASPECT_ALL, "MNCR"): (-0.42, 0.11),
    ("spearman", ASPECT_BACKGROUND, "P-NMCR"): (-0.23, 0.27),
    ("spearman", ASPECT_BACKGROUND, "NMCR"): (-0.18, 0.31),
    ("spearman", ASPECT_BACKGROUND, "P-MNCR"): (-0.63, 0.03),
    ("spearman", ASPECT_BACKGROUND, "MNCR"): (-0.52, 0.06),
    ("spearman", ASPECT_ALL, "P-NMCR"): (-0.13, 0.36),
    ("spearman", ASPECT_ALL, "NMCR"): (-0.05, 0.44),
    ("spearman", ASPECT_ALL, "P-MNCR"): (-0.52, 0.06),
    ("spearman", ASPECT_ALL, "MNCR"): (-0.41, 0.12),
}


def table7_classifications() -> list[JournalClassification]:
    out = []
    for jid, (cats, _) in TABLE7.items():
        name = f"All other {cats[0]}-only journals" if jid.startswith("REST_") else None
        out.append(JournalClassification(jid, frozenset(cats), name))
    return out


def table7_stats() -> list[JournalYearStats]:
    return [
        JournalYearStats(jid, year, items, cites)
        for jid, (_, rows) in TABLE7.items()
        for year, (items, cites) in zip(TABLE7_YEARS, rows)
    ]


def table7_universe() -> Universe:
    return validate_universe(table7_classifications(), table7_stats())


def table6_records() -> list[PublicationRecord]:
    return [
        PublicationRecord(rid, tuple(Publication(j, y, c) for j, y, c in pubs))
        for rid, pubs in TABLE6.items()
    ]


def table8_ratings() -> list[RatingVector]:
    ids = list(TABLE6)
    return [RatingVector(aspect, dict(zip(ids, vals))) for aspect, vals in TABLE8_RATINGS.items()]
