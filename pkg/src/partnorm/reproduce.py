"""End-to-end recomputation of the published worked examples from the
embedded fixtures, as computed-vs-published comparison reports."""

from __future__ import annotations

from dataclasses import dataclass, field

from . import fixtures as fx
from .expectation import combine_category_rates
from .indicators import VARIANTS, compute_indicator, ratio_q, score_global, score_per_publication
from .io import emit_rows, format_number, round_half_up
from .model import ExpectedRate, Publication, Universe
from .partition import CellKey, build_partition, reference_domains
from .stats import correlate_scores

TABLE5_TOLERANCE = 0.005
TABLE8_INDICATOR_TOLERANCE = 0.02
TABLE8_Q_TOLERANCE = 0.01
TABLE8_CORRELATION_TOLERANCE = 0.01


@dataclass(frozen=True)
class ComparisonRow:
    label: str
    computed: float | str
    published: float | str | None
    tolerance: float | None
    passed: bool


@dataclass
class Report:
    name: str
    title: str
    rows: list[ComparisonRow] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rows)

    @property
    def n_failed(self) -> int:
        return sum(not r.passed for r in self.rows)

    def add(self, label, computed, published, tolerance, *, rounded_digits: int | None = None) -> ComparisonRow:
        """Compare within an absolute tolerance, optionally after display rounding."""
        shown = float(round_half_up(computed, rounded_digits)) if rounded_digits is not None else computed
        ok = abs(shown - published) <= tolerance + 1e-12
        row = ComparisonRow(label, computed, published, tolerance, ok)
        self.rows.append(row)
        return row

    def check(self, label, computed, expectation, passed: bool) -> ComparisonRow:
        row = ComparisonRow(label, computed, expectation, None, bool(passed))
        self.rows.append(row)
        return row

    def render(self, fmt: str = "text", digits: int = 2) -> str:
        columns = ("label", "computed", "published", "tolerance", "status")
        rows = [
            {
                "label": r.label,
                "computed": r.computed,
                "published": r.published,
                # text would round tolerances such as 0.005 away
                "tolerance": format_number(r.tolerance) if fmt == "text" and r.tolerance is not None else r.tolerance,
                "status": "PASS" if r.passed else "FAIL",
            }
            for r in self.rows
        ]
        text = emit_rows(rows, columns, fmt, digits, title=self.title if fmt != "csv" else None)
        if fmt == "text":
            verdict = "PASS" if self.passed else f"FAIL ({self.n_failed} of {len(self.rows)} cells)"
            text += f"{self.name}: {verdict}\n"
        return text


# --------------------------------------------------------------------------


def table5_expected_fns(universe: Universe, e_values: dict | None = None):
    """Expected-rate callables for the four variants driven by fixed E values."""
    e = e_values or fx.TABLE5_E_VALUES
    cells = {
        CellKey([fx.CAT_CS]): e["cell"]["S_1e"],
        CellKey([fx.CAT_CS, fx.CAT_IS]): e["cell"]["I"],
        CellKey([fx.CAT_IS]): e["cell"]["S_2e"],
    }
    cats = {fx.CAT_CS: e["category"]["S_1"], fx.CAT_IS: e["category"]["S_2"]}

    def cell_fn(pub: Publication):
        key = CellKey(universe.categories_of(pub.journal))
        return ExpectedRate(cells[key], "cell", key, pub.pub_year)

    def standard(mean_kind):
        def fn(pub: Publication):
            rates = [cats[c] for c in sorted(universe.categories_of(pub.journal))]
            return ExpectedRate(combine_category_rates(rates, mean_kind), "publication", pub.journal, pub.pub_year)

        return fn

    return {
        "P-NMCR": (score_global, cell_fn),
        "NMCR": (score_global, standard("arithmetic")),
        "P-MNCR": (score_per_publication, cell_fn),
        "MNCR": (score_per_publication, standard("harmonic")),
    }


def table5_results(a: float = 1.0, e_values: dict | None = None):
    universe = fx.table2_universe()
    fns = table5_expected_fns(universe, e_values)
    records = fx.table5_records(a)
    return {
        variant: [score(rec, fn, variant=variant) for rec in records]
        for variant, (score, fn) in fns.items()
    }


def reproduce_table5() -> Report:
    report = Report("table5", "Fictive two-record example (A = 1)")
    pub = fx.TABLE5_PUBLISHED
    for variant, (r1, r2) in table5_results().items():
        report.add(f"{variant} R_1", r1.value, pub["record 1"][variant], TABLE5_TOLERANCE)
        report.add(f"{variant} R_2", r2.value, pub["record 2"][variant], TABLE5_TOLERANCE)
        report.add(f"{variant} Q", ratio_q(r1, r2), pub["Q"][variant], TABLE5_TOLERANCE)
    return report


def table8_results():
    universe = fx.table7_universe()
    partition = build_partition(universe)
    return [
        compute_indicator(rec, variant, universe, partition)
        for rec in fx.table6_records()
        for variant in VARIANTS
    ]


def reproduce_table8() -> Report:
    report = Report("table8", "Ten-researcher example: indicators, Q ratios and correlations")
    results = table8_results()
    by_key = {(r.record_id, r.variant): r for r in results}
    for (rid, variant), res in by_key.items():
        report.add(
            f"{rid} {variant}",
            res.value,
            fx.TABLE8_INDICATORS[rid][variant],
            TABLE8_INDICATOR_TOLERANCE,
            rounded_digits=2,
        )
    first, second = fx.TABLE8_PAIR
    for variant, q in fx.TABLE8_Q.items():
        report.add(f"Q {variant}", ratio_q(by_key[first, variant], by_key[second, variant]), q, TABLE8_Q_TOLERANCE)
    for cell in correlate_scores(results, fx.table8_ratings()):
        r_pub, p_pub = fx.TABLE8_CORRELATIONS[cell.result.method, cell.aspect, cell.variant]
        label = f"{cell.result.method} {cell.aspect} / {cell.variant}"
        report.add(f"{label} r", cell.result.r, r_pub, TABLE8_CORRELATION_TOLERANCE)
        report.add(f"{label} p", cell.result.p_one_tailed, p_pub, TABLE8_CORRELATION_TOLERANCE)
    return report


def reproduce_table9_nesting() -> Report:
    report = Report("table9-nesting", "Reference domains: D_j <= D_p <= D_f")
    universe = fx.table7_universe()
    partition = build_partition(universe)
    for rec in fx.table6_records():
        d = reference_domains(rec, partition, universe)
        dj, dp, df = (d[k].journals for k in ("D_j", "D_p", "D_f"))
        report.check(
            rec.record_id,
            f"|D_j|={len(dj)} |D_p|={len(dp)} |D_f|={len(df)}",
            "D_j subset D_p subset D_f",
            dj <= dp <= df,
        )
    return report


REPRODUCTIONS = {
    "table5": reproduce_table5,
    "table8": reproduce_table8,
    "table9-nesting": reproduce_table9_nesting,
}


def reproduce(example: str) -> Report:
    try:
        fn = REPRODUCTIONS[example]
    except KeyError:
        raise ValueError(f"unknown example {example!r}; choose from {', '.join(REPRODUCTIONS)}") from None
    return fn()
