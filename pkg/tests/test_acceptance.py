"""Acceptance criteria, one test each.

Every test prints a single ``PASS``/``FAIL`` line; conftest repeats them in
the terminal summary. Run with ``pytest tests/test_acceptance.py -s`` to see
them inline.
"""

import math
import random
import warnings

from scipy.integrate import quad

from helpers import YEARS, all_items_record, oracle_cell_rate, oracle_indicators, random_record, random_universe
from partnorm import fixtures as fx
from partnorm.errors import DegenerateR, HarmonicZero, PartnormError
from partnorm.expectation import (
    aggregate_impact_factor,
    category_expected_rate_fractional,
    partition_expected_for_publication,
    standard_expected_for_publication,
)
from partnorm.indicators import VARIANTS, compute_indicator, ratio_q
from partnorm.io import round_half_up
from partnorm.model import Publication
from partnorm.partition import CellKey, build_partition, reference_domains
from partnorm.reproduce import table5_results, table8_results
from partnorm.stats import correlate_scores, one_tailed_p, spearman

N_UNIVERSES = 1000
SEED = 20100

VERDICTS = []


def verdict(n, title, failures):
    ok = not failures
    line = f"{'PASS' if ok else 'FAIL'} criterion {n}: {title}"
    if failures:
        line += f" ({len(failures)} mismatches; first: {failures[0]})"
    VERDICTS.append(line)
    print(line)
    assert ok, line


def close(got, want, tol):
    return abs(got - want) <= tol + 1e-12


def test_criterion_1_two_record_example():
    res = table5_results(a=1.0)
    pub = fx.TABLE5_PUBLISHED
    bad = []
    for variant, (r1, r2) in res.items():
        for label, got, want in (
            ("record 1", r1.value, pub["record 1"][variant]),
            ("record 2", r2.value, pub["record 2"][variant]),
            ("Q", ratio_q(r1, r2), pub["Q"][variant]),
        ):
            if not close(got, want, 0.005):
                bad.append(f"{variant} {label}: {got:.4f} vs {want}")
    verdict(1, "two-record R and Q values within 0.005", bad)


def test_criterion_2_ten_researcher_indicators(t7, researchers):
    u, p = t7
    bad = []

    # hand oracle first: Researcher 5's cell rates and indicators from raw rows
    r5 = researchers["Researcher 5"]
    hand = (13.604, 6.634, 13.792, 8.651, 6.747)
    for pub, shown in zip(r5.publications, hand):
        exact = float(oracle_cell_rate(fx.TABLE7[pub.journal][0], pub.pub_year))
        got = partition_expected_for_publication(pub, p, u).value
        if not close(got, exact, 1e-9) or not close(exact, shown, 1e-3):
            bad.append(f"R5 cell rate {pub.journal} {pub.pub_year}: {got} vs {exact} / {shown}")
    oracle = oracle_indicators([(q.journal, q.pub_year, q.citations) for q in r5.publications])
    for variant in VARIANTS:
        got = compute_indicator(r5, variant, u, p).value
        if not close(got, float(oracle[variant]), 1e-9):
            bad.append(f"R5 {variant} oracle: {got} vs {float(oracle[variant])}")

    results = table8_results()
    assert len(results) == 40
    for r in results:
        want = fx.TABLE8_INDICATORS[r.record_id][r.variant]
        shown = float(round_half_up(r.value, 2))
        if not close(shown, want, 0.02):
            bad.append(f"{r.record_id} {r.variant}: {shown} vs {want}")
    verdict(2, "40 indicator values within 0.02 after rounding; Researcher 5 oracle to 1e-9", bad)


def test_criterion_3_correlations():
    cells = correlate_scores(table8_results(), fx.table8_ratings())
    assert len(cells) == 16
    bad = []
    for c in cells:
        r_pub, p_pub = fx.TABLE8_CORRELATIONS[c.result.method, c.aspect, c.variant]
        if not (close(c.result.r, r_pub, 0.01) and close(c.result.p_one_tailed, p_pub, 0.01)):
            bad.append(f"{c.result.method} {c.aspect} {c.variant}: r={c.result.r:.3f} p={c.result.p_one_tailed:.3f}")
    verdict(3, "16 (r, p) cells within 0.01", bad)


def test_criterion_4_fractional_rates(t2):
    u, _ = t2
    bad = []
    for cat, want in ((fx.CAT_CS, 1.633), (fx.CAT_IS, 1.265)):
        got = category_expected_rate_fractional(cat, fx.TABLE2_YEAR, u).value
        if not close(got, want, 0.01):
            bad.append(f"{cat}: {got:.4f} vs {want}")
    verdict(4, "fractional E_1 and E_2 within 0.01", bad)


def _t_cdf_quadrature(t, df):
    """P(T <= t) by adaptive quadrature of the density."""
    log_c = math.lgamma((df + 1) / 2) - math.lgamma(df / 2) - 0.5 * math.log(df * math.pi)
    area, _ = quad(lambda x: math.exp(log_c - (df + 1) / 2 * math.log1p(x * x / df)), 0.0, t, epsabs=1e-13, epsrel=1e-13)
    return 0.5 + area


def _partition_and_nesting(u, rng, bad):
    p = build_partition(u)
    seen = set()
    for key, members in p.cells.items():
        if not members or members & seen or any(CellKey(u.categories_of(j)) != key for j in members):
            bad.append("partition law")
        seen |= members
    if seen != set(u.journals):
        bad.append("partition cover")
    d = reference_domains(random_record(rng, u), p, u)
    if not d["D_j"].journals <= d["D_p"].journals <= d["D_f"].journals:
        bad.append("nesting")
    return p


def _world_average(u, p, bad):
    for variant in ("P-NMCR", "P-MNCR"):
        world = compute_indicator(all_items_record(u), variant, u, p).value
        if not close(world, 1.0, 1e-12):
            bad.append(f"world average {variant}: {world!r}")
    for members in p.cells.values():
        rec = all_items_record(u, members)
        for variant in ("P-NMCR", "P-MNCR"):
            got = compute_indicator(rec, variant, u, p).value
            if not close(got, 1.0, 1e-12):
                bad.append(f"cell world average {variant}: {got!r}")


def _harmonic_le_arithmetic(u, bad):
    for j in u.journals:
        for y in YEARS:
            pub = Publication(j, y, 0)
            try:
                h = standard_expected_for_publication(pub, u, "harmonic").value
            except HarmonicZero:
                continue
            a = standard_expected_for_publication(pub, u, "arithmetic").value
            if h > a * (1 + 1e-12):
                bad.append(f"harmonic {h} > arithmetic {a}")


def _collapse(rng, bad):
    u = random_universe(rng, single_category=True)
    p = build_partition(u)
    rec = random_record(rng, u)
    for std, part in (("NMCR", "P-NMCR"), ("MNCR", "P-MNCR")):
        a, b = _outcome(rec, std, u, p), _outcome(rec, part, u, p)
        same = type(a) is type(b) and (not isinstance(a, float) or math.isclose(a, b, rel_tol=1e-12, abs_tol=1e-15))
        if not same:
            bad.append(f"collapse {std}: {a!r} vs {b!r}")


def _outcome(rec, variant, u, p):
    """Indicator value, or the error raised (degenerate records must fail alike)."""
    try:
        return compute_indicator(rec, variant, u, p).value
    except PartnormError as err:
        return err


def _spearman_closed_form(rng, bad):
    n = rng.randint(3, 30)
    x, y = list(range(n)), list(range(n))
    rng.shuffle(x)
    rng.shuffle(y)
    d2 = sum((a - b) ** 2 for a, b in zip(x, y))
    want = 1 - 6 * d2 / (n * (n * n - 1))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", DegenerateR)
        got = spearman(x, y).r
    if not close(got, want, 1e-12):
        bad.append(f"spearman closed form n={n}: {got} vs {want}")


def _p_vs_quadrature(rng, bad):
    r = rng.uniform(-0.99, 0.99)
    n = rng.randint(3, 80)
    t = r * math.sqrt((n - 2) / (1 - r * r))
    want = _t_cdf_quadrature(t, n - 2)
    got = one_tailed_p(r, n, "less")
    if not close(got, want, 1e-6):
        bad.append(f"one_tailed_p r={r} n={n}: {got} vs {want}")


def test_criterion_5_property_suite():
    bad = []
    for a in (1.0, 0.37, 2.5, 11.0):
        for variant in ("P-NMCR", "P-MNCR"):
            for r in table5_results(a)[variant]:
                if not math.isclose(r.value, a, rel_tol=1e-12):
                    bad.append(f"A-scaling {variant} A={a}: {r.value}")
    for k in range(N_UNIVERSES):
        rng = random.Random(SEED + k)
        u = random_universe(rng, max_journals=6)
        p = _partition_and_nesting(u, rng, bad)
        _world_average(u, p, bad)
        _harmonic_le_arithmetic(u, bad)
        _collapse(rng, bad)
        _spearman_closed_form(rng, bad)
        _p_vs_quadrature(rng, bad)
    verdict(5, f"property suite over {N_UNIVERSES} seeded universes", bad)


def test_criterion_6_intersection_outside_range(t2):
    u, p = t2
    year = fx.TABLE2_YEAR
    stats = {j: u.counts(j, year) for j in u.journals}
    whole = [aggregate_impact_factor(u.journals_in_category(c), stats) for c in (fx.CAT_CS, fx.CAT_IS)]
    frac = [category_expected_rate_fractional(c, year, u).value for c in (fx.CAT_CS, fx.CAT_IS)]
    bad = []
    if not (close(whole[0], 1.649, 5e-4) and close(whole[1], 1.331, 5e-4)):
        bad.append(f"category rates {whole}")
    for jid in fx.INTERSECTION_JOURNALS:
        pub = Publication(jid, year, 0)
        part = partition_expected_for_publication(pub, p, u).value
        if not close(part, 2.659, 5e-4) or part <= max(whole) or part <= max(frac):
            bad.append(f"partition rate for {jid}: {part}")
        for kind in ("arithmetic", "harmonic"):
            std = standard_expected_for_publication(pub, u, kind).value
            if not min(frac) <= std <= max(frac):
                bad.append(f"standard {kind} rate for {jid}: {std} outside {frac}")
    verdict(6, "intersection rate above both category rates, unclamped under partition expectation", bad)
