"""Normalized citation rates in four variants and the pairwise ratio Q.

A variant combines an expectation source (whole categories with 1/N
counting, or partition cells) with an aggregation level (global, i.e. sum of
citations over sum of expectations, or per publication, i.e. the mean of
citation/expectation ratios).
"""

from __future__ import annotations

import math
from collections.abc import Callable, Iterable
from dataclasses import dataclass
from typing import Union

from .errors import (
    AllExcluded,
    DivisionByZero,
    DivisionUndefined,
    UndefinedRate,
    VariantMismatch,
    ZeroExpectedMass,
)
from .expectation import partition_expected_for_publication, standard_expected_for_publication
from .model import ExpectedRate, IndicatorResult, Publication, PublicationRecord, Universe, check_record
from .partition import Partition

ExpectedFn = Callable[[Publication], Union[ExpectedRate, float]]


@dataclass(frozen=True)
class VariantSpec:
    name: str
    expectation_source: str  # "category-fractional" | "partition-cell"
    aggregation: str  # "global" | "per-publication"
    intersection_mean: str  # "arithmetic" | "harmonic" | "not-applicable"


NMCR = VariantSpec("NMCR", "category-fractional", "global", "arithmetic")
MNCR = VariantSpec("MNCR", "category-fractional", "per-publication", "harmonic")
P_NMCR = VariantSpec("P-NMCR", "partition-cell", "global", "not-applicable")
P_MNCR = VariantSpec("P-MNCR", "partition-cell", "per-publication", "not-applicable")

# display order of the comparison tables
VARIANTS: dict[str, VariantSpec] = {v.name: v for v in (P_NMCR, NMCR, P_MNCR, MNCR)}


def get_variant(name: str | VariantSpec) -> VariantSpec:
    if isinstance(name, VariantSpec):
        return name
    try:
        return VARIANTS[name.strip().upper()]
    except KeyError:
        raise ValueError(f"unknown variant {name!r}; expected one of {', '.join(VARIANTS)}") from None


def _resolve(record: PublicationRecord, expected_fn: ExpectedFn, strict: bool):
    """Pair each publication with its expected rate, or None when undefined."""
    pairs, warnings = [], []
    for i, pub in enumerate(record.publications):
        try:
            e = float(expected_fn(pub))
        except UndefinedRate as err:
            if strict:
                raise
            warnings.append(f"publication {i} ({pub.journal}, {pub.pub_year}) excluded: {err}")
            e = None
        pairs.append((pub, e))
    return pairs, warnings


def score_global(
    record: PublicationRecord,
    expected_fn: ExpectedFn,
    *,
    variant: str = "NMCR",
    strict: bool = False,
) -> IndicatorResult:
    pairs, warnings = _resolve(record, expected_fn, strict)
    used = [(p.citations, e) for p, e in pairs if e is not None]
    if not used:
        raise AllExcluded(f"record {record.record_id!r}: no publication has a defined expected rate")
    cites = math.fsum(c for c, _ in used)
    expected = math.fsum(e for _, e in used)
    if expected == 0:
        raise ZeroExpectedMass(
            f"record {record.record_id!r}: expected citations sum to zero"
            + (" while citations are positive" if cites > 0 else "")
        )
    return IndicatorResult(
        record.record_id, variant, cites / expected, len(used), len(pairs) - len(used), tuple(warnings)
    )


def score_per_publication(
    record: PublicationRecord,
    expected_fn: ExpectedFn,
    *,
    variant: str = "MNCR",
    strict: bool = False,
) -> IndicatorResult:
    pairs, warnings = _resolve(record, expected_fn, strict)
    ratios = []
    for i, (pub, e) in enumerate(pairs):
        if e is None:
            continue
        if e == 0:
            if strict:
                raise DivisionUndefined(
                    f"record {record.record_id!r}, publication {i}: zero expected rate"
                )
            warnings.append(f"publication {i} ({pub.journal}, {pub.pub_year}) excluded: zero expected rate")
            continue
        ratios.append(pub.citations / e)
    if not ratios:
        raise AllExcluded(f"record {record.record_id!r}: no publication has a usable expected rate")
    return IndicatorResult(
        record.record_id,
        variant,
        math.fsum(ratios) / len(ratios),
        len(ratios),
        len(pairs) - len(ratios),
        tuple(warnings),
    )


def _memoized(fn: ExpectedFn) -> ExpectedFn:
    # expected rates depend on (journal, year) only; undefined ones are cached too
    cache: dict = {}

    def lookup(pub: Publication):
        key = (pub.journal, pub.pub_year)
        if key not in cache:
            try:
                cache[key] = fn(pub)
            except UndefinedRate as err:
                cache[key] = err
        hit = cache[key]
        if isinstance(hit, UndefinedRate):
            raise hit
        return hit

    return lookup


def expected_fn_for(variant: VariantSpec, universe: Universe, partition: Partition) -> ExpectedFn:
    if variant.expectation_source == "partition-cell":
        fn = lambda pub: partition_expected_for_publication(pub, partition, universe)
    else:
        mean_kind = variant.intersection_mean
        fn = lambda pub: standard_expected_for_publication(pub, universe, mean_kind)
    return _memoized(fn)


def compute_indicator(
    record: PublicationRecord,
    variant: str | VariantSpec,
    universe: Universe,
    partition: Partition,
    *,
    strict: bool = False,
) -> IndicatorResult:
    vspec = get_variant(variant)
    check_record(record, universe)
    fn = expected_fn_for(vspec, universe, partition)
    score = score_global if vspec.aggregation == "global" else score_per_publication
    return score(record, fn, variant=vspec.name, strict=strict)


def score_records(
    records: Iterable[PublicationRecord],
    variants: Iterable[str | VariantSpec],
    universe: Universe,
    partition: Partition,
    *,
    strict: bool = False,
) -> list[IndicatorResult]:
    chosen = [get_variant(v) for v in variants]
    return [
        compute_indicator(rec, vspec, universe, partition, strict=strict)
        for rec in records
        for vspec in chosen
    ]


def ratio_q(r1: IndicatorResult, r2: IndicatorResult) -> float:
    if r1.variant != r2.variant:
        raise VariantMismatch(f"cannot compare {r1.variant} with {r2.variant}")
    if r2.value == 0:
        raise DivisionByZero(f"record {r2.record_id!r} scores zero under {r2.variant}")
    return r1.value / r2.value
