"""Field-normalized citation rates over a journal universe.

Standard normalization divides by the 1/N-fractional rate of every category a
journal belongs to; partition-based normalization divides by the rate of the
cell of journals sharing exactly the same category combination.
"""

from .errors import PartnormError
from .expectation import (
    aggregate_impact_factor,
    build_rate_table,
    category_expected_rate_fractional,
    cell_expected_rate,
    partition_expected_for_publication,
    standard_expected_for_publication,
)
from .indicators import MNCR, NMCR, P_MNCR, P_NMCR, VARIANTS, VariantSpec, compute_indicator, ratio_q, score_global, score_per_publication
from .model import (
    CorrelationResult,
    ExpectedRate,
    IndicatorResult,
    JournalClassification,
    JournalYearStats,
    Publication,
    PublicationRecord,
    RatingVector,
    Universe,
    validate_universe,
)
from .partition import CellKey, Partition, ReferenceDomain, build_partition, cell_of, reference_domain
from .stats import one_tailed_p, overlap_breakdown, pearson, spearman

__version__ = "0.1.0"
