"""Exact and subsampled estimation of the tau-star sign covariance.

Tau-star is a dependence measure built from quadruples of observations:
it is zero exactly at independence, positive otherwise, and depends on
the data only through signs of coordinate differences.  The direct
definition averages a kernel over all quadruples, an O(n^4) sum; this
package evaluates the same sum exactly in O(n^2 log n), with or without
ties, in both the unbiased (distinct quadruples) and averaged (all
quadruples) forms, alongside the brute-force oracle, a randomized
subsampling estimator for very large samples, and a benchmark harness.

>>> import numpy as np
>>> from taustar import PairedSample, t_star
>>> rng = np.random.default_rng(7)
>>> xs = rng.standard_normal(500)
>>> result = t_star(PairedSample(xs, xs + rng.standard_normal(500)))
>>> 0 < result.value < 1
True
"""

from .bench import BenchReport, BenchRow, NAIVE_SIZE_CAP, bench, standard_normal_pairs
from .errors import (
    IngestError,
    SampleSizeError,
    TauStarError,
    TieRoutingError,
)
from .fast import (
    PartitionCounts,
    count_concordant_untied,
    pair_contribution,
    partition_counts,
    reverse_pass_correction,
    t_star,
    t_star_general_u,
    t_star_general_v,
    t_star_untied_u,
)
from .io import read_xy_file
from .kernel import (
    Point,
    QuadClass,
    classify_quad,
    quad_weight,
    quad_weight_brute,
    sign_kernel,
)
from .naive import naive_t_star_u, naive_t_star_v
from .order_index import OrderStatIndex
from .sample import PairedSample, SortedSample, TStarResult, sort_by_x
from .subsample import (
    RelVarianceStudy,
    SubsampleConfig,
    SubsampleEstimate,
    estimate,
    relative_variance_study,
)

__version__ = "1.0.0"

__all__ = [
    "BenchReport",
    "BenchRow",
    "IngestError",
    "NAIVE_SIZE_CAP",
    "OrderStatIndex",
    "PairedSample",
    "PartitionCounts",
    "Point",
    "QuadClass",
    "RelVarianceStudy",
    "SampleSizeError",
    "SortedSample",
    "SubsampleConfig",
    "SubsampleEstimate",
    "TStarResult",
    "TauStarError",
    "TieRoutingError",
    "bench",
    "classify_quad",
    "count_concordant_untied",
    "estimate",
    "naive_t_star_u",
    "naive_t_star_v",
    "pair_contribution",
    "partition_counts",
    "quad_weight",
    "quad_weight_brute",
    "read_xy_file",
    "relative_variance_study",
    "reverse_pass_correction",
    "sign_kernel",
    "sort_by_x",
    "standard_normal_pairs",
    "t_star",
    "t_star_general_u",
    "t_star_general_v",
    "t_star_untied_u",
]
