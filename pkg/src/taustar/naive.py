"""Brute-force tau-star oracles by direct quadruple enumeration.

These walk every index quadruple, classify it, and tally weights --
O(n^4) work, compiled with numba so the oracle stays usable into the
hundreds of observations.  The enumeration trusts only the quadruple
classification (itself certified against the literal 24-permutation sum
in the test suite), which makes this module the ground truth that the
O(n^2 log n) sweeps in :mod:`taustar.fast` are judged against.

The averaged variant additionally tallies quadruples with repeated
indices.  After collapsing permutations, only three repeated-index
patterns can contribute: one index doubled at the low end, one doubled
at the high end, and two distinct indices both doubled.  Each enters
with half (or quarter) of the distinct-quadruple weight, which the
wrappers account for exactly in integer arithmetic.
"""

from __future__ import annotations

import numba
import numpy as np

from .errors import SampleSizeError
from .sample import PairedSample, TStarResult, sort_by_x

__all__ = ["naive_t_star_u", "naive_t_star_v"]


@numba.njit(cache=True, inline="always")
def _weight_sorted(x1, x2, x3, x4, y1, y2, y3, y4):
    """Quadruple weight (16, -8 or 0); the x arguments must be sorted ascending."""
    if x2 == x3:
        return 0
    lo12 = min(y1, y2)
    hi12 = max(y1, y2)
    lo34 = min(y3, y4)
    hi34 = max(y3, y4)
    # middle two of the sorted y values coincide
    if max(lo12, lo34) == min(hi12, hi34):
        return 0
    if hi12 < lo34 or hi34 < lo12:
        return 16
    return -8


@numba.njit(cache=True)
def _tally_distinct(xs, ys):
    """Count concordant and discordant quadruples over distinct sorted indices."""
    n = xs.shape[0]
    n_con = np.int64(0)
    n_dis = np.int64(0)
    for i in range(n - 3):
        for j in range(i + 1, n - 2):
            for k in range(j + 1, n - 1):
                for l in range(k + 1, n):
                    w = _weight_sorted(
                        xs[i], xs[j], xs[k], xs[l], ys[i], ys[j], ys[k], ys[l]
                    )
                    if w == 16:
                        n_con += 1
                    elif w == -8:
                        n_dis += 1
    return n_con, n_dis


@numba.njit(cache=True)
def _tally_repeated(xs, ys):
    """Class counts for the doubled-index patterns of the averaged statistic.

    Returns (half_con, half_dis, quarter_con, quarter_dis): half-weight
    patterns have one doubled index among three distinct ones, quarter
    weight has two doubled indices.  Discordant counts are tallied for
    honesty; separation needs four distinct values on each axis, so a
    doubled point can never produce one and the tests pin both at zero.
    """
    n = xs.shape[0]
    half_con = np.int64(0)
    half_dis = np.int64(0)
    quarter_con = np.int64(0)
    quarter_dis = np.int64(0)
    for i in range(n - 1):
        for k in range(i + 1, n):
            w = _weight_sorted(xs[i], xs[i], xs[k], xs[k], ys[i], ys[i], ys[k], ys[k])
            if w == 16:
                quarter_con += 1
            elif w == -8:
                quarter_dis += 1
    for i in range(n - 2):
        for j in range(i + 1, n - 1):
            for k in range(j + 1, n):
                w = _weight_sorted(xs[i], xs[j], xs[k], xs[k], ys[i], ys[j], ys[k], ys[k])
                if w == 16:
                    half_con += 1
                elif w == -8:
                    half_dis += 1
                w = _weight_sorted(xs[i], xs[i], xs[j], xs[k], ys[i], ys[i], ys[j], ys[k])
                if w == 16:
                    half_con += 1
                elif w == -8:
                    half_dis += 1
    return half_con, half_dis, quarter_con, quarter_dis


def naive_t_star_u(sample: PairedSample) -> TStarResult:
    """Unbiased tau-star by exhaustive enumeration; requires n >= 4."""
    n = sample.n
    if n < 4:
        raise SampleSizeError(f"the unbiased estimator needs n >= 4, got n = {n}")
    s = sort_by_x(sample)
    n_con, n_dis = _tally_distinct(s.xs, s.ys)
    cw = 16 * int(n_con)
    dw = 8 * int(n_dis)
    denom = n * (n - 1) * (n - 2) * (n - 3)
    return TStarResult(
        kind="U",
        concordant_weighted=cw,
        discordant_weighted=dw,
        denominator=denom,
        path="naive",
    )


def naive_t_star_v(sample: PairedSample) -> TStarResult:
    """Averaged tau-star by exhaustive enumeration; defined for any n >= 1.

    Divides by n^4 and includes the repeated-index quadruples that the
    unbiased form excludes, so the result is slightly biased but defined
    down to a single observation.
    """
    n = sample.n
    s = sort_by_x(sample)
    n_con, n_dis = _tally_distinct(s.xs, s.ys)
    h_con, h_dis, q_con, q_dis = _tally_repeated(s.xs, s.ys)
    cw = 16 * int(n_con) + 8 * int(h_con) + 4 * int(q_con)
    dw = 8 * int(n_dis) + 4 * int(h_dis) + 2 * int(q_dis)
    return TStarResult(
        kind="V",
        concordant_weighted=cw,
        discordant_weighted=dw,
        denominator=n**4,
        path="naive",
    )
