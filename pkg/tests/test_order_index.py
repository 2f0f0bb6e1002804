import math

import numpy as np
import pytest

from taustar import OrderStatIndex

from reference_impls import scan_counts


def _check_against_scan(index, stored, probes):
    for p in probes:
        less, equal, greater = scan_counts(stored, p)
        assert index.count_less(p) == less
        assert index.count_equal(p) == equal
        assert index.count_greater(p) == greater
    for lo, hi in zip(probes, probes[1:]):
        lo, hi = min(lo, hi), max(lo, hi)
        expected = sum(1 for v in stored if lo < v < hi)
        assert index.count_between(lo, hi) == expected


def test_matches_linear_scan_with_duplicates(rng):
    for _ in range(40):
        index = OrderStatIndex()
        stored = []
        values = rng.integers(0, 12, size=60).astype(float)
        probes = list(rng.integers(-2, 14, size=25).astype(float))
        for v in values:
            index.insert(v)
            stored.append(v)
            if len(stored) % 7 == 0:
                _check_against_scan(index, stored, probes)
        _check_against_scan(index, stored, probes)
        assert len(index) == len(stored)


def test_matches_linear_scan_continuous(rng):
    index = OrderStatIndex()
    stored = list(rng.standard_normal(400))
    for v in stored:
        index.insert(v)
    probes = list(rng.standard_normal(50)) + stored[::17]
    _check_against_scan(index, stored, probes)


def test_bulk_init_equals_incremental(rng):
    values = rng.integers(0, 5, size=30).astype(float)
    bulk = OrderStatIndex(values)
    inc = OrderStatIndex()
    for v in values:
        inc.insert(v)
    for p in (-1.0, 0.0, 2.0, 4.0, 7.0):
        assert bulk.count_less(p) == inc.count_less(p)
        assert bulk.count_equal(p) == inc.count_equal(p)
        assert bulk.count_greater(p) == inc.count_greater(p)


def test_duplicate_multiplicities():
    index = OrderStatIndex([2.0, 2.0, 2.0, 5.0])
    assert index.count_equal(2.0) == 3
    assert index.count_equal(5.0) == 1
    assert index.count_equal(3.0) == 0
    assert index.count_less(2.0) == 0
    assert index.count_greater(2.0) == 1
    assert index.size == 4


def test_count_between_edges():
    index = OrderStatIndex([1.0, 2.0, 3.0, 4.0, 5.0])
    assert index.count_between(1.0, 5.0) == 3
    assert index.count_between(2.0, 2.0) == 0  # open interval, degenerate
    assert index.count_between(0.0, 10.0) == 5
    with pytest.raises(ValueError):
        index.count_between(3.0, 1.0)


def test_count_between_identity(rng):
    # open-interval count == size - (items <= lo) - (items >= hi)
    index = OrderStatIndex()
    values = rng.integers(0, 9, size=120).astype(float)
    for v in values:
        index.insert(v)
    for _ in range(200):
        lo, hi = sorted(rng.integers(-1, 10, size=2).astype(float))
        le_lo = index.count_less(lo) + index.count_equal(lo)
        ge_hi = index.count_greater(hi) + index.count_equal(hi)
        if lo == hi:
            assert index.count_between(lo, hi) == 0
        else:
            assert index.count_between(lo, hi) == index.size - le_lo - ge_hi


def test_rejects_non_finite():
    index = OrderStatIndex([1.0])
    for bad in (math.nan, math.inf, -math.inf):
        with pytest.raises(ValueError):
            index.insert(bad)
        with pytest.raises(ValueError):
            index.count_less(bad)
        with pytest.raises(ValueError):
            index.count_between(bad, 1.0)
    assert index.size == 1  # failed inserts left nothing behind


def test_clear():
    index = OrderStatIndex([1.0, 2.0, 2.0])
    index.clear()
    assert len(index) == 0
    assert index.count_less(10.0) == 0
    index.insert(7.0)
    assert index.count_equal(7.0) == 1


def test_comparison_budget_is_logarithmic(rng):
    # worst case observed per operation must stay within c*log2(u) + c
    budget_c = 16
    for exponent in (12, 15, 18):
        u = 2**exponent
        index = OrderStatIndex()
        values = rng.permutation(u).astype(float)
        worst = 0
        for v in values:
            before = index.comparison_count
            index.insert(v)
            worst = max(worst, index.comparison_count - before)
        probes = rng.integers(0, u, size=400).astype(float)
        for p in probes:
            for op in (index.count_less, index.count_equal, index.count_greater):
                before = index.comparison_count
                op(p)
                worst = max(worst, index.comparison_count - before)
            lo, hi = sorted((p, float((int(p) * 7919) % u)))
            before = index.comparison_count
            index.count_between(lo, hi)
            worst = max(worst, index.comparison_count - before)
        assert worst <= budget_c * math.log2(u) + budget_c, (exponent, worst)
