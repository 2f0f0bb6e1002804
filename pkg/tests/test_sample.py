from fractions import Fraction

import numpy as np
import pytest
import scipy.stats

from taustar import PairedSample, SampleSizeError, TStarResult, sort_by_x


def test_basic_construction_and_n():
    s = PairedSample([1, 2, 3], [4.0, 5.0, 6.0])
    assert s.n == 3
    assert s.xs.dtype == np.float64 and s.ys.dtype == np.float64
    assert s.xs.tolist() == [1.0, 2.0, 3.0]


def test_from_pairs():
    s = PairedSample.from_pairs([(1, 10), (2, 20), (3, 30)])
    assert s.xs.tolist() == [1.0, 2.0, 3.0]
    assert s.ys.tolist() == [10.0, 20.0, 30.0]


def test_rejects_bad_shapes_and_sizes():
    with pytest.raises(ValueError):
        PairedSample(np.zeros((2, 2)), np.zeros(4))
    with pytest.raises(ValueError):
        PairedSample([1.0, 2.0], [1.0])
    with pytest.raises(SampleSizeError):
        PairedSample([], [])


def test_rejects_non_finite_with_position():
    with pytest.raises(ValueError, match="position 2"):
        PairedSample([0.0, 1.0, np.nan, 3.0], [0.0, 1.0, 2.0, 3.0])
    with pytest.raises(ValueError, match="ys"):
        PairedSample([0.0, 1.0], [np.inf, 1.0])


def test_tie_flags():
    assert not PairedSample([1, 2, 3], [4, 5, 6]).has_ties_x
    assert PairedSample([1, 2, 1], [4, 5, 6]).has_ties_x
    assert PairedSample([1, 2, 3], [4, 5, 4]).has_ties_y
    one = PairedSample([1.0], [1.0])
    assert not one.has_ties_x and not one.has_ties_y


def test_midranks_frozen_example():
    s = PairedSample([10, 20, 20, 30], [5, 5, 5, 1]).with_midranks()
    assert s.xs.tolist() == [1.0, 2.5, 2.5, 4.0]
    assert s.ys.tolist() == [3.0, 3.0, 3.0, 1.0]


def test_midranks_match_scipy(rng):
    xs = rng.integers(0, 6, size=40).astype(float)
    ys = rng.standard_normal(40)
    ranked = PairedSample(xs, ys).with_midranks()
    assert np.array_equal(ranked.xs, scipy.stats.rankdata(xs, method="average"))
    assert np.array_equal(ranked.ys, scipy.stats.rankdata(ys, method="average"))


def test_sort_by_x_is_stable():
    s = sort_by_x(PairedSample([2, 1, 2, 1], [1, 2, 3, 4]))
    assert s.xs.tolist() == [1.0, 1.0, 2.0, 2.0]
    assert s.ys.tolist() == [2.0, 4.0, 1.0, 3.0]  # input order kept within runs
    assert s.has_ties_x and not s.has_ties_y
    assert s.n == 4


def test_sorted_sample_tie_flags(rng):
    xs = rng.standard_normal(25)
    ys = rng.integers(0, 3, size=25).astype(float)
    s = sort_by_x(PairedSample(xs, ys))
    assert not s.has_ties_x
    assert s.has_ties_y
    assert np.all(np.diff(s.xs) >= 0)


def test_result_value_is_single_exact_division(rng):
    for _ in range(200):
        conc = int(rng.integers(0, 2**40)) * 16
        disc = int(rng.integers(0, 2**40)) * 8
        denom = int(rng.integers(1, 2**40))
        r = TStarResult(
            kind="U",
            concordant_weighted=conc,
            discordant_weighted=disc,
            denominator=denom,
            path="test",
        )
        assert r.value == float(Fraction(conc - disc, denom))


def test_result_validation():
    with pytest.raises(ValueError):
        TStarResult(kind="W", concordant_weighted=0, discordant_weighted=0,
                    denominator=1, path="test")
    with pytest.raises(ValueError):
        TStarResult(kind="U", concordant_weighted=0, discordant_weighted=0,
                    denominator=0, path="test")
