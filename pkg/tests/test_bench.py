import numpy as np
import pytest

from taustar import NAIVE_SIZE_CAP, bench, standard_normal_pairs


def test_report_structure_and_csv():
    report = bench([20, 40], trials=2, seed=9)
    assert [(r.n, r.method) for r in report.rows] == [
        (20, "fast"),
        (20, "naive"),
        (40, "fast"),
        (40, "naive"),
    ]
    assert all(r.mean_seconds > 0 for r in report.rows)
    assert all(r.trials == 2 for r in report.rows)
    lines = report.to_csv().splitlines()
    assert lines[0] == "n,method,mean_seconds,trials"
    assert len(lines) == 5
    assert lines[1].startswith("20,fast,")
    assert report.mean_seconds(40, "naive") > 0
    with pytest.raises(KeyError):
        report.mean_seconds(99, "fast")


def test_fast_only_run():
    report = bench([30], methods=("fast",), trials=1)
    assert [(r.n, r.method) for r in report.rows] == [(30, "fast")]


def test_naive_cap_enforced():
    with pytest.raises(ValueError, match="allow-large-naive"):
        bench([NAIVE_SIZE_CAP + 1], trials=1)
    # fast method alone is not capped
    report = bench([NAIVE_SIZE_CAP + 1], methods=("fast",), trials=1)
    assert report.rows[0].n == NAIVE_SIZE_CAP + 1


def test_input_validation():
    with pytest.raises(ValueError):
        bench([], trials=1)
    with pytest.raises(ValueError):
        bench([3], trials=1)
    with pytest.raises(ValueError):
        bench([10], trials=0)
    with pytest.raises(ValueError):
        bench([10], methods=("sorcery",), trials=1)


def test_generated_data_is_deterministic():
    rng_a = np.random.Generator(np.random.PCG64(np.random.SeedSequence((5, 10, 1))))
    rng_b = np.random.Generator(np.random.PCG64(np.random.SeedSequence((5, 10, 1))))
    a = standard_normal_pairs(10, rng_a)
    b = standard_normal_pairs(10, rng_b)
    assert np.array_equal(a.xs, b.xs) and np.array_equal(a.ys, b.ys)
