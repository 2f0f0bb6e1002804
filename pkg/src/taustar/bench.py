"""Wall-clock comparison of the exact estimators across sample sizes.

Each (size, method) cell times the estimator on freshly drawn
independent standard-normal pairs.  One untimed warm-up run absorbs
caches and compilation before ``trials`` timed runs are averaged, each
on its own deterministic dataset.  The brute-force method is refused
above n = 500 unless explicitly allowed, since its n^4 growth turns
everything beyond that into minutes.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .fast import t_star
from .naive import naive_t_star_u
from .sample import PairedSample

__all__ = ["BenchRow", "BenchReport", "NAIVE_SIZE_CAP", "bench", "standard_normal_pairs"]

NAIVE_SIZE_CAP = 500

_METHODS = ("fast", "naive")


@dataclass(frozen=True)
class BenchRow:
    n: int
    method: str
    mean_seconds: float
    trials: int


@dataclass(frozen=True)
class BenchReport:
    rows: tuple[BenchRow, ...]

    def to_csv(self) -> str:
        lines = ["n,method,mean_seconds,trials"]
        for row in self.rows:
            lines.append(f"{row.n},{row.method},{row.mean_seconds!r},{row.trials}")
        return "\n".join(lines) + "\n"

    def mean_seconds(self, n: int, method: str) -> float:
        for row in self.rows:
            if row.n == n and row.method == method:
                return row.mean_seconds
        raise KeyError(f"no bench row for n = {n}, method = {method!r}")


def standard_normal_pairs(n: int, rng: np.random.Generator) -> PairedSample:
    """n independent pairs of independent standard normals."""
    return PairedSample(rng.standard_normal(n), rng.standard_normal(n))


def _run_method(method: str, sample: PairedSample) -> None:
    if method == "fast":
        t_star(sample, kind="U")
    else:
        naive_t_star_u(sample)


def bench(
    sizes,
    methods=_METHODS,
    trials: int = 10,
    seed: int = 0,
    allow_large_naive: bool = False,
) -> BenchReport:
    """Time the requested methods at the requested sizes.

    Trial t of size n always sees the dataset derived from (seed, n, t),
    so different methods are timed on identical data.
    """
    sizes = tuple(int(n) for n in sizes)
    methods = tuple(methods)
    if not sizes or min(sizes) < 4:
        raise ValueError("sizes must be non-empty and all at least 4")
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    for method in methods:
        if method not in _METHODS:
            raise ValueError(f"unknown bench method {method!r}; pick from {_METHODS}")
    if "naive" in methods and not allow_large_naive:
        over = [n for n in sizes if n > NAIVE_SIZE_CAP]
        if over:
            raise ValueError(
                f"naive timing at n = {max(over)} exceeds the cap of {NAIVE_SIZE_CAP}; "
                "pass allow_large_naive=True (--allow-large-naive) to force it"
            )
    rows = []
    for n in sizes:
        for method in methods:
            times = []
            for t in range(trials + 1):
                rng = np.random.Generator(
                    np.random.PCG64(np.random.SeedSequence((seed, n, t)))
                )
                sample = standard_normal_pairs(n, rng)
                start = time.perf_counter()
                _run_method(method, sample)
                elapsed = time.perf_counter() - start
                if t > 0:  # run 0 is the discarded warm-up
                    times.append(elapsed)
            rows.append(BenchRow(n, method, sum(times) / len(times), trials))
    return BenchReport(tuple(rows))
