"""Paired-sample containers, tie metadata, and the result record.

All estimators in this package consume a :class:`PairedSample` and most
of them begin by calling :func:`sort_by_x`, which produces a
:class:`SortedSample`: both coordinate arrays reordered by x (stable,
so equal-x runs keep their input order) plus precomputed tie flags that
drive algorithm routing.

:class:`TStarResult` carries the exact integer accounting of every
estimate -- total weight of concordant-type and discordant-type terms
and the normalizing denominator -- so that two different algorithms can
be compared for *bit-exact* agreement, not merely to within a float
tolerance.  The float ``value`` is produced by a single division of
exact integers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np
import scipy.stats

from .errors import SampleSizeError

__all__ = ["PairedSample", "SortedSample", "TStarResult", "sort_by_x"]


def _as_finite_1d(values, name: str) -> np.ndarray:
    arr = np.asarray(values, dtype=np.float64)
    if arr.ndim != 1:
        raise ValueError(f"{name} must be one-dimensional, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        bad = int(np.flatnonzero(~np.isfinite(arr))[0])
        raise ValueError(f"{name} contains a non-finite entry at position {bad}")
    return arr


def _has_ties(arr: np.ndarray) -> bool:
    if arr.shape[0] < 2:
        return False
    s = np.sort(arr)
    return bool(np.any(s[1:] == s[:-1]))


@dataclass
class PairedSample:
    """A bivariate sample: two equal-length 1-D arrays of finite floats."""

    xs: np.ndarray
    ys: np.ndarray

    def __post_init__(self):
        self.xs = _as_finite_1d(self.xs, "xs")
        self.ys = _as_finite_1d(self.ys, "ys")
        if self.xs.shape[0] != self.ys.shape[0]:
            raise ValueError(
                f"coordinate arrays differ in length: {self.xs.shape[0]} vs {self.ys.shape[0]}"
            )
        if self.xs.shape[0] == 0:
            raise SampleSizeError("a paired sample needs at least one observation")

    @classmethod
    def from_pairs(cls, pairs: Iterable[Sequence[float]]) -> "PairedSample":
        pts = list(pairs)
        return cls(np.array([p[0] for p in pts]), np.array([p[1] for p in pts]))

    @property
    def n(self) -> int:
        return int(self.xs.shape[0])

    @property
    def has_ties_x(self) -> bool:
        return _has_ties(self.xs)

    @property
    def has_ties_y(self) -> bool:
        return _has_ties(self.ys)

    def with_midranks(self) -> "PairedSample":
        """Replace each coordinate by its midrank (ties share the average rank)."""
        return PairedSample(
            scipy.stats.rankdata(self.xs, method="average"),
            scipy.stats.rankdata(self.ys, method="average"),
        )


@dataclass
class SortedSample:
    """A paired sample reordered by x, with tie flags precomputed.

    ``xs`` is non-decreasing; ``ys`` is carried along by the same stable
    permutation.  Build via :func:`sort_by_x`.
    """

    xs: np.ndarray
    ys: np.ndarray
    has_ties_x: bool
    has_ties_y: bool

    @property
    def n(self) -> int:
        return int(self.xs.shape[0])


def sort_by_x(sample: PairedSample) -> SortedSample:
    """Stable-sort a sample by its x coordinate."""
    order = np.argsort(sample.xs, kind="stable")
    xs = sample.xs[order]
    ys = sample.ys[order]
    ties_x = bool(np.any(xs[1:] == xs[:-1])) if xs.shape[0] > 1 else False
    return SortedSample(xs=xs, ys=ys, has_ties_x=ties_x, has_ties_y=_has_ties(ys))


@dataclass
class TStarResult:
    """Exact accounting of one tau-star evaluation.

    ``concordant_weighted`` and ``discordant_weighted`` are the total
    positive and negative kernel weight (both stored as non-negative
    Python ints, so they never overflow), ``denominator`` is the count
    the signed difference is divided by, and ``value`` is that single
    exact-integer division rounded once to float.
    """

    kind: str  # "U" or "V"
    concordant_weighted: int
    discordant_weighted: int
    denominator: int
    path: str  # which algorithm produced it, e.g. "untied", "general", "naive"
    value: float = field(init=False)

    def __post_init__(self):
        if self.kind not in ("U", "V"):
            raise ValueError(f"kind must be 'U' or 'V', got {self.kind!r}")
        if self.denominator <= 0:
            raise ValueError("denominator must be positive")
        self.value = (self.concordant_weighted - self.discordant_weighted) / self.denominator
