"""Independent literal reference implementations, used only by tests.

Everything here favors being *obviously* correct over being fast: the
definitions are transcribed as directly as possible (absolute-value
form of the sign kernel, exhaustive tuple sums, a quadratic pair-loop
for the reverse-sweep correction) so the package's optimized code can
be judged against genuinely separate logic.
"""

from __future__ import annotations

import bisect
from itertools import combinations, permutations

import numpy as np


def sign_kernel_ref(z1, z2, z3, z4) -> int:
    """Comparison-only transcription of the separation sign."""
    out = 0
    if max(z1, z3) < min(z2, z4) or min(z1, z3) > max(z2, z4):
        out += 1
    if max(z1, z2) < min(z3, z4) or min(z1, z2) > max(z3, z4):
        out -= 1
    return out


def sign_kernel_abs(z1, z2, z3, z4) -> int:
    """Absolute-difference form: sign(|z1-z2| + |z3-z4| - |z1-z3| - |z2-z4|).

    Exact on integer-valued data.  On continuous data the sum telescopes
    to a true zero whenever the pairs overlap, and float rounding can
    report that zero as +-1e-16 -- which is precisely why the package
    uses the comparison-only form.  Continuous-data tests must therefore
    only trust this form away from zero.
    """
    s = abs(z1 - z2) + abs(z3 - z4) - abs(z1 - z3) - abs(z2 - z4)
    return int(s > 0) - int(s < 0)


_PERMS4 = tuple(permutations(range(4)))


def quad_weight_ref(p1, p2, p3, p4) -> int:
    """24-permutation sum of products of sign kernels, transcribed literally."""
    pts = (p1, p2, p3, p4)
    total = 0
    for a, b, c, d in _PERMS4:
        total += sign_kernel_ref(
            pts[a][0], pts[b][0], pts[c][0], pts[d][0]
        ) * sign_kernel_ref(pts[a][1], pts[b][1], pts[c][1], pts[d][1])
    return total


def class_counts_ref(xs, ys) -> tuple[int, int]:
    """(concordant, discordant) distinct-quadruple counts via the literal sum."""
    n = len(xs)
    n_con = n_dis = 0
    for quad in combinations(range(n), 4):
        w = quad_weight_ref(*((xs[i], ys[i]) for i in quad))
        if w == 16:
            n_con += 1
        elif w == -8:
            n_dis += 1
        elif w != 0:
            raise AssertionError(f"impossible quadruple weight {w}")
    return n_con, n_dis


def literal_u_numerator(xs, ys) -> int:
    """Sum of kernel products over all ordered tuples of distinct indices.

    The unbiased statistic is this divided by n(n-1)(n-2)(n-3).  Cost is
    O(n^4); keep n small.
    """
    n = len(xs)
    total = 0
    for i, j, k, l in permutations(range(n), 4):
        total += sign_kernel_ref(xs[i], xs[j], xs[k], xs[l]) * sign_kernel_ref(
            ys[i], ys[j], ys[k], ys[l]
        )
    return total


def literal_v_numerator(xs, ys) -> int:
    """Sum of kernel products over every index tuple, repeats included.

    The averaged statistic is this divided by n^4.  Cost is O(n^4); keep
    n small.
    """
    n = len(xs)
    total = 0
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    total += sign_kernel_ref(
                        xs[i], xs[j], xs[k], xs[l]
                    ) * sign_kernel_ref(ys[i], ys[j], ys[k], ys[l])
    return total


def listing_reverse_correction(xs_sorted, ys) -> int:
    """Quadratic pair-loop form of the reverse-sweep correction.

    Walks j from the top down with the mirrored equal-x run buffer and,
    for every earlier i with y_i = y_j, adds (stored strictly above
    y_j) * (stored strictly below y_j), counting the stored multiset
    with a plain sorted list.
    """
    n = len(xs_sorted)
    stored: list[float] = []
    saved: list[float] = []
    correction = 0
    for j in range(n - 1, -1, -1):
        if j != n - 1 and xs_sorted[j + 1] != xs_sorted[j]:
            for v in saved:
                bisect.insort(stored, v)
            saved = []
        saved.append(ys[j])
        for i in range(j):
            if ys[i] == ys[j]:
                above = len(stored) - bisect.bisect_right(stored, ys[j])
                below = bisect.bisect_left(stored, ys[j])
                correction += above * below
    return correction


def scan_counts(values, probe) -> tuple[int, int, int]:
    """(less, equal, greater) counts of ``probe`` against a plain list."""
    less = equal = greater = 0
    for v in values:
        if v < probe:
            less += 1
        elif v > probe:
            greater += 1
        else:
            equal += 1
    return less, equal, greater


def tallies(result) -> tuple[int, int, int]:
    """The exact-integer fingerprint of a TStarResult."""
    return (
        result.concordant_weighted,
        result.discordant_weighted,
        result.denominator,
    )


REGIMES = ("continuous", "grid5", "grid2", "const_x", "const_y")


def draw_xy(rng, regime: str, n: int):
    """Draw one (xs, ys) pair from a named tie regime."""
    if regime == "continuous":
        return rng.standard_normal(n), rng.standard_normal(n)
    if regime == "grid5":
        return (
            rng.integers(0, 5, n).astype(float),
            rng.integers(0, 5, n).astype(float),
        )
    if regime == "grid2":
        return (
            rng.integers(0, 2, n).astype(float),
            rng.integers(0, 2, n).astype(float),
        )
    if regime == "const_x":
        return np.zeros(n), rng.integers(0, 5, n).astype(float)
    if regime == "const_y":
        return rng.standard_normal(n), np.zeros(n)
    raise ValueError(regime)
