"""Sign kernel and classification of point quadruples.

The tau-star statistic is built from a kernel on quadruples of scalars
that detects whether two pairs separate cleanly on the line, and from
the induced three-way classification of four points in the plane:

* **concordant** -- the two lowest-x points also hold the two lowest
  (or the two highest) y values, with strict gaps in both coordinates;
* **discordant** -- x separates the points into a low pair and a high
  pair but the y values interleave;
* **inseparable** -- a tie prevents a clean split on either axis.

Summing ``sign_kernel(x order) * sign_kernel(y order)`` over all 24
orderings of a quadruple gives 16, -8 or 0 for the three classes.
``quad_weight_brute`` performs that sum literally and is kept as the
slow trust anchor for the classified shortcut used everywhere else.
"""

from __future__ import annotations

from enum import Enum
from itertools import permutations
from typing import NamedTuple, Sequence

__all__ = [
    "Point",
    "QuadClass",
    "sign_kernel",
    "classify_quad",
    "quad_weight",
    "quad_weight_brute",
]


class Point(NamedTuple):
    """A paired observation; any 2-sequence ``(x, y)`` is accepted in its place."""

    x: float
    y: float


class QuadClass(Enum):
    CONCORDANT = "concordant"
    DISCORDANT = "discordant"
    INSEPARABLE = "inseparable"


_WEIGHTS = {
    QuadClass.CONCORDANT: 16,
    QuadClass.DISCORDANT: -8,
    QuadClass.INSEPARABLE: 0,
}

_PERMUTATIONS = tuple(permutations(range(4)))


def sign_kernel(z1: float, z2: float, z3: float, z4: float) -> int:
    """Separation sign of four scalars, in {-1, 0, +1}.

    Returns +1 when ``{z1, z3}`` lies entirely below or entirely above
    ``{z2, z4}``, -1 when ``{z1, z2}`` lies entirely below or above
    ``{z3, z4}``, and 0 otherwise.  Only comparisons are used, so the
    result is exact for any finite floats.
    """
    out = 0
    if max(z1, z3) < min(z2, z4) or min(z1, z3) > max(z2, z4):
        out += 1
    if max(z1, z2) < min(z3, z4) or min(z1, z2) > max(z3, z4):
        out -= 1
    return out


def classify_quad(
    p1: Sequence[float],
    p2: Sequence[float],
    p3: Sequence[float],
    p4: Sequence[float],
) -> QuadClass:
    """Classify four planar points as concordant, discordant or inseparable.

    The points are first arranged by x.  A tie between the middle two x
    values, or between the middle two sorted y values, makes the
    quadruple inseparable.  Otherwise it is concordant when the low-x
    pair and high-x pair occupy disjoint y ranges, and discordant when
    their y ranges overlap.
    """
    q = sorted((p1, p2, p3, p4), key=lambda p: p[0])
    if q[1][0] == q[2][0]:
        return QuadClass.INSEPARABLE
    ys = sorted(p[1] for p in q)
    if ys[1] == ys[2]:
        return QuadClass.INSEPARABLE
    lo_hi = max(q[0][1], q[1][1])
    hi_lo = min(q[2][1], q[3][1])
    if lo_hi < hi_lo or min(q[0][1], q[1][1]) > max(q[2][1], q[3][1]):
        return QuadClass.CONCORDANT
    return QuadClass.DISCORDANT


def quad_weight(cls: QuadClass) -> int:
    """Total kernel weight of a quadruple of the given class: 16, -8 or 0."""
    return _WEIGHTS[cls]


def quad_weight_brute(
    p1: Sequence[float],
    p2: Sequence[float],
    p3: Sequence[float],
    p4: Sequence[float],
) -> int:
    """Sum ``sign_kernel(x) * sign_kernel(y)`` over all 24 orderings.

    Literal and slow; exists to certify ``quad_weight(classify_quad(...))``.
    """
    pts = (p1, p2, p3, p4)
    total = 0
    for a, b, c, d in _PERMUTATIONS:
        sx = sign_kernel(pts[a][0], pts[b][0], pts[c][0], pts[d][0])
        if sx != 0:
            total += sx * sign_kernel(pts[a][1], pts[b][1], pts[c][1], pts[d][1])
    return total
