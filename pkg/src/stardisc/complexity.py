"""Combinatorial complexity of point sets under anchored boxes.

The box family over n points cuts out a set of subsets whose cardinality
is governed by the Sauer-Shelah bound sum_{i<=d} C(n,i).  Point sets on
which no box has many points on its right-upper boundary (sparse
boundary) admit a much smaller count; the calculators here evaluate the
exact counts and every bound in that chain with exact integer
arithmetic, plus the real-valued growth bounds used in the packing
comparison.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .discrepancy import DEFAULT_CELL_BUDGET, BudgetExceededError
from .geometry import AnchoredBox, as_point_set

__all__ = [
    "ShatterReport",
    "BoundsTable",
    "shatter_count",
    "shatter_report",
    "max_boundary_box",
    "has_sparse_boundary",
    "sauer_shelah",
    "shatter_recursion",
    "restricted_shatter_bound",
    "factored_shatter_bound",
    "growth_bound",
    "binomial_sum_bound",
    "sparse_boundary_lower_bound",
    "packing_epsilon",
    "packing_condition",
    "bounds_table",
]


@dataclass(frozen=True)
class ShatterReport:
    """Exact subset count of one point set next to its Sauer-Shelah cap."""

    count: int
    includes_empty: bool
    sauer_bound: int
    max_boundary: int
    max_boundary_box: AnchoredBox


@dataclass(frozen=True)
class BoundsTable:
    """One (n, d, r) row of every counting bound, exact and real-valued."""

    n: int
    d: int
    r: int
    sauer: int
    recursion: int
    restricted: int
    factored: int
    growth: float
    binom_sum: float
    sparse_lower_bound: float
    epsilon: float
    packing_ok: bool


def _axis_values_and_masks(pts: np.ndarray, j: int):
    """Ascending distinct values of column j with cumulative <=-bitmasks."""
    col = pts[:, j]
    order = np.argsort(col, kind="stable")
    sorted_col = col[order]
    values: list[float] = []
    le_masks: list[int] = []
    mask = 0
    i = 0
    n = len(col)
    while i < n:
        v = sorted_col[i]
        while i < n and sorted_col[i] == v:
            mask |= 1 << int(order[i])
            i += 1
        values.append(float(v))
        le_masks.append(mask)
    return values, le_masks


def _shatter_subsets(ps, budget: int) -> set[int]:
    """All distinct point subsets cut by closed anchored boxes, as bitmasks.

    Corners range over the per-dimension coordinate values extended by 0
    (a zero corner entry is the only representative needed below all
    coordinates, by closedness).  Layers of distinct reachable masks are
    deduplicated dimension by dimension, which enumerates exactly the
    subsets of the full product grid without visiting every cell; the
    budget caps the mask-intersection work.
    """
    pts = ps.points
    n = ps.n
    layer = {(1 << n) - 1}
    work = 0
    for j in range(ps.dim):
        values, le_masks = _axis_values_and_masks(pts, j)
        if not values or values[0] != 0.0:
            le_masks = [0] + le_masks
        work += len(layer) * len(le_masks)
        if work > budget:
            raise BudgetExceededError(
                f"subset enumeration work {work} exceeds the budget of {budget}"
            )
        layer = {m & vm for m in layer for vm in le_masks}
    return layer


def shatter_count(points, budget: int = DEFAULT_CELL_BUDGET) -> int:
    """Number of distinct subsets cut from the point set by closed anchored boxes.

    Includes the empty set whenever some box realises it.
    """
    ps = as_point_set(points)
    return len(_shatter_subsets(ps, budget))


def max_boundary_box(points, budget: int = DEFAULT_CELL_BUDGET) -> tuple[AnchoredBox, int]:
    """Box corner maximising the right-upper boundary count, with the count.

    The search ranges over corners built from coordinate values only: any
    box can be shrunk per dimension to the largest coordinate of an
    included point without losing boundary points.  Ties are broken by
    the lexicographically smallest corner.  Deduplication happens on
    (closed-count, strict-count) mask pairs, which determine every
    reachable outcome of the remaining dimensions.
    """
    ps = as_point_set(points)
    if ps.n == 0:
        raise ValueError("boundary search needs a nonempty point set")
    pts = ps.points
    n = ps.n
    full = (1 << n) - 1
    # pair -> lexicographically smallest corner prefix reaching it
    layer: dict[tuple[int, int], tuple[float, ...]] = {(full, full): ()}
    work = 0
    for j in range(ps.dim):
        values, le_masks = _axis_values_and_masks(pts, j)
        lt_masks = [0] + le_masks[:-1]
        work += len(layer) * len(values)
        if work > budget:
            raise BudgetExceededError(
                f"boundary enumeration work {work} exceeds the budget of {budget}"
            )
        new_layer: dict[tuple[int, int], tuple[float, ...]] = {}
        for (le, lt), prefix in layer.items():
            for v, lem, ltm in zip(values, le_masks, lt_masks):
                key = (le & lem, lt & ltm)
                if key not in new_layer:
                    new_layer[key] = prefix + (v,)
        layer = new_layer
    best_count = -1
    best_corner: tuple[float, ...] | None = None
    for (le, lt), corner in layer.items():
        count = le.bit_count() - lt.bit_count()
        if count > best_count:
            best_count = count
            best_corner = corner
    assert best_corner is not None
    return AnchoredBox(best_corner), best_count


def has_sparse_boundary(points, r) -> bool:
    """True iff no anchored box has r or more points on its right-upper boundary.

    `r` may be an int, Fraction, or float (converted exactly); the
    comparison against the exhaustive boundary maximum is exact.
    """
    threshold = Fraction(r)
    if threshold <= 0:
        raise ValueError("r must be positive")
    _, count = max_boundary_box(points)
    return Fraction(count) < threshold


def shatter_report(points, budget: int = DEFAULT_CELL_BUDGET) -> ShatterReport:
    """Full shattering summary: exact count, Sauer-Shelah cap, boundary maximum."""
    ps = as_point_set(points)
    subsets = _shatter_subsets(ps, budget)
    box, count = max_boundary_box(ps, budget)
    return ShatterReport(
        count=len(subsets),
        includes_empty=0 in subsets,
        sauer_bound=sauer_shelah(ps.n, ps.dim),
        max_boundary=count,
        max_boundary_box=box,
    )


@lru_cache(maxsize=None)
def sauer_shelah(n: int, d: int) -> int:
    """Sauer-Shelah cap sum_{i=0}^{min(d,n)} C(n, i), exact."""
    if n < 0 or d < 0:
        raise ValueError("need n >= 0 and d >= 0")
    return sum(math.comb(n, i) for i in range(min(n, d) + 1))


@lru_cache(maxsize=None)
def shatter_recursion(n: int, d: int) -> int:
    """Exact solution of N(n,d) = N(n-1,d) + N(n-1,d-1), N(1,d) = 2, N(n,1) = n+1.

    The removal recursion for the maximal subset count; its solution
    coincides with :func:`sauer_shelah`.
    """
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    cur = [0] + [2] * d  # N(1, j) for j = 1..d
    for m in range(2, n + 1):
        nxt = [0] * (d + 1)
        nxt[1] = m + 1
        for j in range(2, d + 1):
            nxt[j] = cur[j] + cur[j - 1]
        cur = nxt
    return cur[d]


def restricted_shatter_bound(m: int, s: int, r: int) -> int:
    """Upper bound on the subset count of m points in s dimensions whose
    boundary is sparse at threshold r (no box with r boundary points).

    Dynamic program on U(m,s) = min(N(m,s), U(m-1,s) + U(m-1,s-2)): when a
    point with two maximal coordinates is dropped while kept inside the
    box, two dimensions are lost at once.  The recursion applies only
    while r < s; at r >= s it falls back to the unrestricted count, and
    one point or zero dimensions admit exactly two subsets.
    """
    if m < 1 or s < 0 or r < 1:
        raise ValueError("need m >= 1, s >= 0, r >= 1")
    if s == 0:
        return 2
    if r >= s:
        return sauer_shelah(m, s)
    if m == 1:
        return 2

    def base(mp: int, sp: int) -> int:
        if sp <= 0:
            return 2
        return sauer_shelah(mp, sp)

    svals = []
    sp = s
    while sp > r:
        svals.append(sp)
        sp -= 2
    table = {v: 2 for v in svals}  # U(1, *)
    for mp in range(2, m + 1):
        prev = table
        table = {}
        for v in svals:
            below = prev[v - 2] if (v - 2) in prev else base(mp - 1, v - 2)
            table[v] = min(sauer_shelah(mp, v), prev[v] + below)
    return table[s]


def factored_shatter_bound(n: int, d: int, r: int) -> int:
    """Product bound sauer_shelah(n, r) * sum_{i <= d/2} C(n, i), exact.

    Closed-form majorant of :func:`restricted_shatter_bound` obtained by
    unrolling its recursion.
    """
    if n < 1 or d < 1 or r < 1:
        raise ValueError("need n >= 1, d >= 1, r >= 1")
    half = sum(math.comb(n, i) for i in range(d // 2 + 1))
    return sauer_shelah(n, r) * half


def _require_n_ge_d(n: int, d: int) -> None:
    if d < 1 or n < d:
        raise ValueError("need n >= d >= 1")


def growth_bound(n: int, d: int) -> float:
    """Real bound 2^d (e n / d)^(3d/4) on the subset count of a set whose
    boundary is sparse at threshold d/4.  Computed in log space."""
    _require_n_ge_d(n, d)
    log_val = d * math.log(2.0) + 0.75 * d * (1.0 + math.log(n / d))
    try:
        return math.exp(log_val)
    except OverflowError:
        return math.inf


def binomial_sum_bound(n: int, d: int) -> float:
    """Real bound (e n / d)^d on sum_{i<=d} C(n, i), computed in log space."""
    _require_n_ge_d(n, d)
    log_val = d * (1.0 + math.log(n / d))
    try:
        return math.exp(log_val)
    except OverflowError:
        return math.inf


def sparse_boundary_lower_bound(n: int, d: int) -> float:
    """Discrepancy lower bound d^(3/4) / (372 n^(3/4)) certified for point
    sets with no box holding d/4 boundary points."""
    _require_n_ge_d(n, d)
    return d**0.75 / (372.0 * n**0.75)


def packing_epsilon(n: int, d: int) -> float:
    """Separation scale d^(3/4) / (93 n^(3/4)) used in the packing comparison.

    Always equals four times :func:`sparse_boundary_lower_bound`.
    """
    _require_n_ge_d(n, d)
    return d**0.75 / (93.0 * n**0.75)


def packing_condition(n: int, d: int, epsilon: float) -> bool:
    """True iff 2^d (en/d)^(3d/4) < (8 e epsilon)^(-d), compared in log space.

    When this strict inequality holds, an epsilon-separated box collection
    of cardinality (8 e epsilon)^(-d) outnumbers the subsets a
    sparse-boundary point set can realise, forcing two boxes with equal
    point counts but volumes epsilon apart.
    """
    _require_n_ge_d(n, d)
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    lhs_log = d * math.log(2.0) + 0.75 * d * (1.0 + math.log(n / d))
    rhs_log = -d * (math.log(8.0 * math.e) + math.log(epsilon))
    return lhs_log < rhs_log


def bounds_table(n: int, d: int, r: int) -> BoundsTable:
    """Assemble every counting bound for one (n, d, r) triple."""
    _require_n_ge_d(n, d)
    if r < 1:
        raise ValueError("need r >= 1")
    eps = packing_epsilon(n, d)
    return BoundsTable(
        n=n,
        d=d,
        r=r,
        sauer=sauer_shelah(n, d),
        recursion=shatter_recursion(n, d),
        restricted=restricted_shatter_bound(n, d, r),
        factored=factored_shatter_bound(n, d, r),
        growth=growth_bound(n, d),
        binom_sum=binomial_sum_bound(n, d),
        sparse_lower_bound=sparse_boundary_lower_bound(n, d),
        epsilon=eps,
        packing_ok=packing_condition(n, d, eps),
    )
