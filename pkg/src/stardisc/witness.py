"""Constructive lower-bound certificates for the star discrepancy.

Every set of n points in [0,1]^d has star discrepancy at least d/(12n)
once n >= 250 d.  The certifier below makes that bound concrete: it
emits one or two anchored boxes together with the measured local
discrepancy at the best of them, and the measured value meets the
guarantee whenever the precondition holds.

The construction splits the points by the threshold
kappa = (1 - 25 d / n)^(1/d) into those with no coordinate above kappa
(p0), exactly one (p1), and at least two (p2).  Three cases follow:

* case1 -- enough distinct dimensions carry a p1 point: a box with
  >= d/6 points on its right-upper boundary exists, and any box with m
  boundary points has local discrepancy >= m/(2n).
* case2 -- p1 is large but concentrated on few dimensions: shaving those
  dimensions to kappa removes all of p1 while barely reducing volume, so
  the shaved box is underfull.
* case3 -- p1 is small, so many points sit in corners (p2): repeatedly
  removing, for k = ceil(d/7) rounds, the surviving p2 points that are
  large in a best dimension empties the corners fast (each survivor has
  two large coordinates left, so some dimension catches >= 2|S|/d of
  them); the box shaved to kappa on the k chosen dimensions misses every
  removed point.  Combined with the overfull box [0,kappa]^d this forces
  the bound with factor q(89-315q)/(6(1+4q)) >= 1/12, q = k/d.

Dimensions d <= 6 need none of this: the one-dimensional bound 1/(2n)
projected to the first axis already exceeds d/(12n).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

import numpy as np

from .geometry import (
    AnchoredBox,
    PointSet,
    as_point_set,
    local_disc,
)

__all__ = [
    "CaseLabel",
    "KappaPartition",
    "RemovalStep",
    "Case3Trace",
    "WitnessCertificate",
    "GridMinReport",
    "partition_kappa",
    "simple_witness",
    "lower_bound_witness",
    "case3_guarantee",
    "check_bernoulli_inequality",
    "check_case3_rational",
    "inverse_discrepancy_lower_bound",
]


class CaseLabel(Enum):
    TRIVIAL_1D = "trivial_1d"
    SIMPLE_DISJOINT = "simple_disjoint"
    SIMPLE_BOUNDARY = "simple_boundary"
    CASE1 = "case1"
    CASE2 = "case2"
    CASE3 = "case3"


@dataclass(frozen=True)
class KappaPartition:
    """Split of the point indices by how many coordinates exceed kappa."""

    kappa: float
    p0: tuple[int, ...]
    p1: tuple[int, ...]
    p2: tuple[int, ...]
    large_coords: tuple[frozenset[int], ...]
    c_set: frozenset[int]


@dataclass(frozen=True)
class RemovalStep:
    """One corner-removal round: chosen dimension, removed indices, count."""

    dim: int
    removed: tuple[int, ...]
    count: int


@dataclass(frozen=True)
class Case3Trace:
    """Record of the inductive corner removal in case3."""

    m_big: int
    steps: tuple[RemovalStep, ...]
    k: int
    q: Fraction
    c_k: frozenset[int]


@dataclass(frozen=True)
class WitnessCertificate:
    """Witness box(es) with the measured and guaranteed discrepancy bounds.

    `measured` is the local discrepancy at `best` and is always a true
    lower bound on the star discrepancy.  When `guarantee_valid` is set,
    the invoked construction's precondition holds and
    measured >= guaranteed.
    """

    case_label: CaseLabel
    boxes: tuple[AnchoredBox, ...]
    best: AnchoredBox
    measured: float
    guaranteed: float
    guarantee_valid: bool
    kappa: float | None = None
    partition: KappaPartition | None = None
    trace: Case3Trace | None = None


@dataclass(frozen=True)
class GridMinReport:
    """Minimum of a function over a uniform grid, checked against a threshold."""

    min_value: float
    location: tuple[float, ...]
    threshold: float
    verified: bool


def partition_kappa(points) -> KappaPartition:
    """Partition the points by the threshold kappa = (1 - 25d/n)^(1/d).

    Requires n > 25 d so that kappa is real and positive.  A point lands
    in p0/p1/p2 according to whether zero, exactly one, or at least two
    of its coordinates strictly exceed kappa; c_set collects the
    dimensions in which some p1 point is large.
    """
    ps = as_point_set(points)
    n, d = ps.n, ps.dim
    if n <= 25 * d:
        raise ValueError(f"kappa partition needs n > 25*d (got n={n}, d={d})")
    kappa = (1.0 - 25.0 * d / n) ** (1.0 / d)
    large = ps.points > kappa
    counts = large.sum(axis=1)
    p0 = tuple(int(i) for i in np.nonzero(counts == 0)[0])
    p1 = tuple(int(i) for i in np.nonzero(counts == 1)[0])
    p2 = tuple(int(i) for i in np.nonzero(counts >= 2)[0])
    large_coords = tuple(
        frozenset(int(j) for j in np.nonzero(large[i])[0]) for i in range(n)
    )
    c_set = frozenset(j for i in p1 for j in large_coords[i])
    return KappaPartition(
        kappa=kappa, p0=p0, p1=p1, p2=p2, large_coords=large_coords, c_set=c_set
    )


def simple_witness(points) -> WitnessCertificate:
    """Witness construction for the easy regime n >= 2 e d^2 (d >= 2).

    With kappa' = 1 - 1/d, call a point a qualifier for dimension j if its
    j-th coordinate exceeds kappa' while every other coordinate is at
    most kappa'.  If every dimension has a qualifier, the box through the
    per-dimension largest qualifiers has d points on its right-upper
    boundary (simple_boundary, guaranteed d/(2n)).  Otherwise some
    dimension j has none, and the slab ([0,1] in j, [0,kappa']
    elsewhere) holds exactly the same points as [0,kappa']^d although
    their volumes differ by more than 2d/n, so one of the two boxes is
    off by at least d/n (simple_disjoint, guaranteed d/n).
    """
    ps = as_point_set(points)
    n, d = ps.n, ps.dim
    if d < 2:
        raise ValueError("simple witness construction needs d >= 2")
    if n < 1:
        raise ValueError("need at least one point")
    valid = n >= 2.0 * math.e * d * d
    kp = 1.0 - 1.0 / d
    pts = ps.points
    above = pts > kp

    qualifier_value: list[float | None] = []
    for j in range(d):
        mask = above[:, j] & ~(above[:, [k for k in range(d) if k != j]].any(axis=1))
        if mask.any():
            qualifier_value.append(float(pts[mask, j].max()))
        else:
            qualifier_value.append(None)

    missing = [j for j in range(d) if qualifier_value[j] is None]
    if not missing:
        upper = np.array([qualifier_value[j] for j in range(d)], dtype=float)
        box = AnchoredBox(upper)
        measured = local_disc(ps, box).value
        return WitnessCertificate(
            case_label=CaseLabel.SIMPLE_BOUNDARY,
            boxes=(box,),
            best=box,
            measured=measured,
            guaranteed=d / (2.0 * n),
            guarantee_valid=valid,
        )

    j0 = missing[0]
    slab_upper = np.full(d, kp)
    slab_upper[j0] = 1.0
    slab = AnchoredBox(slab_upper)
    cube = AnchoredBox(np.full(d, kp))
    slab_disc = local_disc(ps, slab)
    cube_disc = local_disc(ps, cube)
    best = slab if slab_disc.value >= cube_disc.value else cube
    measured = max(slab_disc.value, cube_disc.value)
    return WitnessCertificate(
        case_label=CaseLabel.SIMPLE_DISJOINT,
        boxes=(slab, cube),
        best=best,
        measured=measured,
        guaranteed=d / float(n),
        guarantee_valid=valid,
    )


def _first_axis_witness(ps: PointSet) -> AnchoredBox:
    """Corner (a, 1, ..., 1) where a maximises the one-dimensional local
    discrepancy of the first coordinates; smallest maximising a."""
    col = np.sort(ps.points[:, 0])
    grid = np.unique(col)
    if grid[-1] != 1.0:
        grid = np.append(grid, 1.0)
    n = ps.n
    le = np.searchsorted(col, grid, side="right")
    lt = np.searchsorted(col, grid, side="left")
    vals = np.maximum(le / n - grid, grid - lt / n)
    a = float(grid[int(np.argmax(vals))])
    upper = np.ones(ps.dim)
    upper[0] = a
    return AnchoredBox(upper)


def lower_bound_witness(points) -> WitnessCertificate:
    """Certify the star-discrepancy lower bound d/(12 n) with a witness box.

    Always returns a certificate whose `measured` value is a true lower
    bound; `guarantee_valid` is set exactly when n >= 250 d, in which
    case measured >= d/(12 n).  Dispatch:

    * d <= 6: project to the first axis, where the classical
      one-dimensional bound 1/(2n) >= d/(12n) is attained on the grid
      (trivial_1d).  The same fallback covers n <= 25 d, where the kappa
      partition is undefined (and the guarantee never applies).
    * 6 |c_set| >= d: case1 boundary box.
    * 24 |p1| >= 107 d: case2 shaved underfull box.
    * otherwise: case3 corner removal, recorded in the trace.

    Threshold comparisons clear denominators into integers; the case
    split is exact.
    """
    ps = as_point_set(points)
    n, d = ps.n, ps.dim
    if n < 1:
        raise ValueError("need at least one point")
    guaranteed = d / (12.0 * n)
    valid = n >= 250 * d

    if d <= 6 or n <= 25 * d:
        box = _first_axis_witness(ps)
        measured = local_disc(ps, box).value
        return WitnessCertificate(
            case_label=CaseLabel.TRIVIAL_1D,
            boxes=(box,),
            best=box,
            measured=measured,
            guaranteed=guaranteed,
            guarantee_valid=valid,
        )

    part = partition_kappa(ps)
    kappa = part.kappa
    pts = ps.points

    if 6 * len(part.c_set) >= d:
        # one boundary point per dimension of c_set: the p1 point with the
        # largest coordinate there stays inside (all its other coordinates
        # are <= kappa) and attains the corner
        upper = np.full(d, kappa)
        for j in part.c_set:
            upper[j] = max(pts[i, j] for i in part.p1 if part.large_coords[i] == {j})
        box = AnchoredBox(upper)
        return WitnessCertificate(
            case_label=CaseLabel.CASE1,
            boxes=(box,),
            best=box,
            measured=local_disc(ps, box).value,
            guaranteed=guaranteed,
            guarantee_valid=valid,
            kappa=kappa,
            partition=part,
        )

    if 24 * len(part.p1) >= 107 * d:
        upper = np.ones(d)
        for j in part.c_set:
            upper[j] = kappa
        box = AnchoredBox(upper)
        return WitnessCertificate(
            case_label=CaseLabel.CASE2,
            boxes=(box,),
            best=box,
            measured=local_disc(ps, box).value,
            guaranteed=guaranteed,
            guarantee_valid=valid,
            kappa=kappa,
            partition=part,
        )

    k = -(-d // 7)  # ceil(d/7); then q = k/d lies in [1/7, 1/4] for d >= 7
    survivors = set(part.p2)
    chosen: list[int] = []
    available = set(range(d))
    steps: list[RemovalStep] = []
    for _ in range(k):
        if survivors:
            best_j = -1
            best_cnt = -1
            for j in sorted(available):
                cnt = sum(1 for i in survivors if pts[i, j] > kappa)
                if cnt > best_cnt:
                    best_cnt = cnt
                    best_j = j
            removed = tuple(sorted(i for i in survivors if pts[i, best_j] > kappa))
        else:
            best_j = min(available)
            removed = ()
        steps.append(RemovalStep(dim=best_j, removed=removed, count=len(removed)))
        survivors.difference_update(removed)
        available.remove(best_j)
        chosen.append(best_j)

    cube = AnchoredBox(np.full(d, kappa))
    shaved_upper = np.ones(d)
    for j in chosen:
        shaved_upper[j] = kappa
    shaved = AnchoredBox(shaved_upper)
    cube_disc = local_disc(ps, cube)
    shaved_disc = local_disc(ps, shaved)
    best_box = cube if cube_disc.value >= shaved_disc.value else shaved
    trace = Case3Trace(
        m_big=len(part.p2),
        steps=tuple(steps),
        k=k,
        q=Fraction(k, d),
        c_k=frozenset(chosen),
    )
    return WitnessCertificate(
        case_label=CaseLabel.CASE3,
        boxes=(cube, shaved),
        best=best_box,
        measured=max(cube_disc.value, shaved_disc.value),
        guaranteed=guaranteed,
        guarantee_valid=valid,
        kappa=kappa,
        partition=part,
        trace=trace,
    )


def case3_guarantee(q):
    """Guarantee factor q (89 - 315 q) / (6 (1 + 4 q)); at least 1/12 on [1/7, 1/4].

    Works on floats and Fractions alike.
    """
    return q * (89 - 315 * q) / (6 * (1 + 4 * q))


def check_bernoulli_inequality(grid_x: int, grid_q: int) -> GridMinReport:
    """Scan (1-x)^q - 1 + (21/20) q x over [0, 1/10] x [1/7, 1/4].

    The case2/case3 volume estimates rest on this reverse Bernoulli-type
    inequality being nonnegative on that rectangle; the report returns
    the grid minimum and its location (first occurrence).
    """
    if grid_x < 2 or grid_q < 2:
        raise ValueError("need at least 2 grid points per axis")
    xs = np.linspace(0.0, 0.1, grid_x)
    qs = np.linspace(1.0 / 7.0, 0.25, grid_q)
    g = (1.0 - xs[:, None]) ** qs[None, :] - 1.0 + 1.05 * qs[None, :] * xs[:, None]
    flat = int(np.argmin(g))
    i, j = divmod(flat, grid_q)
    mv = float(g[i, j])
    return GridMinReport(
        min_value=mv,
        location=(float(xs[i]), float(qs[j])),
        threshold=0.0,
        verified=mv >= 0.0,
    )


def check_case3_rational(grid_q: int) -> GridMinReport:
    """Scan the case3 guarantee factor over a uniform grid on [1/7, 1/4].

    Verified when the minimum is at least 1/12, which is what makes the
    case3 certificate close the d/(12n) bound.
    """
    if grid_q < 2:
        raise ValueError("need at least 2 grid points")
    qs = np.linspace(1.0 / 7.0, 0.25, grid_q)
    vals = qs * (89.0 - 315.0 * qs) / (6.0 * (1.0 + 4.0 * qs))
    i = int(np.argmin(vals))
    mv = float(vals[i])
    return GridMinReport(
        min_value=mv,
        location=(float(qs[i]),),
        threshold=1.0 / 12.0,
        verified=mv >= 1.0 / 12.0,
    )


def inverse_discrepancy_lower_bound(epsilon: float, d: int) -> float:
    """Minimal point count forced by discrepancy <= epsilon: at least d/(12 epsilon).

    Valid for 0 < epsilon < 1/3000 (so that n >= 250 d holds for any n
    achieving epsilon).
    """
    if d < 1:
        raise ValueError("need d >= 1")
    if not 0.0 < epsilon < 1.0 / 3000.0:
        raise ValueError(
            "epsilon must lie strictly inside (0, 1/3000) for the bound to apply"
        )
    return d / (12.0 * epsilon)
