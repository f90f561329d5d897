"""Point multisets and anchored boxes in the unit cube.

An anchored box with upper corner ``b`` is the closed box
``[0, b_1] x ... x [0, b_d]``.  All coordinate comparisons are exact
floating-point comparisons (no epsilon): ties between point coordinates
and box faces carry meaning for boundary counts, so callers that need
reproducible tie behaviour should place points on dyadic or small
rational grids.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

__all__ = [
    "PointSet",
    "AnchoredBox",
    "LocalDiscrepancy",
    "Side",
    "as_point_set",
    "as_box",
    "volume",
    "count_le",
    "count_lt",
    "boundary_count",
    "local_disc",
]


class Side(Enum):
    """Which branch of the local discrepancy attained the maximum."""

    OVERFULL = "overfull"
    UNDERFULL = "underfull"


class PointSet:
    """Ordered multiset of n points in [0,1]^d.

    Duplicate points are allowed.  The point array is held read-only;
    columns are accessible through :meth:`coord`.
    """

    __slots__ = ("_points",)

    def __init__(self, points, dim: int | None = None):
        arr = np.array(points, dtype=float, copy=True)
        if arr.ndim == 1:
            # a flat sequence is read as n points in dimension 1
            arr = arr.reshape(-1, 1)
        if arr.size == 0:
            d = dim if dim is not None else (arr.shape[1] if arr.ndim == 2 and arr.shape[1] else 0)
            arr = np.empty((0, d), dtype=float)
        if arr.ndim != 2:
            raise ValueError(f"points must form an (n, d) array, got shape {arr.shape}")
        if dim is not None and arr.shape[1] != dim:
            raise ValueError(f"expected dimension {dim}, got {arr.shape[1]}")
        if arr.shape[1] < 1:
            raise ValueError("dimension must be >= 1")
        if arr.size and not (np.all(arr >= 0.0) and np.all(arr <= 1.0)):
            raise ValueError("all coordinates must lie in [0, 1]")
        arr.setflags(write=False)
        self._points = arr

    @property
    def points(self) -> np.ndarray:
        """Read-only (n, d) coordinate array."""
        return self._points

    @property
    def n(self) -> int:
        return self._points.shape[0]

    @property
    def dim(self) -> int:
        return self._points.shape[1]

    def coord(self, j: int) -> np.ndarray:
        """Column of j-th coordinates (read-only view)."""
        return self._points[:, j]

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other) -> bool:
        if not isinstance(other, PointSet):
            return NotImplemented
        return self.dim == other.dim and np.array_equal(self._points, other._points)

    def __repr__(self) -> str:
        return f"PointSet(n={self.n}, dim={self.dim})"


class AnchoredBox:
    """Closed axis-parallel box [0, b_1] x ... x [0, b_d] given by its upper corner."""

    __slots__ = ("_upper",)

    def __init__(self, upper):
        arr = np.atleast_1d(np.array(upper, dtype=float, copy=True))
        if arr.ndim != 1 or arr.size < 1:
            raise ValueError("upper corner must be a nonempty coordinate vector")
        if not (np.all(arr >= 0.0) and np.all(arr <= 1.0)):
            raise ValueError("upper corner entries must lie in [0, 1]")
        arr.setflags(write=False)
        self._upper = arr

    @property
    def upper(self) -> np.ndarray:
        return self._upper

    @property
    def dim(self) -> int:
        return self._upper.shape[0]

    def __eq__(self, other) -> bool:
        if not isinstance(other, AnchoredBox):
            return NotImplemented
        return np.array_equal(self._upper, other._upper)

    def __repr__(self) -> str:
        return f"AnchoredBox({self._upper.tolist()!r})"


@dataclass(frozen=True)
class LocalDiscrepancy:
    """Local discrepancy of one box: the larger of the overfull and underfull gaps."""

    value: float
    side: Side
    box: AnchoredBox


def as_point_set(points, dim: int | None = None) -> PointSet:
    """Coerce an (n, d) array-like (or a PointSet) to a PointSet."""
    if isinstance(points, PointSet):
        if dim is not None and points.dim != dim:
            raise ValueError(f"expected dimension {dim}, got {points.dim}")
        return points
    return PointSet(points, dim=dim)


def as_box(upper) -> AnchoredBox:
    """Coerce a coordinate vector (or an AnchoredBox) to an AnchoredBox."""
    if isinstance(upper, AnchoredBox):
        return upper
    return AnchoredBox(upper)


def _same_dim(ps: PointSet, box: AnchoredBox) -> None:
    if ps.dim != box.dim:
        raise ValueError(f"dimension mismatch: points have d={ps.dim}, box has d={box.dim}")


def volume(box) -> float:
    """Volume of the box: the left-to-right product of the upper-corner entries."""
    box = as_box(box)
    return math.prod(box.upper.tolist())


def count_le(points, box) -> int:
    """Number of points inside the closed box (ties on faces included)."""
    ps = as_point_set(points)
    box = as_box(box)
    _same_dim(ps, box)
    if ps.n == 0:
        return 0
    return int(np.all(ps.points <= box.upper, axis=1).sum())


def count_lt(points, box) -> int:
    """Number of points strictly below the upper corner in every coordinate.

    This is the limit of the closed count over boxes shrunk towards the
    corner from below, which is what the underfull branch of the
    discrepancy supremum sees.
    """
    ps = as_point_set(points)
    box = as_box(box)
    _same_dim(ps, box)
    if ps.n == 0:
        return 0
    return int(np.all(ps.points < box.upper, axis=1).sum())


def boundary_count(points, box) -> int:
    """Number of points on the right-upper boundary of the box.

    Counts points inside the closed box that attain the upper corner in at
    least one coordinate, i.e. points on a face adjacent to the corner.
    Always equals ``count_le - count_lt``.
    """
    ps = as_point_set(points)
    box = as_box(box)
    _same_dim(ps, box)
    if ps.n == 0:
        return 0
    inside = np.all(ps.points <= box.upper, axis=1)
    on_face = np.any(ps.points == box.upper, axis=1)
    return int(np.count_nonzero(inside & on_face))


def local_disc(points, box) -> LocalDiscrepancy:
    """Local discrepancy of one box against the empirical measure.

    Returns ``max(count_le/n - vol, vol - count_lt/n)`` together with the
    branch that attained it (overfull wins ties).  The value is always a
    valid lower bound on the star discrepancy of the point set, and is at
    least ``boundary_count/(2n)`` because the two branches sum to
    ``boundary_count/n``.
    """
    ps = as_point_set(points)
    box = as_box(box)
    _same_dim(ps, box)
    n = ps.n
    if n == 0:
        raise ValueError("local discrepancy is undefined for an empty point set")
    vol = volume(box)
    over = count_le(ps, box) / n - vol
    under = vol - count_lt(ps, box) / n
    if over >= under:
        return LocalDiscrepancy(value=over, side=Side.OVERFULL, box=box)
    return LocalDiscrepancy(value=under, side=Side.UNDERFULL, box=box)
