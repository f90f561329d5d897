"""Independent brute-force reference implementations for cross-checks.

Pure Python with Fraction arithmetic and exhaustive iteration; no code
or enumeration strategy shared with the package under test.
"""

import itertools
from fractions import Fraction


def brute_star_disc(points):
    """Exact star discrepancy over the candidate grid, in exact arithmetic.

    Returns (value, corner) with the first (lexicographically smallest)
    maximising corner.
    """
    pts = [[Fraction(c) for c in p] for p in points]
    n = len(pts)
    d = len(pts[0])
    axes = [sorted({p[j] for p in pts} | {Fraction(1)}) for j in range(d)]
    best = None
    best_corner = None
    for corner in itertools.product(*axes):
        vol = Fraction(1)
        for c in corner:
            vol *= c
        le = sum(1 for p in pts if all(p[j] <= corner[j] for j in range(d)))
        lt = sum(1 for p in pts if all(p[j] < corner[j] for j in range(d)))
        val = max(Fraction(le, n) - vol, vol - Fraction(lt, n))
        if best is None or val > best:
            best = val
            best_corner = corner
    return best, best_corner


def brute_local(points, corner):
    """Exact local discrepancy of one box."""
    pts = [[Fraction(c) for c in p] for p in points]
    n = len(pts)
    d = len(pts[0])
    b = [Fraction(c) for c in corner]
    vol = Fraction(1)
    for c in b:
        vol *= c
    le = sum(1 for p in pts if all(p[j] <= b[j] for j in range(d)))
    lt = sum(1 for p in pts if all(p[j] < b[j] for j in range(d)))
    return max(Fraction(le, n) - vol, vol - Fraction(lt, n))


def brute_max_boundary(points):
    """Exhaustive boundary-count maximum over coordinate-valued corners."""
    pts = [list(p) for p in points]
    d = len(pts[0])
    axes = [sorted({p[j] for p in pts}) for j in range(d)]
    best = -1
    best_corner = None
    for corner in itertools.product(*axes):
        cnt = 0
        for p in pts:
            if all(p[j] <= corner[j] for j in range(d)) and any(
                p[j] == corner[j] for j in range(d)
            ):
                cnt += 1
        if cnt > best:
            best = cnt
            best_corner = corner
    return best, best_corner


def brute_shatter(points):
    """Distinct box-cut subsets over the zero-extended coordinate grid."""
    pts = [list(p) for p in points]
    d = len(pts[0])
    axes = [sorted({p[j] for p in pts} | {0.0}) for j in range(d)]
    subsets = set()
    for corner in itertools.product(*axes):
        subsets.add(
            frozenset(
                i for i, p in enumerate(pts) if all(p[j] <= corner[j] for j in range(d))
            )
        )
    return len(subsets)
