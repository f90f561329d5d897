"""Plain-text point file format.

One point per line: d decimal coordinates separated by single spaces,
period as the decimal separator (exponent notation accepted).  An
optional first line ``# d=<int> n=<int>`` declares the shape, which is
then validated against the data.
"""

from __future__ import annotations

import re

from .geometry import PointSet, as_point_set

__all__ = ["PointsFormatError", "format_points", "parse_points"]

_HEADER_RE = re.compile(r"^#\s*d=(\d+)\s+n=(\d+)\s*$")


class PointsFormatError(ValueError):
    """Raised when a points file cannot be parsed or violates its header."""


def format_points(points, header: bool = False) -> str:
    """Render a point set, one line per point, shortest round-tripping decimals."""
    ps = as_point_set(points)
    lines = []
    if header:
        lines.append(f"# d={ps.dim} n={ps.n}")
    for row in ps.points:
        lines.append(" ".join(repr(float(c)) for c in row))
    return "\n".join(lines) + "\n"


def parse_points(text: str) -> PointSet:
    """Parse a points file back into a PointSet.

    Coordinates must lie in [0, 1]; every row must have the same width;
    an optional leading header must match the data.
    """
    header_d: int | None = None
    header_n: int | None = None
    rows: list[list[float]] = []
    seen_content = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            if seen_content or header_d is not None:
                raise PointsFormatError(f"line {lineno}: unexpected comment line")
            m = _HEADER_RE.match(line)
            if not m:
                raise PointsFormatError(f"line {lineno}: malformed header {line!r}")
            header_d, header_n = int(m.group(1)), int(m.group(2))
            continue
        seen_content = True
        try:
            coords = [float(tok) for tok in line.split()]
        except ValueError as exc:
            raise PointsFormatError(f"line {lineno}: {exc}") from None
        if not coords:
            continue
        if rows and len(coords) != len(rows[0]):
            raise PointsFormatError(
                f"line {lineno}: expected {len(rows[0])} coordinates, got {len(coords)}"
            )
        for c in coords:
            if not 0.0 <= c <= 1.0:
                raise PointsFormatError(f"line {lineno}: coordinate {c!r} outside [0, 1]")
        rows.append(coords)
    if header_d is not None:
        if rows and len(rows[0]) != header_d:
            raise PointsFormatError(
                f"header declares d={header_d} but rows have {len(rows[0])} coordinates"
            )
        if len(rows) != header_n:
            raise PointsFormatError(
                f"header declares n={header_n} but file has {len(rows)} points"
            )
        if not rows:
            return PointSet([], dim=header_d)
    if not rows:
        raise PointsFormatError("no points found and no header to fix the dimension")
    return PointSet(rows)
