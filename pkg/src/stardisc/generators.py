"""Deterministic point-set families used as test inputs and extremal examples.

The chain and staircase families are the two extremes of boundary
structure in the plane: the chain admits no anchored box with two points
on its right-upper boundary, while the staircase realises the maximal
number of box-cut subsets.  All generators emit exactly representable
coordinates (small rationals or dyadics) so tie semantics are
reproducible across platforms.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .geometry import PointSet

__all__ = [
    "GeneratorSpec",
    "gen_chain",
    "gen_staircase",
    "gen_random",
    "gen_lattice",
    "gen_halton",
    "splitmix64",
]

_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53)

_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)


def splitmix64(seed: int, count: int) -> np.ndarray:
    """First `count` outputs of the splitmix64 generator for `seed`.

    Pure 64-bit integer mixing, identical on every platform.
    """
    state = np.uint64(seed & 0xFFFFFFFFFFFFFFFF)
    z = np.arange(1, count + 1, dtype=np.uint64) * _GOLDEN + state
    z = (z ^ (z >> np.uint64(30))) * _MIX1
    z = (z ^ (z >> np.uint64(27))) * _MIX2
    return z ^ (z >> np.uint64(31))


def gen_chain(n: int, d: int) -> PointSet:
    """Strictly increasing diagonal chain: p_k = (k/(n+1), ..., k/(n+1))."""
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    vals = np.arange(1, n + 1, dtype=float) / (n + 1)
    return PointSet(np.tile(vals[:, None], (1, d)))


def gen_staircase(n: int) -> PointSet:
    """Descending 2-D staircase: p_k = (k/(n+1), (n+1-k)/(n+1)), a strict antichain."""
    if n < 1:
        raise ValueError("need n >= 1")
    k = np.arange(1, n + 1, dtype=float)
    return PointSet(np.column_stack([k / (n + 1), (n + 1 - k) / (n + 1)]))


def gen_random(n: int, d: int, seed: int) -> PointSet:
    """Seeded uniform points snapped to the dyadic grid {i/2^20}.

    Coordinates come from splitmix64 in point-major order (coordinate j of
    point k uses draw k*d + j), so output is identical across platforms.
    """
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    u = splitmix64(seed, n * d)
    coords = (u >> np.uint64(44)).astype(np.float64) / float(2**20)
    return PointSet(coords.reshape(n, d))


def gen_lattice(m: int, d: int, budget: int = 100_000_000) -> PointSet:
    """Centered regular grid with m^d points ((i_1+1/2)/m, ..., (i_d+1/2)/m)."""
    if m < 1 or d < 1:
        raise ValueError("need m >= 1 and d >= 1")
    if m**d > budget:
        raise ValueError(f"lattice size {m}^{d} exceeds budget {budget}")
    axis = (np.arange(m, dtype=float) + 0.5) / m
    grids = np.meshgrid(*([axis] * d), indexing="ij")
    pts = np.column_stack([g.reshape(-1) for g in grids])
    return PointSet(pts)


def _radical_inverse(k: int, base: int) -> float:
    x = 0.0
    f = 1.0 / base
    while k > 0:
        x += f * (k % base)
        k //= base
        f /= base
    return x


def gen_halton(n: int, d: int, bases: tuple[int, ...] | None = None) -> PointSet:
    """Halton sequence points k = 1..n, coordinate j the radical inverse in the j-th prime base."""
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    if bases is None:
        if d > len(_PRIMES):
            raise ValueError(f"d={d} too large: built-in bases cover d <= {len(_PRIMES)}")
        bases = _PRIMES[:d]
    if len(bases) != d:
        raise ValueError(f"need {d} bases, got {len(bases)}")
    pts = np.empty((n, d))
    for j, b in enumerate(bases):
        pts[:, j] = [_radical_inverse(k, b) for k in range(1, n + 1)]
    return PointSet(pts)


@dataclass(frozen=True)
class GeneratorSpec:
    """Parameters selecting one generator family; `build` dispatches on `kind`."""

    kind: str
    n: int | None = None
    d: int | None = None
    seed: int | None = None
    m: int | None = None
    bases: tuple[int, ...] | None = None

    def build(self) -> PointSet:
        kind = "random" if self.kind == "random_uniform" else self.kind
        if kind == "chain":
            return gen_chain(self._req("n"), self._req("d"))
        if kind == "staircase":
            if self.d not in (None, 2):
                raise ValueError("staircase is two-dimensional")
            return gen_staircase(self._req("n"))
        if kind == "random":
            return gen_random(self._req("n"), self._req("d"), self._req("seed"))
        if kind == "lattice":
            return gen_lattice(self._req("m"), self._req("d"))
        if kind == "halton":
            return gen_halton(self._req("n"), self._req("d"), self.bases)
        raise ValueError(f"unknown generator kind {self.kind!r}")

    def _req(self, field: str) -> int:
        val = getattr(self, field)
        if val is None:
            raise ValueError(f"generator {self.kind!r} requires {field}")
        return val
