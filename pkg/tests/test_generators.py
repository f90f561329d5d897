from fractions import Fraction

import numpy as np
import pytest

from stardisc import (
    GeneratorSpec,
    gen_chain,
    gen_halton,
    gen_lattice,
    gen_random,
    gen_staircase,
    has_sparse_boundary,
    splitmix64,
    star_discrepancy_exact,
)


def test_chain_coordinates():
    ps = gen_chain(9, 2)
    assert ps.n == 9 and ps.dim == 2
    assert ps.points[0].tolist() == [0.1, 0.1]
    assert ps.points[-1].tolist() == [0.9, 0.9]
    assert gen_chain(1, 3).points.tolist() == [[0.5, 0.5, 0.5]]


def test_staircase_coordinates():
    ps = gen_staircase(2)
    assert ps.points.tolist() == [[1 / 3, 2 / 3], [2 / 3, 1 / 3]]
    ps = gen_staircase(9)
    assert ps.points[0].tolist() == [0.1, 0.9]
    assert ps.points[-1].tolist() == [0.9, 0.1]


def test_random_is_deterministic_and_dyadic():
    a = gen_random(50, 3, seed=7)
    b = gen_random(50, 3, seed=7)
    assert a == b
    assert a != gen_random(50, 3, seed=8)
    assert np.all(a.points >= 0.0) and np.all(a.points <= 1.0)
    # snapped to the 2^-20 grid: scaling gives exact integers
    scaled = a.points * 2**20
    assert np.array_equal(scaled, np.round(scaled))


def test_splitmix64_is_pure_integer_mixing():
    out = splitmix64(0, 4)
    assert out.dtype == np.uint64
    # reference values from the scalar splitmix64 recurrence
    def scalar(seed, count):
        mask = (1 << 64) - 1
        vals = []
        x = seed
        for _ in range(count):
            x = (x + 0x9E3779B97F4A7C15) & mask
            z = x
            z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & mask
            z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & mask
            vals.append(z ^ (z >> 31))
        return vals

    assert out.tolist() == scalar(0, 4)
    assert splitmix64(12345, 3).tolist() == scalar(12345, 3)


def test_lattice_points():
    assert gen_lattice(1, 2).points.tolist() == [[0.5, 0.5]]
    ps = gen_lattice(2, 2)
    assert ps.n == 4
    assert sorted(map(tuple, ps.points.tolist())) == [
        (0.25, 0.25),
        (0.25, 0.75),
        (0.75, 0.25),
        (0.75, 0.75),
    ]
    with pytest.raises(ValueError):
        gen_lattice(10, 10, budget=10**6)


def test_lattice_1d_matches_classical_optimum():
    # centered 1D lattice is the midpoint set with discrepancy 1/(2n)
    for m in (4, 7):
        val = star_discrepancy_exact(gen_lattice(m, 1)).value
        assert val == pytest.approx(1.0 / (2 * m), abs=1e-15)


def test_halton_radical_inverse_values():
    ps = gen_halton(8, 2)
    assert ps.coord(0).tolist() == [1 / 2, 1 / 4, 3 / 4, 1 / 8, 5 / 8, 3 / 8, 7 / 8, 1 / 16]
    base3 = [1 / 3, 2 / 3, 1 / 9, 4 / 9, 7 / 9]
    assert ps.coord(1).tolist()[:5] == pytest.approx(base3, abs=1e-15)
    assert np.all(ps.points > 0.0) and np.all(ps.points < 1.0)
    with pytest.raises(ValueError):
        gen_halton(10, 17)


@pytest.mark.parametrize("n", [2, 5, 9])
@pytest.mark.parametrize("d", [2, 3])
def test_chain_has_sparse_boundary_at_two(n, d):
    assert has_sparse_boundary(gen_chain(n, d), 2)


@pytest.mark.parametrize("n", [2, 5, 9])
def test_staircase_violates_sparsity_at_two(n):
    assert not has_sparse_boundary(gen_staircase(n), 2)


def test_generator_coordinates_are_small_rationals():
    for ps, den in ((gen_chain(9, 2), 10), (gen_staircase(4), 5)):
        for row in ps.points:
            for c in row:
                assert Fraction(float(c)).limit_denominator(10**6).denominator <= den


def test_generator_spec_dispatch():
    assert GeneratorSpec("chain", n=3, d=2).build() == gen_chain(3, 2)
    assert GeneratorSpec("staircase", n=4).build() == gen_staircase(4)
    assert GeneratorSpec("random_uniform", n=5, d=2, seed=1).build() == gen_random(5, 2, 1)
    assert GeneratorSpec("lattice", m=2, d=2).build() == gen_lattice(2, 2)
    assert GeneratorSpec("halton", n=6, d=3).build() == gen_halton(6, 3)
    with pytest.raises(ValueError):
        GeneratorSpec("chain", n=3).build()
    with pytest.raises(ValueError):
        GeneratorSpec("staircase", n=3, d=3).build()
    with pytest.raises(ValueError):
        GeneratorSpec("sobol", n=3, d=2).build()
