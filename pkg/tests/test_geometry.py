import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stardisc import (
    AnchoredBox,
    PointSet,
    Side,
    boundary_count,
    count_le,
    count_lt,
    local_disc,
    volume,
)

DYADIC = st.integers(0, 64).map(lambda i: i / 64)


@st.composite
def point_sets(draw, max_n=10, max_d=4):
    d = draw(st.integers(1, max_d))
    n = draw(st.integers(1, max_n))
    rows = draw(
        st.lists(
            st.lists(DYADIC, min_size=d, max_size=d), min_size=n, max_size=n
        )
    )
    return PointSet(rows)


@st.composite
def point_set_with_box(draw):
    ps = draw(point_sets())
    upper = []
    for j in range(ps.dim):
        # half the time reuse a point coordinate so face ties actually occur
        if draw(st.booleans()):
            upper.append(float(draw(st.sampled_from(ps.coord(j).tolist()))))
        else:
            upper.append(draw(DYADIC))
    return ps, AnchoredBox(upper)


def test_volume_examples():
    assert volume([1.0, 1.0, 1.0]) == 1.0
    assert volume([0.5, 0.5]) == 0.25
    assert volume([0.9]) == 0.9


def test_count_le_examples():
    assert count_le([[0.5, 0.5]], [0.5, 0.5]) == 1
    ps = [[0.8, 0.2], [0.2, 0.8]]
    assert count_le(ps, [0.8, 0.8]) == 2
    assert count_le(ps, [0.5, 0.5]) == 0


def test_count_lt_examples():
    assert count_lt([[0.5, 0.5]], [0.5, 0.5]) == 0
    assert count_lt([[0.5, 0.5]], [1.0, 1.0]) == 1
    assert count_lt([[0.8, 0.2], [0.2, 0.8]], [0.8, 0.8]) == 0


def test_boundary_count_examples():
    assert boundary_count([[0.8, 0.2], [0.2, 0.8]], [0.8, 0.8]) == 2
    assert boundary_count([[0.5, 0.5]], [1.0, 1.0]) == 0
    # increasing chain: only the maximal in-box point can attain a face
    chain = [[k / 10, k / 10] for k in range(1, 10)]
    assert boundary_count(chain, [0.9, 0.9]) == 1


def test_local_disc_examples():
    res = local_disc([[0.5, 0.5]], [0.5, 0.5])
    assert res.value == 0.75
    assert res.side is Side.OVERFULL

    res = local_disc([[0.5]], [0.5])
    assert res.value == 0.5
    assert res.side is Side.OVERFULL

    res = local_disc([[0.5]], [1.0])
    assert res.value == 0.0

    # all points sitting on the box corner: overfull by 1 - vol
    res = local_disc([[0.25, 0.5]] * 4, [0.25, 0.5])
    assert res.value == 1.0 - 0.125
    assert res.side is Side.OVERFULL


def test_dimension_mismatch_rejected():
    with pytest.raises(ValueError, match="dimension mismatch"):
        count_le([[0.5, 0.5]], [0.5])
    with pytest.raises(ValueError, match="dimension mismatch"):
        boundary_count([[0.5]], [0.5, 0.5])


def test_empty_point_set_counts_are_zero_but_local_disc_rejects():
    empty = PointSet([], dim=2)
    assert count_le(empty, [0.5, 0.5]) == 0
    assert count_lt(empty, [0.5, 0.5]) == 0
    assert boundary_count(empty, [0.5, 0.5]) == 0
    with pytest.raises(ValueError):
        local_disc(empty, [0.5, 0.5])


def test_invalid_inputs_rejected():
    with pytest.raises(ValueError):
        PointSet([[0.5, 1.5]])
    with pytest.raises(ValueError):
        PointSet([[-0.1]])
    with pytest.raises(ValueError):
        AnchoredBox([0.5, 2.0])
    with pytest.raises(ValueError):
        PointSet([[float("nan")]])


def test_points_are_read_only():
    ps = PointSet([[0.5, 0.5]])
    with pytest.raises(ValueError):
        ps.points[0, 0] = 0.1


@given(point_set_with_box())
@settings(max_examples=300)
def test_count_difference_is_boundary_count(data):
    ps, box = data
    assert count_le(ps, box) - count_lt(ps, box) == boundary_count(ps, box)


@given(point_set_with_box())
@settings(max_examples=300)
def test_local_disc_dominates_half_boundary_fraction(data):
    ps, box = data
    assert local_disc(ps, box).value >= boundary_count(ps, box) / (2 * ps.n)


@given(point_set_with_box(), st.lists(DYADIC, min_size=4, max_size=4))
@settings(max_examples=200)
def test_count_and_volume_monotone_in_box(data, bumps):
    ps, box = data
    grown = np.minimum(1.0, box.upper + np.asarray(bumps[: ps.dim]))
    bigger = AnchoredBox(grown)
    assert count_le(ps, box) <= count_le(ps, bigger)
    assert volume(box) <= volume(bigger)


@given(point_sets(), st.randoms(use_true_random=False))
@settings(max_examples=200)
def test_counts_invariant_under_point_order(ps, rng):
    rows = ps.points.tolist()
    rng.shuffle(rows)
    shuffled = PointSet(rows)
    box = AnchoredBox(ps.points[0])
    assert count_le(ps, box) == count_le(shuffled, box)
    assert count_lt(ps, box) == count_lt(shuffled, box)
    assert boundary_count(ps, box) == boundary_count(shuffled, box)
