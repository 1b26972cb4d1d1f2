import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helixforge.errors import NotSpecifiedRegionError
from helixforge.hilbert_grid import (
    Conjectural,
    HostKind,
    PathStep,
    colength,
    compose_path,
    conserved_quantity,
    dim_D,
    grid_degree,
    grid_dim,
    h_cub,
    h_quad,
    inner_witness_legs,
    inner_witness_slot,
)
from oracles import series_coefficients

Q, C = HostKind.QUADRATIC, HostKind.CUBIC


def test_hilbert_function_examples():
    assert [h_quad(0), h_quad(1), h_quad(2)] == [1, 3, 6]
    assert [h_cub(1), h_cub(4), h_cub(-3)] == [2, 9, 0]
    assert h_quad(-1) == 0


def test_hilbert_functions_match_series():
    quad = series_coefficients([1, 1, 1], 200)
    cub = series_coefficients([1, 1, 2], 200)
    assert [h_quad(n) for n in range(201)] == quad
    assert [h_cub(n) for n in range(201)] == cub


def test_colength_examples():
    assert [colength(0), colength(4), colength(5)] == [0, 6, 9]
    with pytest.raises(ValueError):
        colength(-1)


def test_dim_D_examples():
    assert [dim_D(2), dim_D(3), dim_D(0)] == [4, 6, 1]


def test_dim_D_identity_exhaustive():
    for i in range(201):
        assert dim_D(i) == h_cub(i)


def test_grid_dim_slots():
    assert grid_dim(Q, -1, 2) == 1
    assert grid_dim(Q, 1, -1) == 1
    assert grid_dim(C, -1, 1) == 1
    assert grid_dim(C, 2, -1) == 1


def test_grid_dim_clauses():
    assert grid_dim(Q, 0, 4) == h_cub(4)
    assert grid_dim(Q, 3, -1) == h_quad(2)
    assert grid_dim(Q, -2, 7) == h_cub(3)
    assert grid_dim(C, 0, 3) == h_quad(3)
    assert grid_dim(C, 5, -2) == h_cub(1)
    assert grid_dim(C, -1, 4) == h_quad(3)


def test_grid_dim_conjectural_region():
    value = grid_dim(C, -3, 8)
    assert isinstance(value, Conjectural)
    assert value.value == h_quad(2)


def test_grid_dim_accepts_host_names():
    assert grid_dim("QuadraticHost", -1, 2) == 1
    assert grid_dim("cubic", 2, -1) == 1


@pytest.mark.parametrize("host", [Q, C])
def test_grid_dim_unspecified_region(host):
    with pytest.raises(NotSpecifiedRegionError):
        grid_dim(host, 1, 1)


def test_quadratic_step_shapes_are_not_cubic_host_slots():
    # on the cubic host the displacements (-1, +2) and (+1, -1) are not one-dimensional
    assert grid_dim(C, -1, 2) == 3
    assert grid_dim(C, 1, -1) != 1


def test_grid_dim_overlap_consistency():
    for b in range(0, 51):
        assert grid_dim(Q, 0, b) == h_cub(b + 0)
        assert grid_dim(Q, 0, b) == grid_dim(Q, -1, b + 2)
        assert grid_dim(C, 0, b) == h_quad(b)
    for host in (Q, C):
        assert grid_dim(host, 0, 0) == 1
        for b in range(-10, 1):
            # a = 0, b <= 0 sits in two clauses
            assert grid_dim(host, 0, b) == (h_quad(b) if host is Q else h_cub(2 * b))


def test_compose_path_examples():
    for i in range(0, 6):
        assert compose_path(Q, (i, 0), [PathStep.DELTA] * i) == (0, 2 * i)
        assert compose_path(C, (0, i), [PathStep.GAMMA] * i) == (2 * i, 0)
    assert compose_path(Q, (3, -4), []) == (3, -4)


@settings(max_examples=1000)
@given(
    st.sampled_from([Q, C]),
    st.tuples(st.integers(-50, 50), st.integers(-50, 50)),
    st.lists(st.sampled_from([PathStep.DELTA, PathStep.GAMMA]), max_size=40),
)
def test_path_conservation(host, start, steps):
    end = compose_path(host, start, steps)
    pos = start
    for step in steps:
        nxt = compose_path(host, pos, [step])
        assert conserved_quantity(host, step, pos) == conserved_quantity(host, step, nxt)
        pos = nxt
    assert pos == end
    if steps and all(s is steps[0] for s in steps):
        assert conserved_quantity(host, steps[0], start) == conserved_quantity(host, steps[0], end)


def test_inner_witness_slot_examples():
    assert inner_witness_slot(Q, 1) == (2, 1)
    assert inner_witness_slot(Q, 0) == (0, 0)
    assert inner_witness_slot(C, 0) == (0, 0)
    assert inner_witness_slot(Q, -2) == (-4, -2)


@pytest.mark.parametrize("i", range(-6, 7))
def test_inner_witness_legs_compose(i):
    for host in (Q, C):
        gamma_leg, delta_leg = inner_witness_legs(host, i)
        assert gamma_leg[1] == delta_leg[0]
        assert inner_witness_slot(host, i) == (2 * i, i)
    gamma_leg, delta_leg = inner_witness_legs(C, i)
    assert gamma_leg == ((2 * i, 0), (0, i))
    assert delta_leg == ((0, i), (i, 0))


def test_grid_degree():
    assert grid_degree(Q, (2, 3)) == 5
    assert grid_degree(C, (2, 3)) == 8


def test_random_paths_both_hosts():
    rng = random.Random(7)
    for host in (Q, C):
        for _ in range(1000):
            start = (rng.randint(-30, 30), rng.randint(-30, 30))
            steps = [rng.choice(list(PathStep)) for _ in range(rng.randint(0, 25))]
            compose_path(host, start, steps)
