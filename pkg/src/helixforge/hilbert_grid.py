"""Hilbert functions, colength arithmetic and the Z^2 dimension grid.

``h_quad`` and ``h_cub`` are the Hilbert functions of quadratic (three
generators) and cubic (two generators) AS-regular algebras.  On the grid
``A~_{(i,j),(m,n)}`` the two step types are

============  ======================  ======================
host          Delta                   Gamma
============  ======================  ======================
quadratic     (i, j) -> (i-1, j+2)    (i, j) -> (i+1, j-1)
cubic         (i, j) -> (i-1, j+1)    (i, j) -> (i+2, j-1)
============  ======================  ======================

and each step preserves a linear functional of the index.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Union

from .errors import NotSpecifiedRegionError


def h_quad(n: int) -> int:
    if n < 0:
        return 0
    return (n + 1) * (n + 2) // 2


def h_cub(n: int) -> int:
    if n < 0:
        return 0
    a, odd = divmod(n, 2)
    return (a + 1) * (a + 2) if odd else (a + 1) ** 2


def colength(i: int) -> int:
    """Colength of a product of ``i`` consecutive point ideals ``m_{d_m} ... m_{d_{m+i-1}}``."""
    if i < 0:
        raise ValueError(f"colength needs i >= 0, got {i}")
    a, odd = divmod(i, 2)
    return (a + 1) ** 2 if odd else a * (a + 1)


def dim_D(i: int) -> int:
    """``h_quad(i) - colength(i)``; raises if it disagrees with ``h_cub(i)``."""
    value = h_quad(i) - colength(i)
    if value != h_cub(i):
        raise AssertionError(f"dim_D({i}) = {value} but h_cub({i}) = {h_cub(i)}")
    return value


class HostKind(enum.Enum):
    QUADRATIC = "quadratic"
    CUBIC = "cubic"

    @classmethod
    def parse(cls, value) -> "HostKind":
        if isinstance(value, cls):
            return value
        key = str(value).lower().removesuffix("host")
        return cls(key)


class PathStep(enum.Enum):
    DELTA = "delta"
    GAMMA = "gamma"


_STEPS = {
    HostKind.QUADRATIC: {PathStep.DELTA: (-1, 2), PathStep.GAMMA: (1, -1)},
    HostKind.CUBIC: {PathStep.DELTA: (-1, 1), PathStep.GAMMA: (2, -1)},
}

# linear functionals (ci, cj) with ci*i + cj*j constant along a step
_CONSERVED = {
    HostKind.QUADRATIC: {PathStep.DELTA: (2, 1), PathStep.GAMMA: (1, 1)},
    HostKind.CUBIC: {PathStep.DELTA: (1, 1), PathStep.GAMMA: (1, 2)},
}


def step_displacement(host: HostKind, step: PathStep) -> tuple[int, int]:
    return _STEPS[host][step]


def conserved_quantity(host: HostKind, step: PathStep, index: tuple[int, int]) -> int:
    ci, cj = _CONSERVED[host][step]
    return ci * index[0] + cj * index[1]


@dataclass(frozen=True)
class Conjectural:
    """A dimension that is expected but not proved."""

    value: int


GridValue = Union[int, Conjectural]


def grid_dim(host: HostKind, a: int, b: int) -> GridValue:
    """Dimension of ``A~_{(i,j),(i+a,j+b)}``; independent of ``(i, j)``."""
    host = HostKind.parse(host)
    if host is HostKind.QUADRATIC:
        h, hp = h_quad, h_cub
        if a == 0 and b >= 0:
            return hp(b)
        if a >= 0 and b <= 0:
            return h(a + b)
        if a <= 0:
            return hp(b + 2 * a)
    else:
        h, hp = h_cub, h_quad
        if a == 0 and b >= 0:
            return hp(b)
        if a >= 0 and b <= 0:
            return h(a + 2 * b)
        if a == -1:
            return hp(b - 1)
        if a <= -2:
            return Conjectural(hp(b + 2 * a))
    raise NotSpecifiedRegionError(f"no dimension statement covers {host.value} host at (a, b) = ({a}, {b})")


def compose_path(host: HostKind, start: tuple[int, int], steps: Iterable[PathStep]) -> tuple[int, int]:
    """Fold the step displacements starting from ``start``.

    Each step is checked against the functional it is supposed to preserve.
    """
    host = HostKind.parse(host)
    i, j = start
    for step in steps:
        di, dj = _STEPS[host][step]
        before = conserved_quantity(host, step, (i, j))
        i, j = i + di, j + dj
        if conserved_quantity(host, step, (i, j)) != before:
            raise AssertionError(f"{step.value} step broke conservation at ({i}, {j})")
    return (i, j)


def grid_degree(host: HostKind, index: tuple[int, int]) -> int:
    """Degree in Frac(A) attached to a grid index: ``i + j`` (quadratic), ``i + 2j`` (cubic)."""
    host = HostKind.parse(host)
    i, j = index
    return i + j if host is HostKind.QUADRATIC else i + 2 * j


def _leg(host, a, b, step, count):
    """Walk ``count`` steps from ``a`` (or from ``b`` when count < 0) and check the far end."""
    src, dst = (a, b) if count >= 0 else (b, a)
    end = compose_path(host, src, [step] * abs(count))
    if end != dst:
        raise AssertionError(f"{step.value} leg from {src} ended at {end}, expected {dst}")


def inner_witness_legs(host: HostKind, i: int) -> tuple[tuple[tuple[int, int], tuple[int, int]], tuple[tuple[int, int], tuple[int, int]]]:
    """Grid endpoints of the gamma and delta legs whose product is ``z_i``."""
    host = HostKind.parse(host)
    if host is HostKind.QUADRATIC:
        gamma_leg = ((2 * i, 0), (0, 2 * i))
        delta_leg = ((0, 2 * i), (i, 0))
        _leg(host, delta_leg[1], delta_leg[0], PathStep.DELTA, i)
        _leg(host, gamma_leg[1], gamma_leg[0], PathStep.GAMMA, 2 * i)
    else:
        gamma_leg = ((2 * i, 0), (0, i))
        delta_leg = ((0, i), (i, 0))
        _leg(host, delta_leg[1], delta_leg[0], PathStep.DELTA, i)
        _leg(host, gamma_leg[1], gamma_leg[0], PathStep.GAMMA, i)
    return gamma_leg, delta_leg


def inner_witness_slot(host: HostKind, i: int) -> tuple[int, int]:
    """(row, column) degrees of ``z_i`` in Frac(A), read off the composed legs."""
    gamma_leg, delta_leg = inner_witness_legs(host, i)
    if gamma_leg[1] != delta_leg[0]:
        raise AssertionError("gamma and delta legs do not compose")
    return grid_degree(host, gamma_leg[0]), grid_degree(host, delta_leg[1])
