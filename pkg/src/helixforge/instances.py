"""Seeded random generators of valid transform instances.

Every generator retries until the sampled data satisfies the construction's
hypotheses, including the existence of the roots (alpha, psi') the typed
pipeline needs, and raises ``RuntimeError`` when a group cannot supply one.
"""

from __future__ import annotations

import random
from functools import lru_cache
from math import gcd

from .errors import CollinearPointsError, OrbitConditionError
from .group_backend import CyclicGroup, Element, WeierstrassCurve, element_order, solve_division
from .helix import CubicHelixSpec, QuadraticHelixSpec
from .picard import DivisorClass, Translation, collinear, same_tau_orbit
from .transforms import BlowDownSpec, BlowUpSpec, CremonaSpec

# small curves with enough room for the orbit conditions
CURVES = (
    WeierstrassCurve(11, 1, 6),
    WeierstrassCurve(29, 1, 7),
    WeierstrassCurve(31, 2, 4),
    WeierstrassCurve(37, 0, 2),
)

MAX_TRIES = 2000


@lru_cache(maxsize=256)
def _points(group) -> tuple[Element, ...]:
    return tuple(group.elements())


def random_element(rng: random.Random, group) -> Element:
    return rng.choice(_points(group))


def random_cyclic(rng: random.Random, lo: int = 13, hi: int = 1000) -> CyclicGroup:
    return CyclicGroup(rng.randint(lo, hi))


def _orbit_count(tau: Element) -> int:
    return _group_order(tau.group) // element_order(tau)


@lru_cache(maxsize=256)
def _group_order(group) -> int:
    return group.order()


def _root_exists(k: int, c: Element) -> bool:
    group = c.group
    if isinstance(group, CyclicGroup):
        return c.value % gcd(k, group.n) == 0
    return bool(solve_division(k, c))


@lru_cache(maxsize=1024)
def psi_candidates(group, min_orbits: int = 1, need_alpha: bool = True) -> tuple[Element, ...]:
    """Every psi with ``tau = psi^3`` nontrivial, at least ``min_orbits`` tau-orbits,
    and (optionally) a square root alpha of tau."""
    out = []
    for psi in _points(group):
        tau = 3 * psi
        if tau.is_identity or _orbit_count(tau) < min_orbits:
            continue
        if need_alpha and not _root_exists(2, tau):
            continue
        out.append(psi)
    return tuple(out)


@lru_cache(maxsize=1024)
def alpha_candidates(group, need_psi: bool = True) -> tuple[Element, ...]:
    """Every alpha with ``tau = alpha^2`` nontrivial and (optionally) a cube root of tau."""
    out = []
    for alpha in _points(group):
        tau = 2 * alpha
        if tau.is_identity or (need_psi and not _root_exists(3, tau)):
            continue
        out.append(alpha)
    return tuple(out)


def random_quadratic_host(rng: random.Random, group, need_alpha: bool = True, min_orbits: int = 1) -> QuadraticHelixSpec:
    cands = psi_candidates(group, min_orbits, need_alpha)
    if not cands:
        raise RuntimeError(f"no usable psi in {group}")
    return QuadraticHelixSpec(DivisorClass(3, random_element(rng, group)), Translation(rng.choice(cands)))


def random_cubic_host(rng: random.Random, group, need_psi: bool = True) -> CubicHelixSpec:
    cands = alpha_candidates(group, need_psi)
    if not cands:
        raise RuntimeError(f"no usable alpha in {group}")
    L0 = DivisorClass(2, random_element(rng, group))
    L1 = DivisorClass(2, random_element(rng, group))
    return CubicHelixSpec(L0, L1, Translation(rng.choice(cands)))


def random_blow_up_spec(rng: random.Random, group, need_alpha: bool = True) -> BlowUpSpec:
    for _ in range(MAX_TRIES):
        host = random_quadratic_host(rng, group, need_alpha, min_orbits=2)
        p, q = random_element(rng, group), random_element(rng, group)
        if not same_tau_orbit(p, q, host.tau):
            return BlowUpSpec(host, p, q)
    raise RuntimeError(f"{group} has a single tau-orbit for every sampled psi")


def random_blow_down_spec(rng: random.Random, group, need_psi: bool = True) -> BlowDownSpec:
    host = random_cubic_host(rng, group, need_psi)
    return BlowDownSpec(host, random_element(rng, group))


def random_cremona_spec(rng: random.Random, group) -> CremonaSpec:
    for _ in range(MAX_TRIES):
        host = random_quadratic_host(rng, group, need_alpha=True, min_orbits=3)
        p, q, r = (random_element(rng, group) for _ in range(3))
        tau = host.tau
        if same_tau_orbit(p, q, tau) or same_tau_orbit(p, r, tau) or same_tau_orbit(q, r, tau):
            continue
        if collinear(p, q, r, host.L):
            continue
        try:
            return CremonaSpec(host, p, q, r)
        except (OrbitConditionError, CollinearPointsError):
            continue
    raise RuntimeError(f"no valid Cremona instance found in {group}")


_NEEDS = {
    "blowup": lambda g: bool(psi_candidates(g, 2, True)),
    "blowdown": lambda g: bool(alpha_candidates(g, True)),
    "cremona": lambda g: bool(psi_candidates(g, 3, True)),
    "any": lambda g: True,
}


def random_group(rng: random.Random, purpose: str = "any", curves=CURVES):
    """A cyclic group with n in [13, 1000] or one of the listed curves, with equal odds,
    resampled until ``purpose`` (blowup, blowdown, cremona, any) is satisfiable."""
    usable = [c for c in curves if _NEEDS[purpose](c)]
    for _ in range(MAX_TRIES):
        if rng.random() < 0.5 or not usable:
            g = random_cyclic(rng)
            if _NEEDS[purpose](g):
                return g
        else:
            return rng.choice(usable)
    raise RuntimeError(f"no group satisfies {purpose}")


def one_periodic_blow_up(rng: random.Random, group) -> BlowUpSpec:
    """A blow-up whose second point is ``q = sigma p`` with ``sigma^2 = psi^-3``."""
    for _ in range(MAX_TRIES):
        host = random_quadratic_host(rng, group, need_alpha=False, min_orbits=2)
        roots = solve_division(2, -host.tau.t)
        if not roots:
            continue
        p = random_element(rng, group)
        q = p + rng.choice(roots)
        if not same_tau_orbit(p, q, host.tau):
            return BlowUpSpec(host, p, q)
    raise RuntimeError(f"no one-periodic blow-up found in {group}")
