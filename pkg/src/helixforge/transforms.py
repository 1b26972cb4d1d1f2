"""Quadratic transforms at the level of geometric data.

Blow-up (noncommutative P^2 --> P^1 x P^1)
    host: quadratic helix ``(L, psi)``, points ``p, q`` in different tau-orbits,
    ``tau = psi^3``.  Target cubic helix ``G_i = (psi^i)^* L - d_i`` where
    ``d_{2j} = tau^{-j} p`` and ``d_{2j+1} = tau^{-j} q``.

Blow-down (noncommutative P^1 x P^1 --> P^2)
    host: cubic helix ``(L_i)`` with translation alpha, point ``p``,
    ``tau = alpha^2``.  Target quadratic helix
    ``G_i = L_{2i} + L_{2i+1} - tau^{-i} p``.

Inverse points
    blow-up (p, q) is undone by the blow-down at ``p'`` with
    ``p + q + tau p' ~ L_0``; blow-down p is undone by the blow-up at
    ``(p', q')`` with ``p + tau q' ~ L_0`` and ``p + p' ~ L_1``.

All class-level identities are computed on (degree, sum) pairs.  Wherever a
finite group lacks a root that the construction needs (alpha with
``alpha^2 = tau``, psi' with ``psi'^3 = tau``), the typed entry points raise
and :func:`verify_roundtrip` records the failure without aborting, because
the class identities never depend on which root is chosen.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

from .errors import (
    CollinearPointsError,
    DegenerateTranslationError,
    NoCubeRootError,
    NoSquareRootError,
    OrbitConditionError,
)
from .group_backend import Element, canonical_sorted, encode_element, solve_division
from .helix import CubicHelixSpec, QuadraticHelixSpec, helix_class
from .picard import DivisorClass, Translation, collinear, point_class, pullback, same_tau_orbit

Window = tuple[int, int]
DEFAULT_WINDOW: Window = (-10, 10)


def _require_nondegenerate(host):
    if host.is_degenerate:
        raise DegenerateTranslationError(
            f"{host.kind} host has tau = identity; the transform needs a translation of larger order"
        )


def _require_point(host, *points):
    for x in points:
        if x.group != host.group:
            raise ValueError(f"point {x!r} does not lie on the host curve {host.group}")


@dataclass(frozen=True)
class BlowUpSpec:
    host: QuadraticHelixSpec
    p: Element
    q: Element

    def __post_init__(self):
        _require_nondegenerate(self.host)
        _require_point(self.host, self.p, self.q)
        if same_tau_orbit(self.p, self.q, self.host.tau):
            raise OrbitConditionError(f"p={self.p!r} and q={self.q!r} lie in the same tau-orbit")


@dataclass(frozen=True)
class BlowDownSpec:
    host: CubicHelixSpec
    p: Element

    def __post_init__(self):
        _require_nondegenerate(self.host)
        _require_point(self.host, self.p)


@dataclass(frozen=True)
class CremonaSpec:
    host: QuadraticHelixSpec
    p: Element
    q: Element
    r: Element

    def __post_init__(self):
        _require_nondegenerate(self.host)
        _require_point(self.host, self.p, self.q, self.r)
        tau = self.host.tau
        for (a, x), (b, y) in (
            (("p", self.p), ("q", self.q)),
            (("p", self.p), ("r", self.r)),
            (("q", self.q), ("r", self.r)),
        ):
            if same_tau_orbit(x, y, tau):
                raise OrbitConditionError(f"{a}={x!r} and {b}={y!r} lie in the same tau-orbit")
        # splitting m_{p+q} = m_p m_q; implied by the orbit condition, kept explicit
        for k in (-1, 0, 1):
            if self.p == self.q + k * tau.t:
                raise OrbitConditionError(f"p = tau^{k} q violates the splitting hypothesis")
        if collinear(self.p, self.q, self.r, self.host.L):
            raise CollinearPointsError(f"p, q, r are collinear: p + q + r ~ L = {self.host.L!r}")


def d_point(tau: Translation, p: Element, q: Element, i: int) -> Element:
    """``tau^{-j} p`` for ``i = 2j`` and ``tau^{-j} q`` for ``i = 2j + 1``."""
    j, odd = divmod(i, 2)
    return (q if odd else p) - j * tau.t


def blow_up_class(host: QuadraticHelixSpec, p: Element, q: Element, i: int) -> DivisorClass:
    return helix_class(host, i) - point_class(d_point(host.tau, p, q, i))


def blow_down_class(host: CubicHelixSpec, p: Element, i: int) -> DivisorClass:
    return helix_class(host, 2 * i) + helix_class(host, 2 * i + 1) - point_class(p - i * host.tau.t)


@dataclass(frozen=True)
class BlowUpResult:
    helix: CubicHelixSpec
    classes: dict
    alpha_roots: tuple

    def window(self) -> list[DivisorClass]:
        return [self.classes[i] for i in sorted(self.classes)]


@dataclass(frozen=True)
class BlowDownResult:
    helix: QuadraticHelixSpec
    classes: dict
    psi_roots: tuple

    def window(self) -> list[DivisorClass]:
        return [self.classes[i] for i in sorted(self.classes)]


def blow_up(spec: BlowUpSpec, window: Window = DEFAULT_WINDOW) -> BlowUpResult:
    host = spec.host
    roots = solve_division(2, host.tau.t)
    if not roots:
        raise NoSquareRootError(f"no alpha with 2*alpha = tau = {host.tau.t!r} in {host.group}")
    alpha = Translation(canonical_sorted(roots)[0])
    g0 = blow_up_class(host, spec.p, spec.q, 0)
    g1 = blow_up_class(host, spec.p, spec.q, 1)
    classes = {i: blow_up_class(host, spec.p, spec.q, i) for i in range(window[0], window[1] + 1)}
    return BlowUpResult(CubicHelixSpec(g0, g1, alpha), classes, roots)


def blow_down(spec: BlowDownSpec, window: Window = DEFAULT_WINDOW) -> BlowDownResult:
    host = spec.host
    roots = solve_division(3, host.tau.t)
    if not roots:
        raise NoCubeRootError(f"no psi' with 3*psi' = tau = {host.tau.t!r} in {host.group}")
    psi = Translation(canonical_sorted(roots)[0])
    classes = {i: blow_down_class(host, spec.p, i) for i in range(window[0], window[1] + 1)}
    return BlowDownResult(QuadraticHelixSpec(blow_down_class(host, spec.p, 0), psi), classes, roots)


# --- inverses ---------------------------------------------------------------


def inverse_point_blow_up(host: QuadraticHelixSpec, p: Element, q: Element) -> Element:
    """Closed form for p' in ``p + q + tau p' ~ L_0``."""
    return host.L.sum - p - q - host.tau.t


def inverse_points_blow_down(host: CubicHelixSpec, p: Element) -> tuple[Element, Element]:
    """Closed forms ``(p', q')`` for ``p + p' ~ L_1`` and ``p + tau q' ~ L_0``."""
    return host.L1.sum - p, host.L0.sum - p - host.tau.t


def brute_force_inverse_blow_up(host: QuadraticHelixSpec, p: Element, q: Element) -> tuple[Element, ...]:
    """Every x with ``point(p) + point(q) + point(tau x) == L_0``, by enumeration."""
    t = host.tau.t
    return tuple(x for x in host.group.elements() if point_class(p) + point_class(q) + point_class(x + t) == host.L)


def brute_force_inverse_blow_down(host: CubicHelixSpec, p: Element) -> tuple[tuple[Element, ...], tuple[Element, ...]]:
    t = host.tau.t
    pts = list(host.group.elements())
    p_primes = tuple(x for x in pts if point_class(p) + point_class(x) == host.L1)
    q_primes = tuple(x for x in pts if point_class(p) + point_class(x + t) == host.L0)
    return p_primes, q_primes


def invert_blow_up(spec: BlowUpSpec) -> BlowDownSpec:
    target = blow_up(spec, window=(0, 1)).helix
    return BlowDownSpec(target, inverse_point_blow_up(spec.host, spec.p, spec.q))


def invert_blow_down(spec: BlowDownSpec) -> BlowUpSpec:
    target = blow_down(spec, window=(0, 1)).helix
    p1, q1 = inverse_points_blow_down(spec.host, spec.p)
    return BlowUpSpec(target, p1, q1)


# --- Cremona ----------------------------------------------------------------


@dataclass
class CremonaFactorization:
    gamma2: BlowUpSpec
    gamma1: BlowDownSpec
    target: QuadraticHelixSpec
    composed: dict
    direct: dict
    mismatches: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def cremona_direct_class(host: QuadraticHelixSpec, p: Element, q: Element, r: Element, i: int) -> DivisorClass:
    """``L_{2i} + L_{2i+1} - tau^{-i}(p) - tau^{-i}(q) - tau^{-i}(r)``."""
    shift = i * host.tau.t
    return (
        helix_class(host, 2 * i)
        + helix_class(host, 2 * i + 1)
        - point_class(p - shift)
        - point_class(q - shift)
        - point_class(r - shift)
    )


def cremona_factor(spec: CremonaSpec, window: Window = DEFAULT_WINDOW) -> CremonaFactorization:
    """Factor the Cremona transform as blow-up at (p, q) followed by blow-down at r."""
    host = spec.host
    gamma2 = BlowUpSpec(host, spec.p, spec.q)
    up = blow_up(gamma2, window=(0, 1))
    gamma1 = BlowDownSpec(up.helix, spec.r)
    down = blow_down(gamma1, window=window)
    target_L = host.L + pullback(host.psi, host.L) - point_class(spec.p) - point_class(spec.q) - point_class(spec.r)
    target = QuadraticHelixSpec(target_L, host.psi)
    result = CremonaFactorization(gamma2, gamma1, target, down.classes, {})
    for i in range(window[0], window[1] + 1):
        direct = cremona_direct_class(host, spec.p, spec.q, spec.r, i)
        result.direct[i] = direct
        if down.classes[i] != direct:
            result.mismatches.append({"i": i, "composed": down.classes[i], "direct": direct})
        if helix_class(target, i) != direct:
            result.mismatches.append({"i": i, "target_helix": helix_class(target, i), "direct": direct})
    return result


# --- one-periodicity --------------------------------------------------------


def sigma_translations(host: QuadraticHelixSpec) -> tuple[Element, ...]:
    """All t_sigma with ``2 t_sigma = -tau``, i.e. ``sigma^2 = psi^{-3}``."""
    return solve_division(2, -host.tau.t)


def consecutive_differences(classes: Sequence[DivisorClass]) -> list[Element]:
    return [b.sum - a.sum for a, b in zip(classes, classes[1:])]


def is_one_periodic(classes: Sequence[DivisorClass]) -> bool:
    """Whether ``s(G_{i+1}) - s(G_i)`` is constant along the window."""
    return len(set(consecutive_differences(classes))) <= 1


# --- round trips ------------------------------------------------------------


@dataclass
class RoundTripReport:
    kind: str
    recovered_points: list
    recovered_helix_window: list
    mismatches: dict
    notes: list = field(default_factory=list)
    roots: dict = field(default_factory=dict)
    window: Window = DEFAULT_WINDOW

    @property
    def matches(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> dict:
        def enc(v):
            if isinstance(v, Element):
                return encode_element(v)
            if isinstance(v, DivisorClass):
                return v.to_dict()
            if isinstance(v, dict):
                return {k: enc(x) for k, x in v.items()}
            if isinstance(v, (list, tuple)):
                return [enc(x) for x in v]
            return v

        return {
            "kind": self.kind,
            "matches": self.matches,
            "window": list(self.window),
            "recovered_points": enc(self.recovered_points),
            "recovered_helix_window": enc(self.recovered_helix_window),
            "mismatches": enc(self.mismatches),
            "notes": list(self.notes),
            "roots": enc(self.roots),
        }


def verify_roundtrip(
    start: Union[BlowUpSpec, BlowDownSpec],
    window: Window = DEFAULT_WINDOW,
    inverse_points: Optional[Sequence[Element]] = None,
) -> RoundTripReport:
    """Forward transform, inverse, forward again; compare with the start data.

    ``inverse_points`` overrides the computed inverse base point(s) -- ``(p',)``
    for a blow-up start, ``(p', q')`` for a blow-down start -- which lets a
    caller test a candidate inverse.
    """
    if isinstance(start, BlowUpSpec):
        return _roundtrip_quadratic(start, window, inverse_points)
    return _roundtrip_cubic(start, window, inverse_points)


def _diff_points(names, expected, recovered):
    return [
        {"name": n, "expected": e, "recovered": r}
        for n, e, r in zip(names, expected, recovered)
        if e != r
    ]


def _roundtrip_quadratic(spec: BlowUpSpec, window, override) -> RoundTripReport:
    host, p, q = spec.host, spec.p, spec.q
    t = host.tau.t
    lo, hi = window
    report = RoundTripReport("quadratic", [], [], {}, window=window)
    mismatches = report.mismatches

    report.roots["alpha"] = solve_division(2, t)
    if not report.roots["alpha"]:
        report.notes.append("no alpha with alpha^2 = tau in this group; target cubic helix checked at class level only")

    closed = inverse_point_blow_up(host, p, q)
    brute = brute_force_inverse_blow_up(host, p, q)
    if brute != (closed,):
        mismatches["inverse_closed_form"] = {"closed_form": closed, "brute_force": list(brute)}
    p1 = override[0] if override is not None else closed

    # forward: blow-up classes G_i
    G = {i: blow_up_class(host, p, q, i) for i in range(2 * lo, 2 * hi + 2)}
    G[0], G[1] = blow_up_class(host, p, q, 0), blow_up_class(host, p, q, 1)
    # forward again: blow-down of the target cubic helix at p'
    recovered = {i: G[2 * i] + G[2 * i + 1] - point_class(p1 - i * t) for i in range(lo, hi + 1)}
    # inverse of that blow-down: p'' and q''
    p2 = G[1].sum - p1
    q2 = G[0].sum - p1 - t
    report.recovered_points = [p2, q2]
    report.recovered_helix_window = [recovered[i] for i in range(lo, hi + 1)]

    point_diff = _diff_points(("p", "q"), (p, q), (p2, q2))
    if point_diff:
        mismatches["points"] = point_diff
    helix_diff = [
        {"i": i, "expected": helix_class(host, i), "recovered": recovered[i]}
        for i in range(lo, hi + 1)
        if helix_class(host, i) != recovered[i]
    ]
    if helix_diff:
        mismatches["helix"] = helix_diff

    if report.roots["alpha"]:
        _typed_pipeline_quadratic(spec, G, p1, report)
    return report


def _typed_pipeline_quadratic(spec, G, p1, report):
    """Run the typed entry points and check the packaged helices agree with the class-level data."""
    try:
        up = blow_up(spec, window=(0, 1))
        cubic = up.helix
        bad = [i for i in G if helix_class(cubic, i) != G[i]]
        if bad:
            report.mismatches["packaged_cubic_helix"] = bad
        back = blow_down(BlowDownSpec(cubic, p1), window=report.window)
        report.roots["psi_prime"] = back.psi_roots
        bad = [i for i in range(report.window[0], report.window[1] + 1) if helix_class(back.helix, i) != helix_class(spec.host, i)]
        if bad:
            report.mismatches["packaged_quadratic_helix"] = bad
    except (NoSquareRootError, NoCubeRootError, OrbitConditionError, DegenerateTranslationError) as exc:
        report.notes.append(f"typed pipeline stopped: {type(exc).__name__}: {exc}")


def _roundtrip_cubic(spec: BlowDownSpec, window, override) -> RoundTripReport:
    host, p = spec.host, spec.p
    t = host.tau.t
    lo, hi = window
    report = RoundTripReport("cubic", [], [], {}, window=window)
    mismatches = report.mismatches

    report.roots["psi_prime"] = solve_division(3, t)
    if not report.roots["psi_prime"]:
        report.notes.append("no psi' with psi'^3 = tau in this group; target quadratic helix checked at class level only")

    closed = inverse_points_blow_down(host, p)
    brute_p, brute_q = brute_force_inverse_blow_down(host, p)
    if brute_p != (closed[0],) or brute_q != (closed[1],):
        mismatches["inverse_closed_form"] = {
            "closed_form": list(closed),
            "brute_force": [list(brute_p), list(brute_q)],
        }
    p1, q1 = tuple(override) if override is not None else closed
    if same_tau_orbit(p1, q1, host.tau):
        report.notes.append("inverse points p', q' share a tau-orbit; the inverse blow-up is outside the construction's hypotheses")

    idx = set(range(lo, hi + 1)) | {0, 1}
    G = {i: blow_down_class(host, p, i) for i in idx}
    recovered = {i: G[i] - point_class(d_point(host.tau, p1, q1, i)) for i in range(lo, hi + 1)}
    p2 = G[0].sum - p1 - q1 - t
    report.recovered_points = [p2]
    report.recovered_helix_window = [recovered[i] for i in range(lo, hi + 1)]

    point_diff = _diff_points(("p",), (p,), (p2,))
    if point_diff:
        mismatches["points"] = point_diff
    helix_diff = [
        {"i": i, "expected": helix_class(host, i), "recovered": recovered[i]}
        for i in range(lo, hi + 1)
        if helix_class(host, i) != recovered[i]
    ]
    if helix_diff:
        mismatches["helix"] = helix_diff

    if report.roots["psi_prime"]:
        _typed_pipeline_cubic(spec, G, (p1, q1), report)
    return report


def _typed_pipeline_cubic(spec, G, inverse, report):
    try:
        down = blow_down(spec, window=report.window)
        quad = down.helix
        bad = [i for i in G if helix_class(quad, i) != G[i]]
        if bad:
            report.mismatches["packaged_quadratic_helix"] = bad
        back = blow_up(BlowUpSpec(quad, *inverse), window=report.window)
        report.roots["alpha"] = back.alpha_roots
        bad = [i for i in range(report.window[0], report.window[1] + 1) if helix_class(back.helix, i) != helix_class(spec.host, i)]
        if bad:
            report.mismatches["packaged_cubic_helix"] = bad
    except (NoSquareRootError, NoCubeRootError, OrbitConditionError, DegenerateTranslationError) as exc:
        report.notes.append(f"typed pipeline stopped: {type(exc).__name__}: {exc}")


# --- section triviality -----------------------------------------------------


@dataclass
class TrivialityReport:
    kind: str
    cells: int
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def p_prime_ij(host: QuadraticHelixSpec, p: Element, q: Element, i: int, j: int) -> Element:
    """The point x with ``d_j + d_{j+1} + x ~ L_{i+j}`` (a degree-1 residual)."""
    tau = host.tau
    return helix_class(host, i + j).sum - d_point(tau, p, q, j) - d_point(tau, p, q, j + 1)


def blow_up_section_class(host: QuadraticHelixSpec, p: Element, q: Element, p_prime: Element, i: int, j: int) -> DivisorClass:
    """``L_{i+j} - d_j - d_{j+1} - tau^{-i+1} p'`` on a quadratic host."""
    tau = host.tau
    return (
        helix_class(host, i + j)
        - point_class(d_point(tau, p, q, j))
        - point_class(d_point(tau, p, q, j + 1))
        - point_class(p_prime - (i - 1) * tau.t)
    )


def blow_down_section_class(host: CubicHelixSpec, p: Element, p_prime: Element, q_prime: Element, i: int, j: int) -> DivisorClass:
    """``L_{i+2j} - tau^{-j} p - d'_{i-1}`` on a cubic host."""
    tau = host.tau
    return helix_class(host, i + 2 * j) - point_class(p - j * tau.t) - point_class(d_point(tau, p_prime, q_prime, i - 1))


def section_triviality_check(
    spec: Union[BlowUpSpec, BlowDownSpec],
    window: Window = DEFAULT_WINDOW,
    inverse_points: Optional[Sequence[Element]] = None,
) -> TrivialityReport:
    """Check that the degree-zero classes carrying the delta sections are trivial.

    Blow-up start (quadratic host): ``L_{i+j} - d_j - d_{j+1} - tau^{-i+1} p'``.
    Blow-down start (cubic host): ``L_{i+2j} - tau^{-j} p - d'_{i-1}``.
    Every ``(i, j)`` in ``window x window`` is checked.
    """
    lo, hi = window
    host = spec.host
    t = host.tau.t
    rng = range(lo, hi + 1)
    if isinstance(spec, BlowUpSpec):
        p1 = inverse_points[0] if inverse_points is not None else inverse_point_blow_up(host, spec.p, spec.q)
        report = TrivialityReport("quadratic", len(rng) ** 2)
        L = {k: helix_class(host, k) for k in range(2 * lo, 2 * hi + 1)}
        d = {k: point_class(d_point(host.tau, spec.p, spec.q, k)) for k in range(lo, hi + 2)}
        shifted = {i: point_class(p1 - (i - 1) * t) for i in rng}
        for i in rng:
            for j in rng:
                c = L[i + j] - d[j] - d[j + 1] - shifted[i]
                if not c.is_trivial:
                    report.failures.append((i, j, c))
        return report
    p1, q1 = tuple(inverse_points) if inverse_points is not None else inverse_points_blow_down(host, spec.p)
    report = TrivialityReport("cubic", len(rng) ** 2)
    L = {k: helix_class(host, k) for k in range(3 * lo, 3 * hi + 1)}
    base = {j: point_class(spec.p - j * t) for j in rng}
    d = {i: point_class(d_point(host.tau, p1, q1, i - 1)) for i in rng}
    for i in rng:
        for j in rng:
            c = L[i + 2 * j] - base[j] - d[i]
            if not c.is_trivial:
                report.failures.append((i, j, c))
    return report
