"""Point and counting layer of the I-basis of a quadratic Sklyanin algebra.

A monomial ``g = x^alpha y^beta z^lambda`` moves the base points
``(o1, o2, o3)`` by powers of psi and its basis element vanishes on
tau-translates of ``p, q, r``.  The exponent of ``z`` is called ``lambda_``
here so that it does not clash with the transform name gamma.

The brute-force counters are the oracles; the closed forms are checked
against them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import CapacityError, OrbitConditionError
from .group_backend import Element
from .picard import Translation, same_tau_orbit

DEFAULT_MAX_DEGREE = 60

# exponent change of obar under right multiplication by x, y, z
GENERATOR_SHIFTS = {"x": (1, -2, -2), "y": (-2, 1, -2), "z": (-2, -2, 1)}


@dataclass(frozen=True, order=True)
class Monomial:
    alpha: int
    beta: int
    lambda_: int

    def __post_init__(self):
        if min(self.alpha, self.beta, self.lambda_) < 0:
            raise ValueError(f"monomial exponents must be >= 0, got {self.exponents}")

    @property
    def exponents(self) -> tuple[int, int, int]:
        return (self.alpha, self.beta, self.lambda_)

    @property
    def degree(self) -> int:
        return self.alpha + self.beta + self.lambda_

    def times(self, var: str) -> "Monomial":
        a, b, c = self.exponents
        return {"x": Monomial(a + 1, b, c), "y": Monomial(a, b + 1, c), "z": Monomial(a, b, c + 1)}[var]


def monomials(n: int) -> Iterator[Monomial]:
    """All monomials of total degree n, in lexicographic order."""
    for a in range(n + 1):
        for b in range(n - a + 1):
            yield Monomial(a, b, n - a - b)


@dataclass(frozen=True)
class BasePoints:
    """``o1 = psi(p)``, ``o2 = psi(q)``, ``o3 = psi(r)`` together with psi."""

    o1: Element
    o2: Element
    o3: Element
    psi: Translation

    @classmethod
    def from_points(cls, p: Element, q: Element, r: Element, psi: Translation) -> "BasePoints":
        tau = psi ** 3
        for (a, x), (b, y) in ((("p", p), ("q", q)), (("p", p), ("r", r)), (("q", q), ("r", r))):
            if same_tau_orbit(x, y, tau):
                raise OrbitConditionError(f"{a} and {b} lie in the same tau-orbit")
        t = psi.t
        return cls(p + t, q + t, r + t, psi)

    @property
    def tau(self) -> Translation:
        return self.psi ** 3

    @property
    def points(self) -> tuple[Element, Element, Element]:
        """The underlying ``(p, q, r)``."""
        t = self.psi.t
        return (self.o1 - t, self.o2 - t, self.o3 - t)


def obar_exponents(g: Monomial) -> tuple[int, int, int]:
    a, b, c = g.exponents
    return (a - 2 * b - 2 * c, b - 2 * a - 2 * c, c - 2 * a - 2 * b)


def obar(g: Monomial, base: BasePoints) -> tuple[Element, Element, Element]:
    t = base.psi.t
    e1, e2, e3 = obar_exponents(g)
    return (base.o1 + e1 * t, base.o2 + e2 * t, base.o3 + e3 * t)


def vanishing_divisor(g: Monomial, base: BasePoints) -> tuple[list[Element], list[Element], list[Element]]:
    """tau-translates ``tau^0 .. tau^-(k-1)`` of p, q, r with k = beta+lambda, alpha+lambda, alpha+beta."""
    p, q, r = base.points
    step = base.tau.t
    a, b, c = g.exponents

    def run(x, k):
        return [x - m * step for m in range(k)]

    return run(p, b + c), run(q, a + c), run(r, a + b)


def _ceil_half(h: int) -> int:
    return -(-h // 2)


def admissible(g: Monomial, h: int) -> bool:
    return _ceil_half(h) <= g.beta + g.lambda_ and h // 2 <= g.alpha + g.lambda_


def _check_degree(n: int, max_degree: int):
    if n > max_degree:
        raise CapacityError(f"total degree {n} exceeds max_degree {max_degree}")


def count_admissible(a: int, b: int, max_degree: int = DEFAULT_MAX_DEGREE) -> int:
    """Brute-force count of ``alpha+beta+lambda = a+b`` with the two exponent bounds."""
    if b < 0:
        raise ValueError(f"count_admissible needs b >= 0, got {b}")
    n = a + b
    if n < 0:
        return 0
    _check_degree(n, max_degree)
    amax = n - _ceil_half(b)
    bmax = n - b // 2
    return sum(1 for g in monomials(n) if g.alpha <= amax and g.beta <= bmax)


def _tri(n: int) -> int:
    return (n + 1) * (n + 2) // 2 if n >= 0 else 0


def inclusion_exclusion_count(a: int, b: int) -> int:
    """Same count as :func:`count_admissible`, by inclusion-exclusion over the two bounds."""
    n = a + b
    if n < 0:
        return 0
    s_alpha = max(_ceil_half(b), 0)  # alpha >= amax + 1 = n - ceil(b/2) + 1
    s_beta = max(b // 2, 0)
    lo_alpha = max(n - s_alpha + 1, 0)
    lo_beta = max(n - s_beta + 1, 0)
    return _tri(n) - _tri(n - lo_alpha) - _tri(n - lo_beta) + _tri(n - lo_alpha - lo_beta)


def closed_form_count(a: int, b: int) -> int:
    """``(a+r+1)^2`` for ``b = 2r``, ``(a+r+1)(a+r+2)`` for ``b = 2r+1``; 0 when ``2a+b < 0``.

    Valid for ``a <= 0``; the inclusion-exclusion value is computed as well and
    must agree.
    """
    if b < 0:
        raise ValueError(f"closed_form_count needs b >= 0, got {b}")
    if a > 0:
        raise ValueError(f"closed form only holds for a <= 0, got a = {a}")
    if 2 * a + b < 0:
        value = 0
    else:
        r, odd = divmod(b, 2)
        value = (a + r + 1) * (a + r + 2) if odd else (a + r + 1) ** 2
    ie = inclusion_exclusion_count(a, b)
    if ie != value:
        raise AssertionError(f"closed form {value} != inclusion-exclusion {ie} at (a, b) = ({a}, {b})")
    return value


def dim_M_closed_form(n: int, h: int) -> int:
    """Number of admissible degree-n monomials, valid for ``n >= h - 1``."""
    if n < h - 1:
        raise ValueError(f"closed form needs n >= h - 1, got n={n}, h={h}")
    a, odd = divmod(h, 2)
    if odd:
        return _tri(n) - a * (a + 1) // 2 - (a + 1) * (a + 2) // 2
    return _tri(n) - a * (a + 1)


def dim_M(n: int, h: int, max_degree: int = DEFAULT_MAX_DEGREE, check: bool = True) -> int:
    """Brute-force count of admissible monomials of degree n; cross-checked when ``n >= h - 1``."""
    if n < 0 or h < 0:
        raise ValueError(f"dim_M needs n, h >= 0, got n={n}, h={h}")
    _check_degree(n, max_degree)
    value = sum(1 for g in monomials(n) if admissible(g, h))
    if check and n >= h - 1:
        closed = dim_M_closed_form(n, h)
        if closed != value:
            raise AssertionError(f"dim_M({n}, {h}) = {value} but the closed form gives {closed}")
    return value
