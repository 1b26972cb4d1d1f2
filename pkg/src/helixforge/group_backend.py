"""Finite abelian groups standing in for the points of an elliptic curve.

Two interchangeable backends are provided:

* :class:`CyclicGroup` -- ``Z/nZ`` with residues as elements;
* :class:`WeierstrassCurve` -- ``y^2 = x^3 + ax + b`` over ``F_p`` with the
  chord-tangent law and the point at infinity as identity.

Elements are immutable :class:`Element` values that remember their group, so
mixing elements of different groups raises :class:`DescriptorMismatchError`.
Both backends are desk-scale: group orders and division problems are solved
by exhaustive enumeration under a configurable cap.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt
from typing import Any, Iterator, Union

from .errors import CapacityError, DescriptorMismatchError, InvalidGroupError

DEFAULT_CAP = 10**6

INFINITY = None


@dataclass(frozen=True)
class Element:
    group: "GroupDescriptor"
    value: Any

    def __add__(self, other: "Element") -> "Element":
        return add(self, other)

    def __sub__(self, other: "Element") -> "Element":
        return add(self, neg(other))

    def __neg__(self) -> "Element":
        return neg(self)

    def __rmul__(self, k: int) -> "Element":
        return scalar_mul(k, self)

    @property
    def is_identity(self) -> bool:
        return self == self.group.identity

    def sort_key(self):
        return self.group.sort_key(self.value)

    def __repr__(self) -> str:
        return f"Element({self.group.format_value(self.value)})"


@dataclass(frozen=True)
class CyclicGroup:
    n: int

    backend = "cyclic"

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise InvalidGroupError(f"cyclic group needs n >= 1, got {self.n!r}")

    @property
    def identity(self) -> Element:
        return Element(self, 0)

    def __call__(self, value: int) -> Element:
        if not isinstance(value, int) or isinstance(value, bool):
            raise InvalidGroupError(f"cyclic element must be an integer, got {value!r}")
        return Element(self, value % self.n)

    def contains(self, value) -> bool:
        return isinstance(value, int) and 0 <= value < self.n

    def order(self, cap: int = DEFAULT_CAP) -> int:
        return self.n

    def elements(self, cap: int = DEFAULT_CAP) -> Iterator[Element]:
        if self.n > cap:
            raise CapacityError(f"group order {self.n} exceeds enumeration cap {cap}")
        return (Element(self, v) for v in range(self.n))

    def _add(self, u, v):
        return (u + v) % self.n

    def _neg(self, u):
        return (-u) % self.n

    def sort_key(self, value):
        return (value,)

    def format_value(self, value) -> str:
        return str(value)

    def to_dict(self) -> dict:
        return {"backend": "cyclic", "n": self.n}


def _is_prime(p: int) -> bool:
    from sympy import isprime

    return bool(isprime(p))


@dataclass(frozen=True)
class WeierstrassCurve:
    p: int
    a: int
    b: int

    backend = "weierstrass"

    def __post_init__(self):
        if not isinstance(self.p, int) or self.p <= 3 or not _is_prime(self.p):
            raise InvalidGroupError(f"Weierstrass backend needs a prime p > 3, got {self.p!r}")
        object.__setattr__(self, "a", self.a % self.p)
        object.__setattr__(self, "b", self.b % self.p)
        if (4 * self.a**3 + 27 * self.b**2) % self.p == 0:
            raise InvalidGroupError(
                f"singular curve: 4a^3 + 27b^2 = 0 mod {self.p} (a={self.a}, b={self.b})"
            )

    @property
    def identity(self) -> Element:
        return Element(self, INFINITY)

    def on_curve(self, x: int, y: int) -> bool:
        p = self.p
        return (y * y - (x * x * x + self.a * x + self.b)) % p == 0

    def contains(self, value) -> bool:
        if value is INFINITY:
            return True
        if not (isinstance(value, tuple) and len(value) == 2):
            return False
        x, y = value
        return 0 <= x < self.p and 0 <= y < self.p and self.on_curve(x, y)

    def __call__(self, value) -> Element:
        if value is INFINITY or value == "inf":
            return self.identity
        try:
            x, y = value
        except (TypeError, ValueError):
            raise InvalidGroupError(f"Weierstrass element must be 'inf' or (x, y), got {value!r}")
        x, y = x % self.p, y % self.p
        if not self.on_curve(x, y):
            raise InvalidGroupError(f"({x}, {y}) is not on y^2 = x^3 + {self.a}x + {self.b} mod {self.p}")
        return Element(self, (x, y))

    def _hasse_bound(self) -> int:
        return self.p + 1 + 2 * isqrt(self.p) + 2

    def order(self, cap: int = DEFAULT_CAP) -> int:
        return len(self._points(cap))

    def elements(self, cap: int = DEFAULT_CAP) -> Iterator[Element]:
        return (Element(self, v) for v in self._points(cap))

    def _points(self, cap: int) -> tuple:
        if self._hasse_bound() > cap:
            raise CapacityError(
                f"curve over F_{self.p} may have up to {self._hasse_bound()} points, cap is {cap}"
            )
        return _curve_points(self.p, self.a, self.b)

    def _add(self, u, v):
        if u is INFINITY:
            return v
        if v is INFINITY:
            return u
        p = self.p
        x1, y1 = u
        x2, y2 = v
        if x1 == x2:
            if (y1 + y2) % p == 0:
                return INFINITY
            lam = (3 * x1 * x1 + self.a) * pow(2 * y1, -1, p) % p
        else:
            lam = (y2 - y1) * pow(x2 - x1, -1, p) % p
        x3 = (lam * lam - x1 - x2) % p
        y3 = (lam * (x1 - x3) - y1) % p
        return (x3, y3)

    def _neg(self, u):
        if u is INFINITY:
            return INFINITY
        x, y = u
        return (x, (-y) % self.p)

    def sort_key(self, value):
        return (0,) if value is INFINITY else (1, *value)

    def format_value(self, value) -> str:
        return "inf" if value is INFINITY else f"({value[0]}, {value[1]})"

    def to_dict(self) -> dict:
        return {"backend": "weierstrass", "p": self.p, "a": self.a, "b": self.b}


GroupDescriptor = Union[CyclicGroup, WeierstrassCurve]


@lru_cache(maxsize=64)
def _curve_points(p: int, a: int, b: int) -> tuple:
    roots: dict[int, list[int]] = {}
    for y in range(p):
        roots.setdefault(y * y % p, []).append(y)
    pts: list = [INFINITY]
    for x in range(p):
        for y in roots.get((x * x * x + a * x + b) % p, ()):
            pts.append((x, y))
    return tuple(pts)


def descriptor_from_dict(data: dict) -> GroupDescriptor:
    """Build a descriptor from ``{backend="cyclic", n=...}`` or ``{backend="weierstrass", p, a, b}``."""
    backend = data.get("backend")
    if backend == "cyclic":
        return CyclicGroup(data["n"])
    if backend == "weierstrass":
        return WeierstrassCurve(data["p"], data["a"], data["b"])
    raise InvalidGroupError(f"unknown backend {backend!r}")


def encode_element(g: Element):
    """JSON-friendly encoding: residue for cyclic, ``"inf"`` or ``[x, y]`` for Weierstrass."""
    if isinstance(g.group, CyclicGroup):
        return g.value
    return "inf" if g.value is INFINITY else [g.value[0], g.value[1]]


def decode_element(group: GroupDescriptor, data) -> Element:
    if isinstance(group, WeierstrassCurve) and isinstance(data, list):
        data = tuple(data)
    return group(data)


def _same_group(g: Element, h: Element) -> GroupDescriptor:
    if g.group != h.group:
        raise DescriptorMismatchError(f"elements of {g.group} and {h.group} cannot be combined")
    return g.group


def add(g: Element, h: Element) -> Element:
    group = _same_group(g, h)
    return Element(group, group._add(g.value, h.value))


def neg(g: Element) -> Element:
    return Element(g.group, g.group._neg(g.value))


def scalar_mul(k: int, g: Element) -> Element:
    """k-fold sum of g by double-and-add; negative and zero k allowed."""
    group = g.group
    if k < 0:
        k, g = -k, neg(g)
    acc = group.identity.value
    base = g.value
    while k:
        if k & 1:
            acc = group._add(acc, base)
        base = group._add(base, base)
        k >>= 1
    return Element(group, acc)


def element_order(g: Element, cap: int = DEFAULT_CAP) -> int:
    group = g.group
    if isinstance(group, CyclicGroup):
        return group.n // gcd(g.value, group.n)
    bound = group.order(cap)
    identity = group.identity.value
    acc = g.value
    for k in range(1, bound + 1):
        if acc == identity:
            return k
        acc = group._add(acc, g.value)
    raise AssertionError(f"no order found for {g} within group order {bound}")


def solve_division(k: int, c: Element, cap: int = DEFAULT_CAP) -> tuple[Element, ...]:
    """All x with ``k*x == c``, by exhaustive search, in canonical order.

    The tuple may be empty (no root in the finite group) or hold several roots.
    """
    if k < 1:
        raise ValueError(f"solve_division needs k >= 1, got {k}")
    group = c.group
    return tuple(x for x in group.elements(cap) if scalar_mul(k, x) == c)


def canonical_sorted(elements) -> list[Element]:
    return sorted(elements, key=Element.sort_key)
