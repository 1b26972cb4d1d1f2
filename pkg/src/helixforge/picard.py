"""Divisor classes on the curve, kept as (degree, Abel-Jacobi sum) pairs.

On an elliptic curve two divisors are linearly equivalent exactly when their
degrees agree and their points add up to the same group element, so every
class comparison below is a plain equality of pairs.

Sign convention: pulling back along the translation ``y -> y + t`` sends
``O(q)`` to ``O(q - t)``, hence ``pullback(t, (d, s)) = (d, s - d*t)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidEmbeddingError
from .group_backend import Element, element_order, encode_element, decode_element, GroupDescriptor


@dataclass(frozen=True)
class DivisorClass:
    degree: int
    sum: Element

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(self.degree + other.degree, self.sum + other.sum)

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(self.degree - other.degree, self.sum - other.sum)

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(-self.degree, -self.sum)

    def __rmul__(self, k: int) -> "DivisorClass":
        return DivisorClass(k * self.degree, k * self.sum)

    @property
    def group(self) -> GroupDescriptor:
        return self.sum.group

    @property
    def is_trivial(self) -> bool:
        return self.degree == 0 and self.sum.is_identity

    def to_dict(self) -> dict:
        return {"degree": self.degree, "sum": encode_element(self.sum)}

    @classmethod
    def from_dict(cls, group: GroupDescriptor, data: dict) -> "DivisorClass":
        return cls(int(data["degree"]), decode_element(group, data["sum"]))

    def __repr__(self) -> str:
        return f"({self.degree}, {self.group.format_value(self.sum.value)})"


@dataclass(frozen=True)
class Translation:
    """The automorphism ``y -> y + t`` of the curve."""

    t: Element

    @property
    def group(self) -> GroupDescriptor:
        return self.t.group

    def order(self) -> int:
        return element_order(self.t)

    def __pow__(self, k: int) -> "Translation":
        return Translation(k * self.t)


def trivial_class(group: GroupDescriptor) -> DivisorClass:
    return DivisorClass(0, group.identity)


def class_add(c1: DivisorClass, c2: DivisorClass) -> DivisorClass:
    return c1 + c2


def class_sub(c1: DivisorClass, c2: DivisorClass) -> DivisorClass:
    return c1 - c2


def point_class(p: Element) -> DivisorClass:
    return DivisorClass(1, p)


def apply_translation(tr: Translation, k: int, p: Element) -> Element:
    """``tau^k`` applied to a point: ``p + k*t``."""
    return p + k * tr.t


def pullback(tr: Translation, c: DivisorClass) -> DivisorClass:
    return DivisorClass(c.degree, c.sum - c.degree * tr.t)


def n_class(tr: Translation) -> DivisorClass:
    """Degree-zero class N with ``pullback(tr, M) == M + deg(M) * N`` for every M."""
    return DivisorClass(0, -tr.t)


def h0(c: DivisorClass) -> int:
    """Riemann-Roch on a genus-one curve."""
    if c.degree > 0:
        return c.degree
    if c.degree == 0:
        return 1 if c.sum.is_identity else 0
    return 0


def collinear(p: Element, q: Element, r: Element, L: DivisorClass) -> bool:
    """Whether p, q, r lie on a line of the plane embedding given by the degree-3 class L."""
    if L.degree != 3:
        raise InvalidEmbeddingError(f"collinearity needs a degree-3 embedding class, got degree {L.degree}")
    return point_class(p) + point_class(q) + point_class(r) == L


def same_tau_orbit(p: Element, q: Element, tau: Translation) -> bool:
    """Whether ``p - q`` lies in the cyclic subgroup generated by tau."""
    diff = p - q
    step = tau.t
    acc = step.group.identity
    for _ in range(element_order(step)):
        if acc == diff:
            return True
        acc = acc + step
    return False
