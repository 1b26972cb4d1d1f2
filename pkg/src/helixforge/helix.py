"""Elliptic helices of line-bundle classes and their axioms.

A quadratic helix is generated by a degree-3 class L and a translation psi:
``L_i = (psi^i)^* L``.  A cubic helix is generated by two degree-2 classes
L0, L1 and a translation alpha with ``L_{2k} = (alpha^k)^* L0`` and
``L_{2k+1} = (alpha^k)^* L1``.  In both cases ``tau`` is the translation the
quadratic transforms are built from (``psi^3`` resp. ``alpha^2``).

Degenerate translations (tau the identity) are allowed by the types; the
validators flag them through the non-isomorphism axiom.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Optional, Sequence, Union

from .errors import WindowTooShortError
from .group_backend import Element, canonical_sorted, solve_division
from .picard import DivisorClass, Translation, h0, pullback


@dataclass(frozen=True)
class QuadraticHelixSpec:
    L: DivisorClass
    psi: Translation

    kind = "quadratic"

    def __post_init__(self):
        if self.L.degree != 3:
            raise ValueError(f"quadratic helix needs deg L = 3, got {self.L.degree}")
        if self.psi.group != self.L.group:
            raise ValueError("psi and L live on different curves")

    @property
    def group(self):
        return self.L.group

    @property
    def tau(self) -> Translation:
        return Translation(3 * self.psi.t)

    @property
    def is_degenerate(self) -> bool:
        return self.tau.t.is_identity


@dataclass(frozen=True)
class CubicHelixSpec:
    L0: DivisorClass
    L1: DivisorClass
    alpha: Translation

    kind = "cubic"

    def __post_init__(self):
        if self.L0.degree != 2 or self.L1.degree != 2:
            raise ValueError(f"cubic helix needs degree-2 generators, got {self.L0.degree}, {self.L1.degree}")
        if not (self.L0.group == self.L1.group == self.alpha.group):
            raise ValueError("L0, L1 and alpha live on different curves")

    @property
    def group(self):
        return self.L0.group

    @property
    def tau(self) -> Translation:
        return Translation(2 * self.alpha.t)

    @property
    def is_degenerate(self) -> bool:
        # alpha of order <= 2
        return self.tau.t.is_identity


HelixSpec = Union[QuadraticHelixSpec, CubicHelixSpec]


def helix_class(spec: HelixSpec, i: int) -> DivisorClass:
    if isinstance(spec, QuadraticHelixSpec):
        return pullback(spec.psi ** i, spec.L)
    base = spec.L0 if i % 2 == 0 else spec.L1
    return pullback(spec.alpha ** (i // 2), base)


def helix_window(spec: HelixSpec, lo: int, hi: int) -> list[DivisorClass]:
    """Classes ``L_lo, ..., L_hi`` (inclusive)."""
    return [helix_class(spec, i) for i in range(lo, hi + 1)]


def thcr_dim(spec: HelixSpec, i: int, j: int) -> int:
    """Dimension of ``Gamma(Y, L_i x ... x L_{j-1})``."""
    if i > j:
        return 0
    if i == j:
        return 1
    total = helix_class(spec, i)
    for k in range(i + 1, j):
        total = total + helix_class(spec, k)
    return h0(total)


class AxiomCheck(NamedTuple):
    name: str
    passed: bool
    detail: str = ""


@dataclass
class HelixReport:
    kind: str
    start: int
    checks: list[AxiomCheck] = field(default_factory=list)
    roots: tuple[Element, ...] = ()

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failed(self) -> list[str]:
        return [c.name for c in self.checks if not c.passed]

    def check(self, name: str) -> AxiomCheck:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


def _degree_check(classes, start, want) -> AxiomCheck:
    bad = [start + k for k, c in enumerate(classes) if c.degree != want]
    return AxiomCheck("degree", not bad, f"indices with degree != {want}: {bad}" if bad else "")


def validate_quadratic_helix(
    classes: Sequence[DivisorClass], start: int = 0, check_shift: bool = False
) -> HelixReport:
    """Check the quadratic helix axioms on ``classes = (G_start, G_start+1, ...)``.

    With ``check_shift`` the report also asks for a translation psi with
    ``psi^* G_i = G_{i+1}`` along the whole window; ``report.roots`` lists every
    candidate for ``3 t_psi`` solving the first step.
    """
    if len(classes) < 3:
        raise WindowTooShortError(f"quadratic helix window needs >= 3 classes, got {len(classes)}")
    report = HelixReport("quadratic", start)
    report.checks.append(_degree_check(classes, start, 3))
    report.checks.append(AxiomCheck("G0_not_G1", classes[0] != classes[1], f"G{start} = {classes[0]!r}, G{start + 1} = {classes[1]!r}"))
    bad = [
        start + k
        for k in range(len(classes) - 2)
        if not (classes[k] - 2 * classes[k + 1] + classes[k + 2]).is_trivial
    ]
    report.checks.append(AxiomCheck("second_difference", not bad, f"nontrivial at {bad}" if bad else ""))
    if check_shift:
        report.roots = solve_division(3, classes[0].sum - classes[1].sum)
        report.checks.append(_shift_check("psi_shift", report.roots, classes, 1, 3, start))
    return report


def validate_cubic_helix(
    classes: Sequence[DivisorClass], alpha: Optional[Translation] = None, start: int = 0
) -> HelixReport:
    """Check the four cubic helix axioms on ``classes = (G_start, G_start+1, ...)``.

    If ``alpha`` is omitted every solution of ``2 t = s(G_0) - s(G_2)`` is a
    candidate (listed in ``report.roots``) and the first one is tested; an empty
    solution set is recorded as a failure of the alpha-shift axiom.
    """
    if len(classes) < 4:
        raise WindowTooShortError(f"cubic helix window needs >= 4 classes, got {len(classes)}")
    report = HelixReport("cubic", start)
    report.checks.append(_degree_check(classes, start, 2))
    report.checks.append(AxiomCheck("G0_not_G2", classes[0] != classes[2], f"G{start} = {classes[0]!r}, G{start + 2} = {classes[2]!r}"))
    bad = [
        start + k
        for k in range(len(classes) - 3)
        if not (classes[k] - classes[k + 1] - classes[k + 2] + classes[k + 3]).is_trivial
    ]
    report.checks.append(AxiomCheck("alternating_sum", not bad, f"nontrivial at {bad}" if bad else ""))
    if alpha is not None:
        report.roots = (alpha.t,)
    else:
        report.roots = solve_division(2, classes[0].sum - classes[2].sum)
    report.checks.append(_shift_check("alpha_shift", report.roots, classes, 2, 2, start))
    return report


def _shift_check(name, roots, classes, step, degree, start) -> AxiomCheck:
    if not roots:
        return AxiomCheck(name, False, "no translation with the required multiple exists in this group")
    tr = Translation(canonical_sorted(roots)[0])
    bad = [start + k for k in range(len(classes) - step) if pullback(tr, classes[k]) != classes[k + step]]
    return AxiomCheck(name, not bad, f"pullback mismatch at {bad}" if bad else "")
