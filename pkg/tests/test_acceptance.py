"""Acceptance gate: one test per criterion, each timed against its bound.

Every test prints a single ``PASS criterion N`` or ``FAIL criterion N`` line
(visible with ``pytest -s`` or in the ``-v`` log via ``capsys.disabled``).
"""

import random
import time
from collections import Counter

import pytest

from helixforge.group_backend import CyclicGroup, WeierstrassCurve
from helixforge.helix import validate_cubic_helix, validate_quadratic_helix
from helixforge.hilbert_grid import (
    HostKind,
    PathStep,
    colength,
    compose_path,
    conserved_quantity,
    grid_dim,
    h_cub,
    h_quad,
)
from helixforge.ibasis import closed_form_count, count_admissible, dim_M, dim_M_closed_form
from helixforge.instances import (
    CURVES,
    one_periodic_blow_up,
    random_blow_down_spec,
    random_blow_up_spec,
    random_cremona_spec,
    random_cyclic,
    psi_candidates,
    alpha_candidates,
)
from helixforge.transforms import (
    blow_down,
    blow_up,
    blow_up_class,
    cremona_factor,
    is_one_periodic,
    section_triviality_check,
    sigma_translations,
    verify_roundtrip,
)
from oracles import count_admissible_monomials

WINDOW = (-10, 10)
SMALL_CURVE = WeierstrassCurve(11, 1, 6)
OTHER_CURVES = [c for c in CURVES if c != SMALL_CURVE]


def _verdict(capsys, n, ok, elapsed, bound, detail):
    status = "PASS" if ok else "FAIL"
    limit = f" (bound {bound} s)" if bound is not None else ""
    with capsys.disabled():
        print(f"\n{status} criterion {n}: {detail}; {elapsed:.3f} s{limit}")
    assert ok, detail
    if bound is not None:
        assert elapsed < bound, f"criterion {n} took {elapsed:.3f} s, bound {bound} s"


def _cyclic_for(rng, purpose):
    while True:
        g = random_cyclic(rng)
        if purpose == "blowup" and psi_candidates(g, 2, True):
            return g
        if purpose == "blowdown" and alpha_candidates(g, True):
            return g
        if purpose == "cremona" and psi_candidates(g, 3, True):
            return g


def _groups(rng, purpose, count):
    """Half cyclic, half curves; the order-13 curve only carries blow-downs."""
    curves = OTHER_CURVES + ([SMALL_CURVE] if purpose == "blowdown" else [])
    out = []
    for k in range(count):
        out.append(_cyclic_for(rng, purpose) if k % 2 == 0 else curves[(k // 2) % len(curves)])
    return out


@pytest.fixture(scope="module")
def roundtrip_instances():
    rng = random.Random(20240601)
    ups = [random_blow_up_spec(rng, g) for g in _groups(rng, "blowup", 200)]
    downs = [random_blow_down_spec(rng, g) for g in _groups(rng, "blowdown", 200)]
    return ups, downs


def _backend_label(group):
    if isinstance(group, CyclicGroup):
        return "cyclic"
    return f"curve({group.p},{group.a},{group.b})"


def test_criterion_1_hilbert_identity(capsys):
    t0 = time.perf_counter()
    bad = [i for i in range(201) if h_quad(i) - colength(i) != h_cub(i)]
    spot = (h_quad(2) - colength(2), h_quad(3) - colength(3)) == (4, 6)
    elapsed = time.perf_counter() - t0
    _verdict(capsys, 1, not bad and spot, elapsed, 1.0, f"0 <= i <= 200, mismatches {bad}")


def test_criterion_2_counting_identity(capsys):
    t0 = time.perf_counter()
    bad, cells = [], 0
    for a in range(-12, -1):
        for b in range(0, 41):
            if a + b < 0:
                continue
            cells += 1
            brute, closed = count_admissible(a, b), closed_form_count(a, b)
            if not brute == closed == h_cub(2 * a + b):
                bad.append((a, b))
            if 2 * a + b < 0 and brute != 0:
                bad.append((a, b, "nonzero"))
    elapsed = time.perf_counter() - t0
    _verdict(capsys, 2, not bad, elapsed, 5.0, f"{cells} cells, mismatches {bad}")


def test_criterion_3_dim_M(capsys):
    t0 = time.perf_counter()
    bad, cells = [], 0
    for h in range(0, 21):
        for n in range(max(h - 1, 0), 61):
            cells += 1
            brute = count_admissible_monomials(n, h)
            if not dim_M_closed_form(n, h) == dim_M(n, h) == brute:
                bad.append((n, h))
    elapsed = time.perf_counter() - t0
    _verdict(capsys, 3, not bad, elapsed, 10.0, f"{cells} (n, h) pairs, mismatches {bad}")


def test_criterion_4_roundtrip(capsys, roundtrip_instances):
    t0 = time.perf_counter()
    ups, downs = roundtrip_instances
    failures = []
    for spec in ups + downs:
        report = verify_roundtrip(spec, WINDOW)
        if not report.matches:
            failures.append(report.to_dict())
    elapsed = time.perf_counter() - t0
    up_backends = Counter(_backend_label(s.host.group) for s in ups)
    down_backends = Counter(_backend_label(s.host.group) for s in downs)
    curves_used = {k for k in up_backends | down_backends if k != "cyclic"}
    coverage = (
        up_backends["cyclic"] > 0
        and down_backends["cyclic"] > 0
        and "curve(11,1,6)" in curves_used
        and len(curves_used) >= 3
    )
    _verdict(
        capsys,
        4,
        not failures and coverage and len(ups) >= 200 and len(downs) >= 200,
        elapsed,
        10.0,
        f"{len(ups)} blow-up / {len(downs)} blow-down starts over {sorted(up_backends | down_backends)}, "
        f"{len(failures)} mismatches",
    )


def test_criterion_5_cremona(capsys):
    t0 = time.perf_counter()
    rng = random.Random(5)
    groups = [_cyclic_for(rng, "cremona") if k % 2 == 0 else OTHER_CURVES[k % 3] for k in range(100)]
    failures = []
    for g in groups:
        fac = cremona_factor(random_cremona_spec(rng, g), WINDOW)
        if not fac.ok:
            failures.append(fac.mismatches)
    elapsed = time.perf_counter() - t0
    _verdict(capsys, 5, not failures, elapsed, 5.0, f"{len(groups)} Cremona instances, {len(failures)} mismatches")


def test_criterion_6_helix_axioms(capsys):
    t0 = time.perf_counter()
    rng = random.Random(6)
    window = (-20, 20)
    failures = []
    for g in _groups(rng, "blowup", 100):
        result = blow_up(random_blow_up_spec(rng, g), window)
        report = validate_cubic_helix(result.window(), alpha=result.helix.alpha, start=window[0])
        if not report.ok or len(report.checks) != 4:
            failures.append(("blow_up", report.failed()))
    for g in _groups(rng, "blowdown", 100):
        result = blow_down(random_blow_down_spec(rng, g), window)
        report = validate_quadratic_helix(result.window(), start=window[0], check_shift=True)
        if not report.ok or report.check("psi_shift") is None:
            failures.append(("blow_down", report.failed()))
    elapsed = time.perf_counter() - t0
    _verdict(capsys, 6, not failures, elapsed, None, f"100 blow-up + 100 blow-down outputs on [-20, 20], failures {failures[:3]}")


def test_criterion_7_section_triviality(capsys, roundtrip_instances):
    t0 = time.perf_counter()
    ups, downs = roundtrip_instances
    failures, cells = [], 0
    for spec in ups + downs:
        report = section_triviality_check(spec, WINDOW)
        cells += report.cells
        if not report.ok:
            failures.append(report.failures[:3])
    elapsed = time.perf_counter() - t0
    _verdict(
        capsys,
        7,
        not failures and cells == 441 * (len(ups) + len(downs)),
        elapsed,
        None,
        f"{cells} cells over {len(ups) + len(downs)} instances, {len(failures)} failing instances",
    )


def test_criterion_8_grid(capsys):
    t0 = time.perf_counter()
    Q, C = HostKind.QUADRATIC, HostKind.CUBIC
    slots = [grid_dim(Q, -1, 2), grid_dim(Q, 1, -1), grid_dim(C, -1, 1), grid_dim(C, 2, -1)]
    overlap_bad = [
        b
        for b in range(0, 51)
        if not (grid_dim(Q, 0, b) == grid_dim(Q, -1, b + 2) == h_cub(b) and grid_dim(C, 0, b) == h_quad(b))
    ]
    rng = random.Random(8)
    path_bad = 0
    for host in (Q, C):
        for _ in range(1000):
            pos = (rng.randint(-40, 40), rng.randint(-40, 40))
            for _ in range(rng.randint(1, 30)):
                step = rng.choice(list(PathStep))
                nxt = compose_path(host, pos, [step])
                if conserved_quantity(host, step, pos) != conserved_quantity(host, step, nxt):
                    path_bad += 1
                pos = nxt
    elapsed = time.perf_counter() - t0
    ok = slots == [1, 1, 1, 1] and not overlap_bad and not path_bad
    _verdict(capsys, 8, ok, elapsed, None, f"slots {slots}, overlap failures {overlap_bad}, path failures {path_bad}")


def test_criterion_9_one_periodicity(capsys):
    t0 = time.perf_counter()
    rng = random.Random(9)
    window = range(-10, 11)
    periodic_bad, generic_bad, generic_count = [], [], 0
    # in an odd-order group every sigma lies in the tau-orbit, so the
    # sigma-compatible instances come from even-order cyclic groups
    for _ in range(40):
        spec = one_periodic_blow_up(rng, CyclicGroup(2 * rng.randint(7, 500)))
        if not is_one_periodic([blow_up_class(spec.host, spec.p, spec.q, i) for i in window]):
            periodic_bad.append(spec)
    while generic_count < 40:
        g = _cyclic_for(rng, "blowup") if generic_count % 2 else OTHER_CURVES[generic_count % 3]
        spec = random_blow_up_spec(rng, g)
        if spec.q - spec.p in sigma_translations(spec.host):
            continue
        generic_count += 1
        if is_one_periodic([blow_up_class(spec.host, spec.p, spec.q, i) for i in window]):
            generic_bad.append(spec)
    elapsed = time.perf_counter() - t0
    _verdict(
        capsys,
        9,
        not periodic_bad and not generic_bad,
        elapsed,
        None,
        f"40 sigma-compatible (non-constant: {len(periodic_bad)}), "
        f"{generic_count} generic (constant: {len(generic_bad)})",
    )
