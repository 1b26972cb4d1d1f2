"""Command dispatch: every command turns a RunConfig into a Report."""

from __future__ import annotations

import random
import time

from . import __version__
from .errors import HelixforgeError
from .group_backend import Element, encode_element
from .helix import (
    CubicHelixSpec,
    QuadraticHelixSpec,
    helix_window,
    validate_cubic_helix,
    validate_quadratic_helix,
)
from .hilbert_grid import (
    Conjectural,
    HostKind,
    PathStep,
    colength,
    compose_path,
    grid_dim,
    h_cub,
    h_quad,
    inner_witness_slot,
)
from .ibasis import closed_form_count, count_admissible, dim_M, dim_M_closed_form
from .instances import random_blow_down_spec, random_blow_up_spec, alpha_candidates, psi_candidates
from .picard import DivisorClass
from .reports import Report
from .transforms import (
    BlowDownSpec,
    BlowUpSpec,
    CremonaSpec,
    blow_down,
    blow_down_class,
    blow_up,
    blow_up_class,
    brute_force_inverse_blow_down,
    brute_force_inverse_blow_up,
    cremona_factor,
    invert_blow_down,
    invert_blow_up,
    section_triviality_check,
    verify_roundtrip,
)


def jsonable(obj):
    """Convert elements, classes and containers into plain JSON values."""
    if isinstance(obj, Element):
        return encode_element(obj)
    if isinstance(obj, DivisorClass):
        return obj.to_dict()
    if isinstance(obj, Conjectural):
        return {"conjectural": obj.value}
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    return obj


def _classes(classes: dict) -> list:
    return [{"i": i, "class": classes[i].to_dict()} for i in sorted(classes)]


def _axioms(report: Report, prefix: str, helix_report):
    for check in helix_report.checks:
        report.add(f"{prefix}.{check.name}", "pass" if check.passed else "fail", check.detail or None)


def _cmd_verify_helix(cfg, report):
    geo = cfg.geometry
    lo, hi = cfg.windows["helix"]
    classes = helix_window(geo, lo, hi)
    if isinstance(geo, QuadraticHelixSpec):
        res = validate_quadratic_helix(classes, start=lo, check_shift=True)
    else:
        res = validate_cubic_helix(classes, alpha=geo.alpha, start=lo)
    _axioms(report, "helix", res)


def _cmd_blowup(cfg, report):
    spec = BlowUpSpec(cfg.geometry, cfg.points["p"], cfg.points["q"])
    window = cfg.windows["helix"]
    classes = {i: blow_up_class(spec.host, spec.p, spec.q, i) for i in range(window[0], window[1] + 1)}
    res = validate_cubic_helix([classes[i] for i in sorted(classes)], start=window[0])
    report.add("blowup.classes", "pass", _classes(classes))
    _axioms(report, "blowup.axiom", res)
    try:
        up = blow_up(spec, window)
        report.add("blowup.alpha_root", "pass", {"roots": jsonable(up.alpha_roots)})
    except HelixforgeError as exc:
        report.add("blowup.alpha_root", "error", f"{type(exc).__name__}: {exc}")


def _cmd_blowdown(cfg, report):
    spec = BlowDownSpec(cfg.geometry, cfg.points["p"])
    window = cfg.windows["helix"]
    classes = {i: blow_down_class(spec.host, spec.p, i) for i in range(window[0], window[1] + 1)}
    report.add("blowdown.classes", "pass", _classes(classes))
    res = validate_quadratic_helix([classes[i] for i in sorted(classes)], start=window[0], check_shift=True)
    _axioms(report, "blowdown.axiom", res)
    try:
        down = blow_down(spec, window)
        report.add("blowdown.psi_root", "pass", {"roots": jsonable(down.psi_roots)})
    except HelixforgeError as exc:
        report.add("blowdown.psi_root", "error", f"{type(exc).__name__}: {exc}")


def _cmd_cremona(cfg, report):
    pts = cfg.points
    spec = CremonaSpec(cfg.geometry, pts["p"], pts["q"], pts["r"])
    fac = cremona_factor(spec, cfg.windows["helix"])
    report.add(
        "cremona.factorization",
        "pass" if fac.ok else "fail",
        {
            "blow_up_points": jsonable([spec.p, spec.q]),
            "blow_down_point": jsonable(spec.r),
            "target_L": fac.target.L.to_dict(),
            "mismatches": jsonable(fac.mismatches),
        },
    )
    report.add("cremona.classes", "pass", _classes(fac.direct))


def _cmd_invert(cfg, report):
    geo = cfg.geometry
    if isinstance(geo, QuadraticHelixSpec):
        spec = BlowUpSpec(geo, cfg.points["p"], cfg.points["q"])
        brute = brute_force_inverse_blow_up(geo, spec.p, spec.q)
        inv = invert_blow_up(spec)
        agree = brute == (inv.p,)
        report.add(
            "invert.blowup",
            "pass" if agree else "fail",
            {"p_prime": encode_element(inv.p), "brute_force": jsonable(brute), "cubic_host": _cubic_dict(inv.host)},
        )
    else:
        spec = BlowDownSpec(geo, cfg.points["p"])
        bp, bq = brute_force_inverse_blow_down(geo, spec.p)
        inv = invert_blow_down(spec)
        agree = bp == (inv.p,) and bq == (inv.q,)
        report.add(
            "invert.blowdown",
            "pass" if agree else "fail",
            {
                "p_prime": encode_element(inv.p),
                "q_prime": encode_element(inv.q),
                "brute_force": jsonable([bp, bq]),
                "quadratic_host": {"L": inv.host.L.to_dict(), "psi": encode_element(inv.host.psi.t)},
            },
        )


def _cubic_dict(h: CubicHelixSpec) -> dict:
    return {"L0": h.L0.to_dict(), "L1": h.L1.to_dict(), "alpha": encode_element(h.alpha.t)}


def _cmd_roundtrip(cfg, report):
    geo = cfg.geometry
    if isinstance(geo, QuadraticHelixSpec):
        spec = BlowUpSpec(geo, cfg.points["p"], cfg.points["q"])
    else:
        spec = BlowDownSpec(geo, cfg.points["p"])
    rt = verify_roundtrip(spec, cfg.windows["helix"])
    report.add("roundtrip.matches", "pass" if rt.matches else "fail", rt.to_dict())
    tr = section_triviality_check(spec, cfg.windows["triviality"])
    report.add(
        "roundtrip.section_triviality",
        "pass" if tr.ok else "fail",
        {"cells": tr.cells, "failures": jsonable(tr.failures)},
    )
    if cfg.random_instances:
        _random_roundtrips(cfg, report)


def _random_roundtrips(cfg, report):
    rng = random.Random(cfg.seed)
    group = cfg.group
    suites = []
    if psi_candidates(group, 2, True):
        suites.append(("blowup", random_blow_up_spec))
    if alpha_candidates(group, True):
        suites.append(("blowdown", random_blow_down_spec))
    if not suites:
        report.add("roundtrip.random", "error", f"{group} admits no valid random instances")
        return
    for name, gen in suites:
        failures = []
        for k in range(cfg.random_instances):
            spec = gen(rng, group)
            rt = verify_roundtrip(spec, cfg.windows["helix"])
            tr = section_triviality_check(spec, cfg.windows["triviality"])
            if not (rt.matches and tr.ok):
                failures.append(k)
        report.add(
            f"roundtrip.random.{name}",
            "pass" if not failures else "fail",
            {"instances": cfg.random_instances, "seed": cfg.seed, "failures": failures},
        )


def _cmd_dims(cfg, report):
    lo, hi = cfg.windows["dims"]
    rows, bad = [], []
    for i in range(lo, hi + 1):
        diff = h_quad(i) - colength(i)
        rows.append({"i": i, "h": h_quad(i), "colength": colength(i), "h_minus_colength": diff, "h_prime": h_cub(i)})
        if diff != h_cub(i):
            bad.append(i)
    report.add("dims.identity", "pass" if not bad else "fail", {"mismatches": bad})
    report.add("dims.table", "pass", rows)


def _cmd_grid(cfg, report):
    host = HostKind.parse(cfg.grid["host"])
    cells = list(cfg.grid["cells"])
    explicit = set(cells)
    alo, ahi = cfg.grid["a"]
    blo, bhi = cfg.grid["b"]
    if not cells:
        cells = [(a, b) for a in range(alo, ahi + 1) for b in range(blo, bhi + 1)]
    skipped = []
    for a, b in cells:
        name = f"grid.{host.value}.a={a:+d}.b={b:+d}"
        try:
            value = grid_dim(host, a, b)
        except HelixforgeError as exc:
            if (a, b) in explicit:
                report.add(name, "error", str(exc))
            else:
                skipped.append([a, b])
            continue
        if isinstance(value, Conjectural):
            report.add(name, "conjectural", {"value": value.value})
        else:
            report.add(name, "pass", {"value": value})
    if skipped:
        report.add(f"grid.{host.value}.not_specified", "pass", {"skipped_cells": skipped})

    slots = [
        (HostKind.QUADRATIC, -1, 2),
        (HostKind.QUADRATIC, 1, -1),
        (HostKind.CUBIC, -1, 1),
        (HostKind.CUBIC, 2, -1),
    ]
    values = [grid_dim(h, a, b) for h, a, b in slots]
    report.add("grid.check.one_dimensional_slots", "pass" if values == [1, 1, 1, 1] else "fail", values)

    overlap = [b for b in range(0, 51) if grid_dim(HostKind.QUADRATIC, 0, b) != h_cub(b + 0)]
    overlap += [b for b in range(0, 51) if grid_dim(HostKind.QUADRATIC, 0, b) != grid_dim(HostKind.QUADRATIC, -1, b + 2)]
    report.add("grid.check.clause_overlap", "pass" if not overlap else "fail", {"b_range": [0, 50], "failures": overlap})

    rng = random.Random(cfg.seed)
    broken = 0
    for _ in range(cfg.grid["paths"]):
        start = (rng.randint(-20, 20), rng.randint(-20, 20))
        steps = [rng.choice((PathStep.DELTA, PathStep.GAMMA)) for _ in range(rng.randint(0, 30))]
        try:
            compose_path(host, start, steps)
        except AssertionError:
            broken += 1
    report.add("grid.check.path_conservation", "pass" if not broken else "fail", {"paths": cfg.grid["paths"], "broken": broken})
    report.add("grid.inner_witness_slots", "pass", {str(i): list(inner_witness_slot(host, i)) for i in range(-3, 4)})


def _cmd_ibasis(cfg, report):
    ib = cfg.ibasis
    matrix, failures = [], []
    for a in range(ib["a"][0], ib["a"][1] + 1):
        row = []
        for b in range(ib["b"][0], ib["b"][1] + 1):
            if a + b > ib["n_max"]:
                row.append(None)
                continue
            brute = count_admissible(a, b, max_degree=cfg.caps["degree"])
            expected = h_cub(2 * a + b)
            ok = brute == expected
            if a <= 0:
                ok = ok and closed_form_count(a, b) == brute
            row.append("pass" if ok else "fail")
            if not ok:
                failures.append([a, b])
        matrix.append({"a": a, "b": list(range(ib["b"][0], ib["b"][1] + 1)), "status": row})
    report.add("ibasis.counting", "pass" if not failures else "fail", {"matrix": matrix, "failures": failures})

    dfail = []
    checked = 0
    for h in range(ib["h"][0], ib["h"][1] + 1):
        for n in range(max(h - 1, 0), ib["n_max"] + 1):
            checked += 1
            if dim_M(n, h, max_degree=cfg.caps["degree"], check=False) != dim_M_closed_form(n, h):
                dfail.append([n, h])
    report.add("ibasis.dim_M", "pass" if not dfail else "fail", {"cases": checked, "failures": dfail})


_DISPATCH = {
    "verify-helix": _cmd_verify_helix,
    "blowup": _cmd_blowup,
    "blowdown": _cmd_blowdown,
    "cremona": _cmd_cremona,
    "invert": _cmd_invert,
    "roundtrip": _cmd_roundtrip,
    "dims": _cmd_dims,
    "grid": _cmd_grid,
    "ibasis-check": _cmd_ibasis,
}


def run_command(command: str, cfg, timing: bool = True) -> Report:
    """Run ``command``; module errors become ``error`` checks instead of exceptions."""
    if command not in _DISPATCH:
        raise ValueError(f"unknown command {command!r}")
    report = Report(command, cfg.to_dict(), version=__version__)
    start = time.perf_counter()
    try:
        _DISPATCH[command](cfg, report)
    except (HelixforgeError, ValueError, KeyError, AssertionError) as exc:
        report.add(f"{command}.error", "error", f"{type(exc).__name__}: {exc}")
    report.timing_ms = round((time.perf_counter() - start) * 1000, 3) if timing else None
    return report
