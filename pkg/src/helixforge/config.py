"""TOML run configuration.

Layout (every table except ``[group]`` is optional)::

    seed = 0

    [group]
    backend = "cyclic"          # or "weierstrass" with p, a, b
    n = 30

    [geometry]
    kind = "quadratic"          # L = {degree = 3, sum = ...}, psi = ...
    L = {degree = 3, sum = 0}   # cubic: L0, L1 (degree 2) and alpha
    psi = 2

    [points]
    p = 2
    q = 5
    r = 9

    [windows]
    helix = [-10, 10]
    triviality = [-10, 10]
    dims = [0, 200]

    [caps]
    enumeration = 1000000
    degree = 60

    [random]
    instances = 0

    [grid]
    host = "cubic"
    a = [-3, 3]
    b = [-3, 8]
    cells = [[-3, 8]]           # optional explicit cells
    paths = 1000

    [ibasis]
    a = [-12, -2]
    b = [0, 40]
    h = [0, 20]
    n_max = 60

Group elements are written as integers (cyclic) or as ``"inf"`` / ``[x, y]``
(Weierstrass).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Optional

try:
    import tomllib
except ImportError:  # Python < 3.11
    import tomli as tomllib

from .errors import ConfigError, HelixforgeError
from .group_backend import DEFAULT_CAP, decode_element, descriptor_from_dict, encode_element
from .helix import CubicHelixSpec, QuadraticHelixSpec
from .hilbert_grid import HostKind
from .ibasis import DEFAULT_MAX_DEGREE
from .picard import DivisorClass, Translation, collinear, same_tau_orbit

COMMANDS = ("verify-helix", "blowup", "blowdown", "cremona", "invert", "roundtrip", "dims", "grid", "ibasis-check")

DEFAULT_WINDOWS = {"helix": (-10, 10), "triviality": (-10, 10), "dims": (0, 200)}
DEFAULT_GRID = {"host": "quadratic", "a": (-3, 3), "b": (-3, 8), "cells": (), "paths": 1000}
DEFAULT_IBASIS = {"a": (-12, -2), "b": (0, 40), "h": (0, 20), "n_max": 60}

_TOP_LEVEL = {"seed", "group", "geometry", "points", "windows", "caps", "random", "grid", "ibasis"}


@dataclass
class RunConfig:
    group: object
    geometry: Optional[object] = None
    points: dict = field(default_factory=dict)
    windows: dict = field(default_factory=lambda: dict(DEFAULT_WINDOWS))
    seed: int = 0
    caps: dict = field(default_factory=lambda: {"enumeration": DEFAULT_CAP, "degree": DEFAULT_MAX_DEGREE})
    random_instances: int = 0
    grid: dict = field(default_factory=lambda: dict(DEFAULT_GRID))
    ibasis: dict = field(default_factory=lambda: dict(DEFAULT_IBASIS))

    def to_dict(self) -> dict:
        """Normalised echo of the configuration, with defaults filled in."""
        geo = None
        if isinstance(self.geometry, QuadraticHelixSpec):
            geo = {"kind": "quadratic", "L": self.geometry.L.to_dict(), "psi": encode_element(self.geometry.psi.t)}
        elif isinstance(self.geometry, CubicHelixSpec):
            g = self.geometry
            geo = {"kind": "cubic", "L0": g.L0.to_dict(), "L1": g.L1.to_dict(), "alpha": encode_element(g.alpha.t)}
        return {
            "group": self.group.to_dict(),
            "geometry": geo,
            "points": {k: encode_element(v) for k, v in sorted(self.points.items())},
            "windows": {k: list(v) for k, v in sorted(self.windows.items())},
            "seed": self.seed,
            "caps": dict(sorted(self.caps.items())),
            "random": {"instances": self.random_instances},
            "grid": {
                "host": self.grid["host"],
                "a": list(self.grid["a"]),
                "b": list(self.grid["b"]),
                "cells": [list(c) for c in self.grid["cells"]],
                "paths": self.grid["paths"],
            },
            "ibasis": {k: (list(v) if isinstance(v, tuple) else v) for k, v in sorted(self.ibasis.items())},
        }


def _locate(text: str, section: Optional[str], key: Optional[str] = None) -> Optional[int]:
    """1-based line of ``key`` inside ``[section]`` (or of the header itself)."""
    current = None
    header = re.compile(r"^\s*\[\s*([A-Za-z0-9_.-]+)\s*\]")
    for lineno, line in enumerate(text.splitlines(), 1):
        m = header.match(line)
        if m:
            current = m.group(1)
            if key is None and current == section:
                return lineno
            continue
        if key is not None and current == section and re.match(rf"^\s*{re.escape(key)}\s*=", line):
            return lineno
    return None


class _Ctx:
    def __init__(self, text):
        self.text = text

    def fail(self, message, section=None, key=None, rule=None):
        line = _locate(self.text, section, key) if (section or key) else None
        if line is None and section is not None:
            line = _locate(self.text, section)
        raise ConfigError(message, line=line, rule=rule)


def _window(ctx, value, section, key):
    if not (isinstance(value, list) and len(value) == 2 and all(isinstance(v, int) and not isinstance(v, bool) for v in value)):
        ctx.fail(f"{section}.{key} must be a two-integer list [lo, hi]", section, key, rule="window")
    lo, hi = value
    if lo > hi:
        ctx.fail(f"{section}.{key} has lo > hi ({lo} > {hi})", section, key, rule="window")
    return (lo, hi)


def _element(ctx, group, value, section, key):
    try:
        return decode_element(group, value)
    except HelixforgeError as exc:
        ctx.fail(f"{section}.{key}: {exc}", section, key, rule="point-on-curve")


def _class(ctx, group, value, section, key, degree):
    if not (isinstance(value, dict) and "degree" in value and "sum" in value):
        ctx.fail(f"{section}.{key} must be a table {{degree, sum}}", section, key, rule="class")
    if value["degree"] != degree:
        ctx.fail(f"{section}.{key} must have degree {degree}, got {value['degree']}", section, key, rule="class-degree")
    return DivisorClass(degree, _element(ctx, group, value["sum"], section, key))


def parse_config(text: str, command: Optional[str] = None) -> RunConfig:
    """Parse and validate a TOML config; ``command`` enables its extra preconditions."""
    ctx = _Ctx(text)
    try:
        data = tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        m = re.search(r"line (\d+)", str(exc))
        raise ConfigError(f"syntax error: {exc}", line=int(m.group(1)) if m else None, rule="syntax") from None

    for key in data:
        if key not in _TOP_LEVEL:
            ctx.fail(f"unknown key {key!r}", key if isinstance(data[key], dict) else None, None if isinstance(data[key], dict) else key, rule="unknown-key")

    if "group" not in data:
        raise ConfigError("missing [group] table", rule="group")
    gdata = data["group"]
    backend = gdata.get("backend")
    if backend not in ("cyclic", "weierstrass"):
        ctx.fail(f"unknown backend {backend!r}; expected 'cyclic' or 'weierstrass'", "group", "backend", rule="backend")
    needed = ("n",) if backend == "cyclic" else ("p", "a", "b")
    for k in gdata:
        if k != "backend" and k not in needed:
            ctx.fail(f"unknown key group.{k} for the {backend} backend", "group", k, rule="unknown-key")
    for k in needed:
        if k not in gdata:
            ctx.fail(f"group.{k} is required for the {backend} backend", "group", None, rule="group")
    try:
        group = descriptor_from_dict(gdata)
    except HelixforgeError as exc:
        key = "n" if backend == "cyclic" else ("p" if "prime" in str(exc) else "a")
        rule = "nonsingular-curve" if "singular" in str(exc) else "group"
        ctx.fail(str(exc), "group", key, rule=rule)

    cfg = RunConfig(group)

    caps = data.get("caps", {})
    for k, v in caps.items():
        if k not in cfg.caps or not isinstance(v, int) or isinstance(v, bool) or v < 1:
            ctx.fail(f"caps.{k} must be one of {sorted(cfg.caps)} with a positive integer value", "caps", k, rule="caps")
        cfg.caps[k] = v
    bound = group.n if backend == "cyclic" else group._hasse_bound()
    if bound > cfg.caps["enumeration"]:
        ctx.fail(
            f"group may have up to {bound} elements, above caps.enumeration = {cfg.caps['enumeration']}",
            "group", None, rule="caps",
        )

    seed = data.get("seed", 0)
    if not isinstance(seed, int) or isinstance(seed, bool):
        ctx.fail("seed must be an integer", None, "seed", rule="seed")
    cfg.seed = seed

    for k, v in data.get("windows", {}).items():
        if k not in DEFAULT_WINDOWS:
            ctx.fail(f"unknown window {k!r}; expected one of {sorted(DEFAULT_WINDOWS)}", "windows", k, rule="window")
        cfg.windows[k] = _window(ctx, v, "windows", k)
    if cfg.windows["dims"][0] < 0:
        ctx.fail("windows.dims must start at 0 or above", "windows", "dims", rule="window")

    for k, v in data.get("points", {}).items():
        if k not in ("p", "q", "r"):
            ctx.fail(f"unknown point {k!r}; expected p, q or r", "points", k, rule="unknown-key")
        cfg.points[k] = _element(ctx, group, v, "points", k)

    if "geometry" in data:
        cfg.geometry = _geometry(ctx, group, data["geometry"])

    rnd = data.get("random", {})
    inst = rnd.get("instances", 0)
    if not isinstance(inst, int) or inst < 0:
        ctx.fail("random.instances must be a nonnegative integer", "random", "instances", rule="random")
    cfg.random_instances = inst

    _grid(ctx, cfg, data.get("grid", {}))
    _ibasis(ctx, cfg, data.get("ibasis", {}))

    if command is not None:
        check_command(ctx, cfg, command)
    return cfg


def _geometry(ctx, group, g):
    kind = g.get("kind")
    try:
        if kind == "quadratic":
            for k in ("L", "psi"):
                if k not in g:
                    ctx.fail(f"geometry.{k} is required for a quadratic helix", "geometry", None, rule="geometry")
            L = _class(ctx, group, g["L"], "geometry", "L", 3)
            return QuadraticHelixSpec(L, Translation(_element(ctx, group, g["psi"], "geometry", "psi")))
        if kind == "cubic":
            for k in ("L0", "L1", "alpha"):
                if k not in g:
                    ctx.fail(f"geometry.{k} is required for a cubic helix", "geometry", None, rule="geometry")
            L0 = _class(ctx, group, g["L0"], "geometry", "L0", 2)
            L1 = _class(ctx, group, g["L1"], "geometry", "L1", 2)
            return CubicHelixSpec(L0, L1, Translation(_element(ctx, group, g["alpha"], "geometry", "alpha")))
    except ValueError as exc:
        if isinstance(exc, ConfigError):
            raise
        ctx.fail(str(exc), "geometry", None, rule="geometry")
    ctx.fail(f"geometry.kind must be 'quadratic' or 'cubic', got {kind!r}", "geometry", "kind", rule="geometry")


def _grid(ctx, cfg, g):
    for k, v in g.items():
        if k == "host":
            try:
                HostKind.parse(v)
            except ValueError:
                ctx.fail(f"grid.host must be 'quadratic' or 'cubic', got {v!r}", "grid", "host", rule="grid")
            cfg.grid["host"] = HostKind.parse(v).value
        elif k in ("a", "b"):
            cfg.grid[k] = _window(ctx, v, "grid", k)
        elif k == "cells":
            ok = isinstance(v, list) and all(
                isinstance(c, list) and len(c) == 2 and all(isinstance(x, int) for x in c) for c in v
            )
            if not ok:
                ctx.fail("grid.cells must be a list of [a, b] integer pairs", "grid", "cells", rule="grid")
            cfg.grid["cells"] = tuple(tuple(c) for c in v)
        elif k == "paths":
            if not isinstance(v, int) or v < 0:
                ctx.fail("grid.paths must be a nonnegative integer", "grid", "paths", rule="grid")
            cfg.grid["paths"] = v
        else:
            ctx.fail(f"unknown key grid.{k}", "grid", k, rule="unknown-key")


def _ibasis(ctx, cfg, g):
    for k, v in g.items():
        if k in ("a", "b", "h"):
            cfg.ibasis[k] = _window(ctx, v, "ibasis", k)
        elif k == "n_max":
            if not isinstance(v, int) or v < 0:
                ctx.fail("ibasis.n_max must be a nonnegative integer", "ibasis", k, rule="ibasis")
            cfg.ibasis[k] = v
        else:
            ctx.fail(f"unknown key ibasis.{k}", "ibasis", k, rule="unknown-key")
    if cfg.ibasis["b"][0] < 0 or cfg.ibasis["h"][0] < 0:
        ctx.fail("ibasis.b and ibasis.h must be nonnegative", "ibasis", None, rule="ibasis")
    if cfg.ibasis["n_max"] > cfg.caps["degree"]:
        ctx.fail(f"ibasis.n_max exceeds caps.degree = {cfg.caps['degree']}", "ibasis", "n_max", rule="caps")


def _need(ctx, cfg, command, kinds, points):
    if cfg.geometry is None and kinds:
        ctx.fail(f"{command} needs a [geometry] table", None, None, rule="geometry")
    if kinds and cfg.geometry.kind not in kinds:
        ctx.fail(f"{command} needs a {' or '.join(kinds)} geometry, got {cfg.geometry.kind}", "geometry", "kind", rule="geometry")
    for name in points:
        if name not in cfg.points:
            ctx.fail(f"{command} needs point {name!r} in [points]", "points", None, rule="points")


def check_command(ctx, cfg: RunConfig, command: str):
    """Eager validation of the hypotheses a command relies on."""
    if command not in COMMANDS:
        raise ConfigError(f"unknown command {command!r}; expected one of {', '.join(COMMANDS)}", rule="command")
    if command in ("dims", "grid", "ibasis-check"):
        return
    if command == "verify-helix":
        _need(ctx, cfg, command, ("quadratic", "cubic"), ())
        return
    if command == "cremona":
        _need(ctx, cfg, command, ("quadratic",), ("p", "q", "r"))
    elif command == "blowdown":
        _need(ctx, cfg, command, ("cubic",), ("p",))
    elif command == "blowup":
        _need(ctx, cfg, command, ("quadratic",), ("p", "q"))
    else:  # invert, roundtrip: direction follows the geometry
        _need(ctx, cfg, command, ("quadratic", "cubic"), ())
        _need(ctx, cfg, command, (), ("p", "q") if cfg.geometry.kind == "quadratic" else ("p",))

    geo = cfg.geometry
    if geo.is_degenerate:
        key = "psi" if geo.kind == "quadratic" else "alpha"
        ctx.fail(f"tau is the identity for this {geo.kind} helix", "geometry", key, rule="nondegenerate-translation")
    if geo.kind == "quadratic":
        names = ("p", "q", "r") if command == "cremona" else ("p", "q")
        pts = [(n, cfg.points[n]) for n in names]
        for x in range(len(pts)):
            for y in range(x + 1, len(pts)):
                (a, u), (b, v) = pts[x], pts[y]
                if same_tau_orbit(u, v, geo.tau):
                    ctx.fail(f"{a} and {b} lie in the same tau-orbit", "points", b, rule="tau-orbit")
        if command == "cremona" and collinear(cfg.points["p"], cfg.points["q"], cfg.points["r"], geo.L):
            ctx.fail("p, q, r are collinear for the embedding given by L", "points", "r", rule="collinearity")
