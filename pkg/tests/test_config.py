from pathlib import Path

import pytest

from helixforge.config import parse_config
from helixforge.errors import ConfigError
from helixforge.group_backend import CyclicGroup, WeierstrassCurve
from helixforge.helix import QuadraticHelixSpec

CONFIGS = Path(__file__).resolve().parent.parent / "configs"

MINIMAL = """\
[group]
backend = "cyclic"
n = 30
"""

CREMONA = """\
[group]
backend = "cyclic"
n = 30

[geometry]
kind = "quadratic"
L = {degree = 3, sum = 0}
psi = 2

[points]
p = 2
q = %s
r = 9
"""


def test_minimal_config_fills_defaults():
    cfg = parse_config(MINIMAL)
    assert cfg.group == CyclicGroup(30)
    assert cfg.geometry is None
    assert cfg.windows == {"helix": (-10, 10), "triviality": (-10, 10), "dims": (0, 200)}
    assert cfg.seed == 0
    assert cfg.caps["degree"] == 60


def test_worked_configs_parse():
    for path in sorted(CONFIGS.glob("*.toml")):
        cfg = parse_config(path.read_text())
        assert cfg.geometry is not None


def test_quadratic_geometry():
    cfg = parse_config(CREMONA % "5", command="cremona")
    assert isinstance(cfg.geometry, QuadraticHelixSpec)
    assert cfg.points["q"] == CyclicGroup(30)(5)


def test_cremona_same_orbit_names_rule():
    with pytest.raises(ConfigError) as err:
        parse_config(CREMONA % "2", command="cremona")
    assert err.value.rule == "tau-orbit"
    assert err.value.line == 12
    assert "tau-orbit" in str(err.value)


def test_cremona_collinear_names_rule():
    text = CREMONA.replace("p = 2", "p = 1").replace("r = 9", "r = 27") % "2"
    with pytest.raises(ConfigError) as err:
        parse_config(text, command="cremona")
    assert err.value.rule == "collinearity"


def test_orbit_rule_only_checked_for_commands_that_need_it():
    cfg = parse_config(CREMONA % "2", command="dims")
    assert cfg.points["p"] == cfg.points["q"]


def test_singular_curve_rejected():
    text = '[group]\nbackend = "weierstrass"\np = 11\na = 0\nb = 0\n'
    with pytest.raises(ConfigError) as err:
        parse_config(text)
    assert err.value.rule == "nonsingular-curve"
    assert err.value.line is not None


def test_weierstrass_points():
    text = '[group]\nbackend = "weierstrass"\np = 11\na = 1\nb = 6\n[points]\np = [2, 7]\nq = "inf"\n'
    cfg = parse_config(text)
    curve = WeierstrassCurve(11, 1, 6)
    assert cfg.points == {"p": curve((2, 7)), "q": curve.identity}


def test_point_off_curve_is_line_anchored():
    text = '[group]\nbackend = "weierstrass"\np = 11\na = 1\nb = 6\n[points]\np = [2, 6]\n'
    with pytest.raises(ConfigError) as err:
        parse_config(text)
    assert err.value.line == 7
    assert err.value.rule == "point-on-curve"


def test_unknown_backend():
    with pytest.raises(ConfigError) as err:
        parse_config('[group]\nbackend = "torus"\n')
    assert err.value.rule == "backend"
    assert err.value.line == 2


def test_syntax_error_has_line():
    with pytest.raises(ConfigError) as err:
        parse_config('[group]\nbackend = "cyclic"\nn = = 3\n')
    assert err.value.rule == "syntax"
    assert err.value.line == 3


@pytest.mark.parametrize(
    "extra,rule",
    [
        ("[windows]\nhelix = [3, 1]\n", "window"),
        ("[windows]\nhelix = [1]\n", "window"),
        ("[windows]\nbogus = [1, 2]\n", "window"),
        ("[caps]\nenumeration = 10\n", "caps"),
        ("[grid]\nhost = \"hexagonal\"\n", "grid"),
        ("[ibasis]\nn_max = 99\n", "caps"),
        ("colour = 3\n", "unknown-key"),
    ],
)
def test_invalid_sections(extra, rule):
    with pytest.raises(ConfigError) as err:
        parse_config(MINIMAL + extra)
    assert err.value.rule == rule


def test_geometry_degree_enforced():
    text = MINIMAL + '[geometry]\nkind = "quadratic"\nL = {degree = 2, sum = 0}\npsi = 1\n'
    with pytest.raises(ConfigError) as err:
        parse_config(text)
    assert err.value.rule == "class-degree"


def test_command_needs_geometry():
    with pytest.raises(ConfigError) as err:
        parse_config(MINIMAL, command="roundtrip")
    assert err.value.rule == "geometry"


def test_degenerate_translation_rejected_for_transforms():
    text = (CREMONA % "5").replace("psi = 2", "psi = 10")
    with pytest.raises(ConfigError) as err:
        parse_config(text, command="blowup")
    assert err.value.rule == "nondegenerate-translation"
    parse_config(text, command="verify-helix")


def test_config_echo_is_plain_data():
    cfg = parse_config((CONFIGS / "weierstrass.toml").read_text())
    echo = cfg.to_dict()
    assert echo["group"] == {"backend": "weierstrass", "p": 29, "a": 1, "b": 7}
    assert echo["points"]["p"] == [28, 11]
