import xml.etree.ElementTree as ET
from fractions import Fraction

import pytest

from swtriangle.cli import main
from swtriangle.monopole_count import BoundaryCurve
from swtriangle.serialization import load_path
from swtriangle.svg import SCALE, render_svg

NS = "{http://www.w3.org/2000/svg}"
FIGURES = ["figure1_config", "figure2_config", "figure3_config"]


def classes(svg_text):
    root = ET.fromstring(svg_text.encode())
    return [el.get("class", "") for el in root.iter()]


@pytest.mark.parametrize("name", FIGURES)
def test_render_matches_golden(tmp_path, data_dir, name):
    out = tmp_path / f"{name}.svg"
    assert main(["render", "-i", str(data_dir / f"{name}.json"), "-o", str(out)]) == 0
    assert out.read_bytes() == (data_dir / f"{name}.svg").read_bytes()


@pytest.mark.parametrize("name", ["figure2_curve", "empty_curve"])
def test_curve_render_matches_golden(tmp_path, data_dir, name):
    out = tmp_path / f"{name}.svg"
    assert main(["render", "-i", str(data_dir / f"{name}.json"), "-o", str(out)]) == 0
    assert out.read_bytes() == (data_dir / f"{name}.svg").read_bytes()


def test_render_is_deterministic(data_dir):
    cfg = load_path(data_dir / "figure1_config.json")
    a = render_svg(cfg.curve, cfg.n, cfg.m, cfg.p, cfg.eps, cfg.eta)
    b = render_svg(cfg.curve, cfg.n, cfg.m, cfg.p, cfg.eps, cfg.eta)
    assert a == b


def test_single_triangle_picture(data_dir):
    cfg = load_path(data_dir / "figure3_config.json")
    cls = classes(render_svg(cfg.curve, cfg.n, cfg.m, cfg.p, cfg.eps, cfg.eta))
    tri = [c.split() for c in cls if c.startswith("triangle")]
    assert {t[1] for t in tri} == {"W1", "W0"}
    assert {t[2] for t in tri} <= {"sign+1", "sign-1"}
    assert cls.count("vartheta") >= 1 and cls.count("endpoint") == 2


def test_empty_curve_draws_only_the_background():
    svg = render_svg(BoundaryCurve((), Fraction(1, 7), 4), 4)
    root = ET.fromstring(svg.encode())
    assert root.get("viewBox") == f"0 {-8 * SCALE} {2 * SCALE} {8 * SCALE}"
    cls = classes(svg)
    assert "curve" not in cls and "triangle" not in " ".join(cls)
    assert cls.count("axis") == 2 and cls.count("wall") >= 1 and cls.count("y1") >= 1


def test_theta_points_only_with_a_slope(data_dir):
    cf = load_path(data_dir / "figure2_curve.json")
    with_slope = classes(render_svg(cf.curve, cf.curve.n, cf.m, cf.p, cf.eps, cf.eta, cf.slope))
    without = classes(render_svg(cf.curve, cf.curve.n, cf.m, cf.p, cf.eps, cf.eta))
    assert "theta" in with_slope and "theta" not in without


def test_viewbox_contains_the_curve(data_dir):
    cfg = load_path(data_dir / "figure1_config.json")
    root = ET.fromstring(render_svg(cfg.curve, cfg.n, cfg.m, cfg.p, cfg.eps, cfg.eta).encode())
    x0, y0, w, h = (int(v) for v in root.get("viewBox").split())
    a, b, c, d = cfg.curve.bbox()
    assert x0 <= a * SCALE and b * SCALE <= x0 + w
    assert y0 <= -d * SCALE and -c * SCALE <= y0 + h
