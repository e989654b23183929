import random
import xml.etree.ElementTree as ET

import pytest
from hypothesis import given, settings

from platbraid.errors import OddStrandCount
from platbraid.plat import component_count
from platbraid.render import crossing_count, render_braid, render_plat, trace_closed_curves
from platbraid.words import BraidWord, parse_word
from strategies import words

SVG = "{http://www.w3.org/2000/svg}"


def W(k, text):
    return parse_word(text, k)


def test_empty_braid_is_radial():
    root = ET.fromstring(render_braid(W(4, "")))
    paths = list(root.iter(SVG + "path"))
    assert len(paths) == 4
    assert crossing_count(render_braid(W(4, ""))) == 0


def test_single_crossing_sector():
    root = ET.fromstring(render_braid(W(4, "1")))
    (g,) = [e for e in root.iter(SVG + "g") if e.get("class") == "crossing"]
    x, y = map(float, g.get("data-center").split())
    # between point 1 (east) and point 2 (south) on a clockwise dial
    assert x > 500 and y > 500


def test_degenerate_plat():
    svg = render_plat(W(2, ""))
    root = ET.fromstring(svg)
    assert len([e for e in root.iter(SVG + "g") if e.get("class") == "internal"][0]) == 1
    assert len([e for e in root.iter(SVG + "g") if e.get("class") == "residual"][0]) == 1
    assert trace_closed_curves(svg) == 1


def test_two_components():
    assert trace_closed_curves(render_plat(W(4, "2"))) == 2


def test_odd_plat_rejected():
    with pytest.raises(OddStrandCount):
        render_plat(BraidWord(3))


@settings(max_examples=60)
@given(words(max_len=6))
def test_trace_matches_components(w):
    svg = render_plat(w)
    assert trace_closed_curves(svg) == component_count(w)
    assert crossing_count(svg) == len(w)


def test_byte_stable():
    w = W(6, "1 -6 3 2")
    assert render_plat(w) == render_plat(W(6, "1 -6 3 2"))
    assert render_plat(w, "ascii") == render_plat(w, "ascii")


def test_over_under_convention():
    # the under strand is the one drawn with a gap, i.e. with two subpaths
    def gapped(svg):
        root = ET.fromstring(svg)
        (g,) = [e for e in root.iter(SVG + "g") if e.get("class") == "crossing"]
        return [p.get("d").count("M") for p in g]

    assert gapped(render_braid(W(4, "1"))) == [1, 2]
    assert gapped(render_braid(W(4, "-1"))) == [2, 1]


def test_ascii_shape():
    text = render_plat(W(4, "1 -4"), "ascii")
    lines = text.splitlines()
    assert lines[0].split() == ["1", "2", "3", "4"]
    assert lines[-1] == "  \\___/   \\___/"
    assert set("".join(lines[1:])) <= set("/\\|_.: ")
    assert len(lines) == 2 + 1 + 3 * 2 + 1 + 1


def test_ascii_braid_has_no_arcs():
    assert "_" not in render_braid(W(4, "2 3"), "ascii")


def test_unknown_format():
    with pytest.raises(ValueError):
        render_braid(W(4, ""), "png")
