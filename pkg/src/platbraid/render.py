"""Annulus diagrams of braid words and their plat closures (SVG and ASCII).

Layout: point i sits at angle 2*pi*i/k, measured clockwise from the top.
The braid occupies the annulus between radius 400 (residual side, outer)
and 160 (internal side, inner), one concentric ring per letter with the
leftmost letter outermost.  A positive letter s_i is drawn with the strand
entering the ring at slot i passing over; the under strand has a gap.

Plat closures add internal arcs inside the inner circle joining 2j-1 to 2j,
and residual arcs that leave point i through the dashed projective boundary
and re-enter at the antipodal point i+n.
"""

from __future__ import annotations

import math
import xml.etree.ElementTree as ET
from typing import Literal

from .plat import UnionFind
from .words import BraidWord, require_even

CANVAS = 1000
CENTER = CANVAS / 2
R_OUTER = 400.0
R_INNER = 160.0
R_BOUNDARY = 470.0
SAMPLES = 16
GAP = 0.14

Format = Literal["svg", "ascii"]


def _angle(k: int, p: float) -> float:
    return 2 * math.pi * p / k


def _xy(r: float, theta: float) -> str:
    x = CENTER + r * math.sin(theta)
    y = CENTER - r * math.cos(theta)
    return f"{x:.2f} {y:.2f}"


def _point(k: int, r: float, p: int) -> str:
    return _xy(r, _angle(k, p))


def _ring_radii(length: int) -> list[float]:
    if length == 0:
        return [R_OUTER, R_INNER]
    step = (R_OUTER - R_INNER) / length
    return [R_OUTER - t * step for t in range(length + 1)]


def _smooth(u: float) -> float:
    return u * u * (3 - 2 * u)


def _crossing_strand(k, r0, r1, p_from, p_to, theta0, theta1, gap: bool) -> str:
    """Polyline from slot p_from at r0 to slot p_to at r1, optionally gapped."""
    pts = []
    for s in range(1, SAMPLES):
        u = s / SAMPLES
        r = r0 + (r1 - r0) * u
        theta = theta0 + (theta1 - theta0) * _smooth(u)
        pts.append((u, _xy(r, theta)))
    start, end = _point(k, r0, p_from), _point(k, r1, p_to)
    if not gap:
        return "M " + " L ".join([start] + [xy for _, xy in pts] + [end])
    head = [xy for u, xy in pts if u <= 0.5 - GAP]
    tail = [xy for u, xy in pts if u >= 0.5 + GAP]
    return "M " + " L ".join([start] + head) + " M " + " L ".join(tail + [end])


def _strand(d: str) -> str:
    return f'<path class="strand" d="{d}"/>'


def _braid_elements(w: BraidWord) -> list[str]:
    k = w.k
    radii = _ring_radii(len(w))
    out = ['<g class="braid">']
    if not w.letters:
        for p in range(1, k + 1):
            out.append(_strand(f"M {_point(k, R_OUTER, p)} L {_point(k, R_INNER, p)}"))
    for t, (index, sign) in enumerate(w.letters):
        r0, r1 = radii[t], radii[t + 1]
        other = index % k + 1
        out.append(f'<g class="ring" data-slot="{t}">')
        for p in range(1, k + 1):
            if p not in (index, other):
                out.append(_strand(f"M {_point(k, r0, p)} L {_point(k, r1, p)}"))
        theta_a = _angle(k, index)
        theta_b = theta_a + 2 * math.pi / k
        over_first = sign > 0
        out.append(
            f'<g class="crossing" data-index="{index}" data-sign="{sign}" '
            f'data-center="{_xy((r0 + r1) / 2, (theta_a + theta_b) / 2)}">'
        )
        out.append(_strand(_crossing_strand(k, r0, r1, index, other, theta_a, theta_b, not over_first)))
        out.append(_strand(_crossing_strand(k, r0, r1, other, index, theta_b, theta_a, over_first)))
        out.append("</g>")
        out.append("</g>")
    out.append("</g>")
    return out


def _plat_elements(w: BraidWord) -> list[str]:
    n = require_even(w)
    k = w.k
    out = [
        f'<circle class="boundary" cx="{CENTER:.0f}" cy="{CENTER:.0f}" r="{R_BOUNDARY:.0f}" '
        'fill="none" stroke="#888" stroke-dasharray="8 6"/>',
        '<g class="internal">',
    ]
    for j in range(1, k + 1, 2):
        a, b = _angle(k, j), _angle(k, j + 1)
        pts = []
        for s in range(1, SAMPLES):
            u = s / SAMPLES
            # quadratic Bezier in polar coordinates dipping towards the centre
            r = (1 - u) ** 2 * R_INNER + 2 * u * (1 - u) * R_INNER * 0.55 + u * u * R_INNER
            pts.append(_xy(r, a + (b - a) * u))
        d = "M " + " L ".join([_point(k, R_INNER, j)] + pts + [_point(k, R_INNER, j + 1)])
        out.append(_strand(d))
    out.append("</g>")
    out.append('<g class="residual">')
    for i in range(1, n + 1):
        d = (
            f"M {_point(k, R_OUTER, i)} L {_point(k, R_BOUNDARY, i)} "
            f"M {_point(k, R_BOUNDARY, i + n)} L {_point(k, R_OUTER, i + n)}"
        )
        out.append(_strand(d))
    out.append("</g>")
    return out


def _labels(k: int) -> list[str]:
    out = ['<g class="labels" font-family="monospace" font-size="18" text-anchor="middle">']
    for p in range(1, k + 1):
        x, y = _point(k, R_OUTER + 22, p).split()
        out.append(f'<text x="{x}" y="{y}">{p}</text>')
    out.append("</g>")
    return out


def _svg(w: BraidWord, plat: bool) -> str:
    body = []
    if plat:
        body += _plat_elements(w)
    body += _braid_elements(w)
    body += _labels(w.k)
    head = (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{CANVAS}" height="{CANVAS}" '
        f'viewBox="0 0 {CANVAS} {CANVAS}" data-k="{w.k}" data-word="{w.text}">\n'
        '<g fill="none" stroke="black" stroke-width="3" stroke-linecap="round">'
    )
    return head + "\n" + "\n".join(body) + "\n</g>\n</svg>\n"


# -- ASCII -----------------------------------------------------------------


def _col(p: int) -> int:
    return 4 * (p - 1) + 2


def _ascii(w: BraidWord, plat: bool) -> str:
    k = w.k
    width = 4 * k + 1
    rows: list[list[str]] = []

    def blank() -> list[str]:
        row = [" "] * width
        for p in range(1, k + 1):
            row[_col(p)] = "|"
        return row

    header = [" "] * width
    for p in range(1, k + 1):
        label = str(p)
        header[_col(p) : _col(p) + len(label)] = list(label)
    rows.append(header[:width])
    if plat:
        n = k // 2
        row = [" "] * width
        for p in range(1, k + 1):
            row[_col(p)] = "." if p <= n else ":"
        rows.append(row)
    rows.append(blank())
    for index, sign in w.letters:
        top, mid, bottom = blank(), blank(), blank()
        over = "\\" if sign > 0 else "/"
        if index < k:
            a, b = _col(index), _col(index + 1)
            top[a] = top[b] = mid[a] = mid[b] = bottom[a] = bottom[b] = " "
            top[a + 1], top[b - 1] = "\\", "/"
            mid[a + 2] = over
            bottom[a + 1], bottom[b - 1] = "/", "\\"
        else:
            a, b = _col(k), _col(1)
            top[a] = top[b] = mid[a] = mid[b] = bottom[a] = bottom[b] = " "
            top[a + 1], top[b - 1] = "\\", "/"
            mid[a + 2], mid[0] = over, "."
            bottom[a + 1], bottom[b - 1] = "/", "\\"
        rows += [top, mid, bottom]
    rows.append(blank())
    if plat:
        row = [" "] * width
        for j in range(1, k + 1, 2):
            a, b = _col(j), _col(j + 1)
            row[a] = "\\"
            row[b] = "/"
            for c in range(a + 1, b):
                row[c] = "_"
        rows.append(row)
    return "\n".join("".join(r).rstrip() for r in rows) + "\n"


def render_braid(w: BraidWord, format: Format = "svg") -> str:
    if format == "svg":
        return _svg(w, plat=False)
    if format == "ascii":
        return _ascii(w, plat=False)
    raise ValueError(f"unknown format {format!r}")


def render_plat(w: BraidWord, format: Format = "svg") -> str:
    """Braid diagram closed by internal and residual arcs.

    In ASCII the top marker row shows residual sides ('.' for 1..n, ':' for
    their antipodes n+1..2n) and the bottom row the internal arcs.
    """
    require_even(w)
    if format == "svg":
        return _svg(w, plat=True)
    if format == "ascii":
        return _ascii(w, plat=True)
    raise ValueError(f"unknown format {format!r}")


# -- tracing ---------------------------------------------------------------


def _endpoints(d: str) -> tuple[str, str]:
    tokens = d.replace("M", " ").replace("L", " ").split()
    return f"{tokens[0]} {tokens[1]}", f"{tokens[-2]} {tokens[-1]}"


def trace_closed_curves(svg: str) -> int:
    """Count closed curves in a rendered plat by gluing strand pieces at
    coincident endpoints.  Raises ValueError if some curve is left open."""
    root = ET.fromstring(svg.encode())
    ids: dict[str, int] = {}
    pieces = []
    for el in root.iter("{http://www.w3.org/2000/svg}path"):
        if "strand" not in el.get("class", "").split():
            continue
        a, b = _endpoints(el.get("d"))
        for e in (a, b):
            ids.setdefault(e, len(ids))
        pieces.append((ids[a], ids[b]))
    degree = [0] * len(ids)
    uf = UnionFind(len(ids))
    for a, b in pieces:
        degree[a] += 1
        degree[b] += 1
        uf.union(a, b)
    if any(d != 2 for d in degree):
        raise ValueError("rendered diagram has open strand ends")
    return uf.count


def crossing_count(svg: str) -> int:
    root = ET.fromstring(svg.encode())
    return sum(
        1
        for el in root.iter("{http://www.w3.org/2000/svg}g")
        if el.get("class") == "crossing"
    )
