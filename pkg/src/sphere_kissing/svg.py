"""Schematic SVG figures drawn from census certificates.

The cylinder is unrolled into a strip: the axis runs left to right and the
circumference (period ``m``) top to bottom.  Exact data is converted to
floats only here, at render time.
"""

from __future__ import annotations

import math

from .census import Census, meridian_exclusion_report
from .geodesics import BeltClass, Kind
from .lattice import LatticeVec, translation
from .surface import SphereModel

SCALE = 60.0
MARGIN = 30.0
ARC_STEPS = 12

BELT_COLOUR = "#1f6fb4"
MERIDIAN_COLOUR = "#2a9d3f"
EXCLUDED_COLOUR = "#c0392b"


def _chart(v: LatticeVec, rows: int, m: float) -> tuple[float, float]:
    """(axial, circumferential) coordinates of a lattice point."""
    w = translation(rows)
    return math.sqrt(3.0) * (rows * v.a - v.b) / m, v.dot(w) / m


def _outline(points: list[tuple[float, float]], r: float) -> list[tuple[float, float]]:
    """Boundary of the r-neighbourhood of a convex polygon, arcs sampled."""
    if len(points) == 1:
        x, y = points[0]
        return [(x + r * math.cos(t), y + r * math.sin(t))
                for t in (2 * math.pi * i / (4 * ARC_STEPS) for i in range(4 * ARC_STEPS))]
    area = sum(points[i][0] * points[(i + 1) % len(points)][1] - points[(i + 1) % len(points)][0] * points[i][1]
               for i in range(len(points)))
    if area < 0:
        points = points[::-1]
    k = len(points)
    normals = []
    for i in range(k):
        (x1, y1), (x2, y2) = points[i], points[(i + 1) % k]
        d = math.hypot(x2 - x1, y2 - y1)
        normals.append(((y2 - y1) / d, -(x2 - x1) / d))
    out = []
    for i in range(k):
        x, y = points[i]
        a0 = math.atan2(normals[i - 1][1], normals[i - 1][0])
        a1 = math.atan2(normals[i][1], normals[i][0])
        while a1 < a0:
            a1 += 2 * math.pi
        for j in range(ARC_STEPS + 1):
            t = a0 + (a1 - a0) * j / ARC_STEPS
            out.append((x + r * math.cos(t), y + r * math.sin(t)))
    return out


class _Canvas:
    def __init__(self, model: SphereModel, title: str):
        self.model = model
        self.m = float(model.m)
        self.r = float(model.r)
        self.t0 = float(model.axial(model.left_cut))
        self.t1 = float(model.axial(model.right_cut))
        self.width = 2 * MARGIN + (self.t1 - self.t0) * SCALE
        self.height = 2 * MARGIN + self.m * SCALE + 20
        self.parts: list[str] = []
        self.title = title

    def xy(self, t: float, u: float) -> tuple[float, float]:
        return MARGIN + (t - self.t0) * SCALE, MARGIN + u * SCALE

    def polygon(self, pts, **attrs) -> None:
        coords = " ".join(f"{x:.2f},{y:.2f}" for x, y in (self.xy(t, u) for t, u in pts))
        self.parts.append(f'<polygon points="{coords}" {_attrs(attrs)} clip-path="url(#strip)"/>')

    def strip(self) -> None:
        x0, y0 = self.xy(self.t0, 0)
        self.parts.append(
            f'<rect x="{x0:.2f}" y="{y0:.2f}" width="{(self.t1 - self.t0) * SCALE:.2f}" '
            f'height="{self.m * SCALE:.2f}" fill="#fafafa" stroke="#555" stroke-dasharray="4 3"/>'
        )

    def chimneys(self) -> None:
        rows = self.model.rows
        for c in self.model.chimneys:
            t, u = _chart(c.lift(), rows, self.m)
            u %= self.m
            for shift in (-self.m, 0.0, self.m):
                x, y = self.xy(t, u + shift)
                self.parts.append(
                    f'<circle cx="{x:.2f}" cy="{y:.2f}" r="{self.r * SCALE:.2f}" fill="#ddd" '
                    f'stroke="#333" clip-path="url(#strip)"/>'
                )
            x, y = self.xy(t, u)
            self.parts.append(f'<text x="{x:.2f}" y="{y + 4:.2f}" font-size="10" text-anchor="middle">{c.s}</text>')

    def belt(self, belt: BeltClass, colour: str) -> None:
        pts = [_chart(v, self.model.rows, self.m) for v in belt.hull]
        lift = math.floor(pts[0][1] / self.m) * self.m
        pts = [(t, u - lift) for t, u in pts]
        outline = _outline(pts, self.r)
        for shift in (-self.m, 0.0, self.m):
            self.polygon([(t, u + shift) for t, u in outline], fill="none", stroke=colour, **{"stroke-width": "2"})

    def meridian(self, gap: int, colour: str, dashed: bool = False) -> None:
        t = float(self.model.axial(self.model.gap_position(gap)))
        x, y0 = self.xy(t, 0)
        _, y1 = self.xy(t, self.m)
        dash = ' stroke-dasharray="6 4"' if dashed else ""
        self.parts.append(
            f'<line x1="{x:.2f}" y1="{y0:.2f}" x2="{x:.2f}" y2="{y1:.2f}" stroke="{colour}" stroke-width="2"{dash}/>'
        )

    def render(self) -> str:
        x0, y0 = self.xy(self.t0, 0)
        head = (
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{self.width:.0f}" height="{self.height:.0f}" '
            f'viewBox="0 0 {self.width:.2f} {self.height:.2f}">\n'
            f'<title>{self.title}</title>\n'
            f'<defs><clipPath id="strip"><rect x="{x0:.2f}" y="{y0:.2f}" '
            f'width="{(self.t1 - self.t0) * SCALE:.2f}" height="{self.m * SCALE:.2f}"/></clipPath></defs>\n'
        )
        caption = (f'<text x="{MARGIN:.2f}" y="{self.height - 8:.2f}" font-size="12">{self.title}</text>\n')
        return head + "\n".join(self.parts) + "\n" + caption + "</svg>\n"


def _attrs(d: dict) -> str:
    return " ".join(f'{k}="{v}"' for k, v in sorted(d.items()))


def systoles_figure(model: SphereModel, result: Census) -> str:
    """One belt around two neighbouring chimneys and one straight meridian."""
    canvas = _Canvas(model, f"two types of systoles, n={model.n}, length sqrt(28)")
    canvas.strip()
    canvas.chimneys()
    belts = [e.representative for e in result.entries if e.representative.kind is Kind.BELT]
    meridians = [e.representative for e in result.entries if e.representative.kind is Kind.MERIDIAN]
    if belts:
        canvas.belt(belts[0].curve, BELT_COLOUR)
    if meridians:
        canvas.meridian(meridians[len(meridians) // 2].curve.gap, MERIDIAN_COLOUR)
    return canvas.render()


def sphere_figure(model: SphereModel, result: Census) -> str:
    """All systoles; excluded gap meridians drawn dashed in red."""
    canvas = _Canvas(model, f"sphere with n={model.n} punctures, kissing number {result.total}")
    canvas.strip()
    canvas.chimneys()
    for e in result.entries:
        if e.representative.kind is Kind.BELT:
            canvas.belt(e.representative.curve, BELT_COLOUR)
    fate = meridian_exclusion_report(model, result)["gaps"]
    for gap in sorted(fate):
        if fate[gap] == "counted":
            canvas.meridian(gap, MERIDIAN_COLOUR)
        else:
            canvas.meridian(gap, EXCLUDED_COLOUR, dashed=True)
    return canvas.render()


FIGURES = {"systoles": systoles_figure, "sphere": sphere_figure}
