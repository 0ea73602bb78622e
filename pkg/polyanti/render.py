"""
Static renders of point sets: character grids and minimal SVG.
"""

import logging
from typing import List, Sequence, Tuple

from .core import Chain, PointSet
from .planar import boundary_point_sets, trace_lower_boundary, trace_upper_boundary
from .staircase import three_chain_decomposition
from .utils import InvalidInputError, ValidationError

logger = logging.getLogger(__name__)

OVERLAYS = ("boundaries", "chains")
FORMATS = ("ascii", "svg")
CELL = 20
MARGIN = 10
PANEL_GAP = 30
CHAIN_COLORS = ("#d62728", "#1f77b4", "#2ca02c")
# Axes kept by each projection panel of a 3D set.
PROJECTIONS = (("xy", (0, 1)), ("yz", (1, 2)), ("xz", (0, 2)))


def _overlay_chains(S: PointSet) -> List[Chain]:
    if S.dim == 2:
        return [trace_lower_boundary(S), trace_upper_boundary(S)]
    return list(three_chain_decomposition(S))


class SetRenderer:
    """Renders a 2D or 3D point set with optional boundary or chain overlays."""

    def __init__(self, points: PointSet, overlays: Sequence[str] = ()):
        """
        Args:
            points: Non-empty point set
            overlays: Any of "boundaries" and "chains"
        """
        points.require_non_empty("render")
        unknown = [o for o in overlays if o not in OVERLAYS]
        if unknown:
            raise ValidationError(f"unknown overlay {unknown[0]!r}, expected one of {', '.join(OVERLAYS)}")
        self.points = points
        self.overlays = tuple(overlays)
        self.top = points.max_point
        self.chains: List[Chain] = []
        self.lower = self.upper = frozenset()
        try:
            if "chains" in self.overlays or ("boundaries" in self.overlays and points.dim == 3):
                self.chains = _overlay_chains(points)
            if "boundaries" in self.overlays and points.dim == 2:
                lower, upper = boundary_point_sets(points)
                self.lower, self.upper = lower.points, upper.points
        except InvalidInputError as exc:
            logger.warning("overlay skipped: %s", exc)

    def render(self, fmt="ascii") -> str:
        if fmt == "ascii":
            return self.render_ascii()
        if fmt == "svg":
            return self.render_svg()
        raise ValidationError(f"unknown format {fmt!r}, expected one of {', '.join(FORMATS)}")

    def _mark(self, p) -> str:
        if p not in self.points:
            return "."
        if self.points.dim == 2:
            on_lower = p in self.lower
            on_upper = p in self.upper
            if self.chains:
                on_lower = on_lower or p in self.chains[0].steps
                on_upper = on_upper or p in self.chains[1].steps
            if on_lower and on_upper:
                return "B"
            if on_lower:
                return "L"
            if on_upper:
                return "U"
            return "o"
        hits = [name for name, ch in zip("XYZ", self.chains) if p in ch.steps]
        if len(hits) > 1:
            return "*"
        return hits[0] if hits else "o"

    def _grid_rows(self, z=None) -> List[str]:
        x_max, y_max = self.top[0], self.top[1]
        rows = []
        for y in range(y_max, -1, -1):
            cells = ((x, y) if z is None else (x, y, z) for x in range(x_max + 1))
            rows.append("".join(self._mark(p) for p in cells))
        return rows

    def render_ascii(self) -> str:
        """Rows from the top y down; a 3D set prints one block per z slice."""
        if self.points.dim == 2:
            return "\n".join(self._grid_rows()) + "\n"
        blocks = []
        for z in range(self.top[2] + 1):
            blocks.append(f"z={z}\n" + "\n".join(self._grid_rows(z)))
        return "\n\n".join(blocks) + "\n"

    def _panel(self, cells, chains, extent, offset_x, label) -> Tuple[List[str], int]:
        h = extent[1] + 1
        parts = []
        if label:
            parts.append(f'<text x="{offset_x}" y="{MARGIN}" font-size="12">{label}</text>')
        top = MARGIN + (16 if label else 0)
        for a, b in sorted(cells):
            x = offset_x + a * CELL
            y = top + (extent[1] - b) * CELL
            parts.append(f'<rect x="{x}" y="{y}" width="{CELL}" height="{CELL}" '
                         f'fill="#cccccc" stroke="#444444"/>')
        for color, chain in zip(CHAIN_COLORS, chains):
            coords = " ".join(f"{offset_x + a * CELL + CELL // 2},{top + (extent[1] - b) * CELL + CELL // 2}"
                              for a, b in chain)
            parts.append(f'<polyline points="{coords}" fill="none" stroke="{color}" stroke-width="3"/>')
        return parts, top + h * CELL

    def render_svg(self) -> str:
        """2D sets as one panel; 3D sets as three axis projections side by side."""
        if self.points.dim == 2:
            chains = [ch.steps for ch in self.chains]
            if not chains and (self.lower or self.upper):
                chains = [sorted(self.lower), sorted(self.upper)]
            panels = [(self.points.points, chains, self.top, "")]
        else:
            panels = []
            for label, (i, j) in PROJECTIONS:
                cells = {(p[i], p[j]) for p in self.points.points}
                chains = [[(p[i], p[j]) for p in ch.steps] for ch in self.chains]
                panels.append((cells, chains, (self.top[i], self.top[j]), label))

        body: List[str] = []
        offset_x = MARGIN
        height = 0
        for cells, chains, extent, label in panels:
            parts, bottom = self._panel(cells, chains, extent, offset_x, label)
            body.extend(parts)
            height = max(height, bottom)
            offset_x += (extent[0] + 1) * CELL + PANEL_GAP
        width = offset_x - PANEL_GAP + MARGIN
        header = (f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height + MARGIN}" '
                  f'viewBox="0 0 {width} {height + MARGIN}">')
        return "\n".join([header] + body + ["</svg>"]) + "\n"


def render_points(points: PointSet, fmt="ascii", overlays: Sequence[str] = ()) -> str:
    return SetRenderer(points, overlays).render(fmt)
