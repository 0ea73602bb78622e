import logging

import pytest

from polyanti.core import PointSet
from polyanti.render import SetRenderer, render_points
from polyanti.utils import ValidationError


class TestAscii:
    def test_planar_example(self, planar_example):
        rows = render_points(planar_example).splitlines()
        assert len(rows) == 7
        assert all(len(row) == 13 for row in rows)
        assert rows[0] == ".........oooo"
        assert rows[-1] == "ooooo........"

    def test_unit_square_boundaries(self, unit_square):
        assert render_points(unit_square, overlays=["boundaries"]) == "UB\nBL\n"

    def test_unit_cube_chains(self, unit_cube):
        text = render_points(unit_cube, overlays=["chains"])
        assert text == "z=0\nYY\n*X\n\nz=1\nZ*\nZX\n"

    def test_failed_overlay_is_skipped(self, caplog):
        S = PointSet([(0, 0), (1, 1)])
        with caplog.at_level(logging.WARNING, logger="polyanti.render"):
            text = render_points(S, overlays=["chains"])
        assert text == ".o\no.\n"
        assert "overlay skipped" in caplog.text


class TestSvg:
    def test_planar_single_panel(self, planar_example):
        svg = render_points(planar_example, "svg", ["boundaries"])
        assert svg.startswith("<svg ")
        assert svg.rstrip().endswith("</svg>")
        assert svg.count("<rect") == 34
        assert svg.count("<polyline") == 2
        assert "<text" not in svg

    def test_three_projection_panels(self, two_step):
        svg = render_points(two_step, "svg", ["chains"])
        assert svg.count("<text") == 3
        for label in ("xy", "yz", "xz"):
            assert f">{label}</text>" in svg
        assert svg.count("<polyline") == 9


class TestErrors:
    def test_unknown_overlay(self, unit_square):
        with pytest.raises(ValidationError):
            SetRenderer(unit_square, ["heatmap"])

    def test_unknown_format(self, unit_square):
        with pytest.raises(ValidationError):
            SetRenderer(unit_square).render("png")

    def test_empty_set(self):
        with pytest.raises(ValidationError):
            render_points(PointSet([], dim=2))
