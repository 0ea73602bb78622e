import pytest

from polyanti.core import PointSet
from polyanti.pointfile import PointFile, read_points, write_points
from polyanti.utils import PointFileError


class TestParse:
    def test_comments_and_blank_lines(self):
        parsed = PointFile.parse("# made by hand\n\ndim 2\n0 0\n# middle\n1 0\n")
        assert parsed.points == PointSet([(0, 0), (1, 0)])
        assert parsed.comments == ["made by hand", "middle"]

    def test_comment_value(self):
        parsed = PointFile.parse("dim 3\n# claim: cdim\n# bound: 2\n0 0 0\n")
        assert parsed.comment_value("claim") == "cdim"
        assert parsed.comment_value("bound") == "2"
        assert parsed.comment_value("box") is None

    @pytest.mark.parametrize("text, line_no, fragment", [
        ("0 0\n", 1, "header"),
        ("dim 4\n", 1, "dimension must be 2 or 3"),
        ("dim 2\n0 0\n1 2 3\n", 3, "expected 2 fields"),
        ("dim 2\n0 -1\n", 2, "not a non-negative integer: '-1'"),
        ("dim 2\n0 x\n", 2, "not a non-negative integer: 'x'"),
        ("dim 2\n0 0\n1 0\n0 0\n", 4, "duplicate point (0,0) (first on line 2)"),
        ("# only a comment\n", 1, "missing"),
    ])
    def test_errors_carry_line_numbers(self, text, line_no, fragment):
        with pytest.raises(PointFileError) as info:
            PointFile.parse(text)
        assert info.value.line_no == line_no
        assert str(info.value).startswith(f"line {line_no}: ")
        assert fragment in str(info.value)

    def test_empty_text(self):
        with pytest.raises(PointFileError):
            PointFile.parse("")


class TestWrite:
    def test_dumps_is_sorted_with_comments_after_header(self):
        text = PointFile(PointSet([(1, 0), (0, 0)]), ["note"]).dumps()
        assert text == "dim 2\n# note\n0 0\n1 0\n"

    def test_save_and_load(self, tmp_path, two_step):
        path = tmp_path / "nested" / "two_step.pts"
        write_points(path, two_step, ["two steps"])
        assert read_points(path) == two_step
        assert PointFile.load(path).comments == ["two steps"]
