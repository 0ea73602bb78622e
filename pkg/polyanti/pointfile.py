"""
Reading and writing point files.

A point file starts with a ``dim <d>`` header followed by one point per
line as space-separated non-negative decimal integers. Lines beginning
with '#' and blank lines are ignored on input; writers put comment lines
right after the header and points in lexicographic order.
"""

import logging
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional

from .core import SUPPORTED_DIMS, PointSet, make_point
from .utils import PointFileError, ValidationError, format_point

logger = logging.getLogger(__name__)

_HEADER = re.compile(r"^dim\s+(\d+)$")
_FIELD = re.compile(r"^\d+$")


@dataclass
class PointFile:
    points: PointSet
    comments: List[str] = field(default_factory=list)

    @classmethod
    def parse(cls, text: str) -> "PointFile":
        dim = None
        comments = []
        seen = {}
        line_no = 0
        for line_no, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                comments.append(line[1:].strip())
                continue
            if dim is None:
                match = _HEADER.match(line)
                if not match:
                    raise PointFileError(line_no, f"expected 'dim <d>' header, got {line!r}")
                dim = int(match.group(1))
                if dim not in SUPPORTED_DIMS:
                    raise PointFileError(line_no, f"dimension must be 2 or 3, got {dim}")
                continue
            parts = line.split()
            if len(parts) != dim:
                raise PointFileError(line_no, f"expected {dim} fields, got {len(parts)}")
            bad = [p for p in parts if not _FIELD.match(p)]
            if bad:
                raise PointFileError(line_no, f"not a non-negative integer: {bad[0]!r}")
            try:
                p = make_point((int(c) for c in parts), dim=dim)
            except ValidationError as exc:
                raise PointFileError(line_no, str(exc))
            if p in seen:
                raise PointFileError(line_no, f"duplicate point {format_point(p)} (first on line {seen[p]})")
            seen[p] = line_no
        if dim is None:
            raise PointFileError(max(line_no, 1), "missing 'dim <d>' header")
        return cls(PointSet(seen, dim=dim), comments)

    @classmethod
    def load(cls, path) -> "PointFile":
        with open(path, "r") as f:
            parsed = cls.parse(f.read())
        logger.debug("read %d points from %s", len(parsed.points), path)
        return parsed

    def comment_value(self, key) -> Optional[str]:
        """Value of a ``# key: value`` comment, if present."""
        prefix = f"{key}:"
        for c in self.comments:
            if c.startswith(prefix):
                return c[len(prefix):].strip()
        return None

    def dumps(self) -> str:
        lines = [f"dim {self.points.dim}"]
        lines.extend(f"# {c}" for c in self.comments)
        lines.extend(" ".join(str(c) for c in p) for p in self.points.sorted())
        return "\n".join(lines) + "\n"

    def save(self, path):
        Path(path).parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w") as f:
            f.write(self.dumps())
        logger.debug("wrote %d points to %s", len(self.points), path)


def read_points(path) -> PointSet:
    return PointFile.load(path).points


def write_points(path, points: PointSet, comments=()):
    PointFile(points, list(comments)).save(path)
