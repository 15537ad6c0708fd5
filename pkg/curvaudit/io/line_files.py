"""Line files: ``{"lines": [[a, b, c], ...]}`` with integer or "p/q" entries."""
from __future__ import annotations

from typing import Any, List, Optional

from ..exceptions import ArrangementFormatError, GeometryError
from ..geometry import ProjectiveLine
from .arrangement_files import load_structured, read_text


def lines_from_data(data: Any, path: Optional[str] = None) -> List[ProjectiveLine]:
    if not isinstance(data, dict) or "lines" not in data:
        raise ArrangementFormatError('line file must be a mapping with a "lines" list', path)
    entries = data["lines"]
    if not isinstance(entries, list):
        raise ArrangementFormatError('"lines" must be a list of [a, b, c] triples', path)
    lines = []
    for index, entry in enumerate(entries):
        try:
            lines.append(ProjectiveLine.parse(entry))
        except (GeometryError, ValueError) as exc:
            raise ArrangementFormatError(f"lines[{index}]: {exc}", path) from exc
    return lines


def loads_lines(text: str, path: Optional[str] = None) -> List[ProjectiveLine]:
    return lines_from_data(load_structured(text, path), path)


def load_lines(path: str) -> List[ProjectiveLine]:
    return loads_lines(read_text(path), path)


__all__ = ["lines_from_data", "loads_lines", "load_lines"]
