"""Arrangement-class files.

Format (JSON, or the same structure in YAML)::

    { "components": [ {"degree": 1, "count": 21} ], "t": { "3": 28, "4": 21 } }

Multiplicity keys are decimal strings (plain integers are accepted on load);
counts are decimal integers.
"""
from __future__ import annotations

import json
import os
from typing import Any, Dict, List, Optional

import yaml

from ..exceptions import ArrangementFormatError, InvalidArrangementError
from ..models import ArrangementClass, ComponentSpec, TVector

_YAML_SUFFIXES = (".yaml", ".yml")


def _coerce_int(value: Any, what: str) -> int:
    if isinstance(value, bool):
        raise InvalidArrangementError(f"{what} must be an integer, received {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, str) and value.strip().lstrip("+-").isdigit():
        return int(value.strip())
    raise InvalidArrangementError(f"{what} must be an integer, received {value!r}")


def _ensure_list(value: Any, what: str) -> List[Any]:
    if not isinstance(value, list):
        raise InvalidArrangementError(f"{what} must be a list")
    return value


def arrangement_from_dict(data: Dict[str, Any]) -> ArrangementClass:
    if not isinstance(data, dict):
        raise InvalidArrangementError("arrangement must be a mapping")
    if "components" not in data:
        raise InvalidArrangementError("arrangement must define components")
    groups = []
    for index, entry in enumerate(_ensure_list(data["components"], "components")):
        if not isinstance(entry, dict):
            raise InvalidArrangementError(f"components[{index}] must be a mapping")
        missing = [key for key in ("degree", "count") if key not in entry]
        if missing:
            raise InvalidArrangementError(f"components[{index}] missing {', '.join(missing)}")
        groups.append(
            (
                _coerce_int(entry["degree"], f"components[{index}].degree"),
                _coerce_int(entry["count"], f"components[{index}].count"),
            )
        )
    raw_t = data.get("t") or {}
    if not isinstance(raw_t, dict):
        raise InvalidArrangementError("t must be a mapping from multiplicity to count")
    counts = [(_coerce_int(key, "multiplicity key"), _coerce_int(value, f"t[{key}]")) for key, value in raw_t.items()]
    return ArrangementClass(ComponentSpec(tuple(groups)), TVector(tuple(counts)))


def arrangement_to_dict(arrangement: ArrangementClass) -> Dict[str, Any]:
    return {
        "components": [{"degree": degree, "count": count} for degree, count in arrangement.components.groups],
        "t": {str(r): t for r, t in arrangement.t.items()},
    }


def dumps_arrangement(arrangement: ArrangementClass, fmt: str = "json") -> str:
    data = arrangement_to_dict(arrangement)
    if fmt == "yaml":
        return yaml.safe_dump(data, sort_keys=False)
    return json.dumps(data, indent=2) + "\n"


def load_structured(text: str, path: Optional[str] = None) -> Any:
    """Parse JSON or YAML text, reporting syntax errors with line and column."""
    is_yaml = bool(path) and os.path.splitext(str(path))[1].lower() in _YAML_SUFFIXES
    if is_yaml:
        try:
            return yaml.safe_load(text)
        except yaml.YAMLError as exc:
            mark = getattr(exc, "problem_mark", None)
            line = mark.line + 1 if mark is not None else None
            column = mark.column + 1 if mark is not None else None
            raise ArrangementFormatError(f"invalid YAML: {getattr(exc, 'problem', exc)}", path, line, column) from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ArrangementFormatError(f"invalid JSON: {exc.msg}", path, exc.lineno, exc.colno) from exc


def read_text(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise ArrangementFormatError(f"cannot read file: {exc.strerror or exc}", path) from exc
    except UnicodeDecodeError as exc:
        raise ArrangementFormatError(f"not valid UTF-8 at byte {exc.start}", path) from exc


def loads_arrangement(text: str, path: Optional[str] = None) -> ArrangementClass:
    data = load_structured(text, path)
    try:
        return arrangement_from_dict(data)
    except InvalidArrangementError as exc:
        raise ArrangementFormatError(str(exc), path) from exc


def load_arrangement(path: str) -> ArrangementClass:
    return loads_arrangement(read_text(path), path)


__all__ = [
    "arrangement_from_dict",
    "arrangement_to_dict",
    "dumps_arrangement",
    "load_structured",
    "read_text",
    "loads_arrangement",
    "load_arrangement",
]
