from __future__ import annotations

import functools
import logging
import os
from typing import Any, Dict

import yaml

from ..config import CATALOG_FILE
from ..exceptions import CatalogError, InvalidArrangementError
from ..models import ArrangementClass
from .arrangement_files import arrangement_from_dict

logger = logging.getLogger(__name__)


def _read_catalog(path: str) -> Dict[str, Any]:
    with open(path, "r", encoding="utf-8") as handle:
        data = yaml.safe_load(handle) or {}
    if not isinstance(data, dict):
        raise CatalogError(f"Catalog YAML at {path} must be a mapping")
    return data


@functools.lru_cache(maxsize=None)
def load_catalog(path: str = CATALOG_FILE) -> Dict[str, ArrangementClass]:
    """Load the fixed named arrangements, keyed by lower-case name."""
    if not os.path.isfile(path):
        raise CatalogError(f"Catalog file not found: {path}")
    entries: Dict[str, ArrangementClass] = {}
    for name, entry in _read_catalog(path).items():
        if not isinstance(entry, dict):
            raise CatalogError(f"catalog[{name!r}] must be a mapping")
        try:
            entries[str(name).lower()] = arrangement_from_dict(entry)
        except InvalidArrangementError as exc:
            raise CatalogError(f"catalog[{name!r}] is malformed: {exc}") from exc
    logger.debug(f"Loaded {len(entries)} named arrangements from {path}")
    return entries


__all__ = ["load_catalog"]
