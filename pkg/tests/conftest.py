"""Pytest configuration and shared fixtures for curvaudit tests."""
from __future__ import annotations

import os
import random
from math import comb
from typing import Dict, List

import pytest

from curvaudit import config
from curvaudit.core import catalog, pair_count
from curvaudit.geometry import ProjectiveLine
from curvaudit.models import ArrangementClass, ComponentSpec, TVector

EXAMPLES_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "data", "examples")

# Arrangements attaining equality in the line inequality t_2 + 3/4 t_3 >= k + sum (r^2/4 - r) t_r.
EXTREMAL_NAMES = ("icosahedron", "klein", "hesse", "extended_hesse", "wiman")


def example_path(name: str) -> str:
    return os.path.join(EXAMPLES_DIR, name)


@pytest.fixture(autouse=True)
def restore_color():
    """The CLI flips config.USE_COLOR; keep every test starting from the default."""
    saved = config.USE_COLOR
    yield
    config.USE_COLOR = saved


@pytest.fixture
def klein() -> ArrangementClass:
    return catalog("klein")


@pytest.fixture
def wiman() -> ArrangementClass:
    return catalog("wiman")


@pytest.fixture
def extremal_classes() -> Dict[str, ArrangementClass]:
    """Every catalog arrangement with Langer equality, Fermat n = 3..10 included."""
    classes = {name: catalog(name) for name in EXTREMAL_NAMES}
    for n in range(3, 11):
        classes[f"fermat_{n}"] = catalog("fermat", n)
    return classes


@pytest.fixture
def generic_six() -> ArrangementClass:
    return catalog("generic_lines", 6)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240611)


def _random_tvector(rng: random.Random, pair_total: int, r_cap: int) -> TVector:
    """Random solution of sum t_r C(r, 2) = pair_total with r <= r_cap; t_2 absorbs the rest."""
    remaining = pair_total
    counts: Dict[int, int] = {}
    for r in range(r_cap, 2, -1):
        cost = comb(r, 2)
        if remaining < cost:
            continue
        t = rng.randint(0, min(remaining // cost, 3))
        if t:
            counts[r] = t
            remaining -= t * cost
    counts[2] = remaining
    return TVector.of(counts)


def random_valid_class(rng: random.Random, mode: str = "lines", max_count: int = 12) -> ArrangementClass:
    """Random class satisfying the pair-count identity.

    Args:
        rng: Seeded random source
        mode: "lines", "equal_degree", "line_conic" or "mixed"
        max_count: Largest number of components of one degree

    Returns:
        ArrangementClass with a consistent t-vector (not necessarily realizable)
    """
    if mode == "lines":
        components = ComponentSpec.lines(rng.randint(2, max_count))
    elif mode == "equal_degree":
        components = ComponentSpec.equal_degree(rng.randint(1, 3), rng.randint(2, max_count // 2))
    elif mode == "line_conic":
        components = ComponentSpec.line_conic(rng.randint(0, max_count // 2), rng.randint(1, max_count // 2))
    else:
        components = ComponentSpec(((1, rng.randint(1, 4)), (2, rng.randint(1, 3)), (3, rng.randint(1, 2))))
    pairs = pair_count(ArrangementClass(components))
    r_cap = max(2, rng.randint(2, max(2, 2 * components.total_degree // 3)))
    return ArrangementClass(components, _random_tvector(rng, pairs, r_cap))


def random_line_arrangement(rng: random.Random, n: int, bound: int = 20) -> List[ProjectiveLine]:
    """Up to n distinct lines with integer coefficients in [-bound, bound]."""
    lines: Dict[ProjectiveLine, None] = {}
    attempts = 0
    while len(lines) < n and attempts < 50 * n:
        attempts += 1
        coefficients = tuple(rng.randint(-bound, bound) for _ in range(3))
        if coefficients == (0, 0, 0):
            continue
        lines[ProjectiveLine(coefficients)] = None
    return list(lines)
