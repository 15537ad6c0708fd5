"""Custom exceptions for the curvaudit package.

This module defines a hierarchy of exceptions for the error conditions that
can occur while building arrangement classes, evaluating orbifold quantities,
reading input files and running feasibility searches.

An inequality that does not apply to a class is never an error: it is
reported through ``InequalityReport.applicable``.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Optional


class CurvauditError(Exception):
    """Base exception for all curvaudit errors."""
    pass


class InvalidArrangementError(CurvauditError):
    """Raised when a t-vector or component specification is malformed."""
    pass


class IdentityViolationError(InvalidArrangementError):
    """Raised when an operation needs a consistent transversal arrangement."""

    def __init__(self, incidence: int, pairs: int) -> None:
        super().__init__(
            f"not a consistent transversal arrangement: sum t_r*C(r,2) = {incidence} != {pairs} component pairs"
        )
        self.incidence = incidence
        self.pairs = pairs


class DomainError(CurvauditError, ValueError):
    """Base exception for arguments outside the domain of a formula."""
    pass


class MultiplicityError(DomainError):
    """Raised for a multiplicity that cannot describe a singular point."""
    pass


class WeightError(DomainError):
    """Raised for an empty weight vector or a weight outside [0, 1]."""
    pass


class AlphaOutOfRangeError(DomainError):
    """Raised when alpha lies outside the admissible range of an operation."""

    def __init__(self, alpha: Fraction, lo: Fraction, hi: Fraction, what: str = "alpha interval") -> None:
        super().__init__(f"alpha = {alpha} lies outside the {what} [{lo}, {hi}]")
        self.alpha = alpha
        self.lo = lo
        self.hi = hi


class EmptyAlphaIntervalError(DomainError):
    """Raised when 3/D exceeds 2/r_max, so no admissible alpha exists."""

    def __init__(self, lo: Fraction, hi: Fraction) -> None:
        super().__init__(f"alpha interval is empty: 3/D = {lo} > 2/r_max = {hi}")
        self.lo = lo
        self.hi = hi


class CatalogError(CurvauditError):
    """Raised for an unknown catalog name or invalid catalog parameters."""
    pass


class GeometryError(CurvauditError):
    """Base exception for projective geometry errors."""
    pass


class DegenerateLineError(GeometryError):
    """Raised for the zero triple, which defines no line or point."""
    pass


class IdenticalLinesError(GeometryError):
    """Raised when intersecting a line with itself."""
    pass


class DuplicateLineError(GeometryError):
    """Raised when an arrangement lists the same line twice."""
    pass


class ArrangementFormatError(CurvauditError):
    """Raised when an input file cannot be parsed."""

    def __init__(self, message: str, path: Optional[str] = None, line: Optional[int] = None,
                 column: Optional[int] = None) -> None:
        location = ""
        if path:
            location = path
            if line is not None:
                location += f":{line}"
                if column is not None:
                    location += f":{column}"
            location += ": "
        super().__init__(f"{location}{message}")
        self.path = path
        self.line = line
        self.column = column


class SearchError(CurvauditError):
    """Raised for an invalid search specification."""
    pass


__all__ = [
    "CurvauditError",
    "InvalidArrangementError",
    "IdentityViolationError",
    "DomainError",
    "MultiplicityError",
    "WeightError",
    "AlphaOutOfRangeError",
    "EmptyAlphaIntervalError",
    "CatalogError",
    "GeometryError",
    "DegenerateLineError",
    "IdenticalLinesError",
    "DuplicateLineError",
    "ArrangementFormatError",
    "SearchError",
]
