"""Exception types shared across the package.

Every error raised by trendnet derives from TrendNetError, so callers can
catch the whole family with one clause.  Classes that carry structured
context (offending geo, line number, ...) expose it as attributes.
"""


class TrendNetError(Exception):
    """Base class for all trendnet errors."""


class EmptySeries(TrendNetError):
    """An operation received a series with no values."""


class InvalidValue(TrendNetError):
    """A value is negative, non-finite, or outside its documented range."""


class KeywordMismatch(TrendNetError):
    """Series with different keywords cannot share a panel."""


class NoOverlap(TrendNetError):
    """Input date ranges have an empty intersection."""


class DuplicateLocation(TrendNetError):
    """Two series claim the same geo code."""


class GridMismatch(TrendNetError):
    """Date grids disagree in step, phase, or length."""


class OnsetNotFound(TrendNetError):
    """The reference series never reaches the onset threshold."""


class ZeroVariance(TrendNetError):
    """A constant series has no rank correlation."""

    def __init__(self, message, geo=None):
        super().__init__(message)
        self.geo = geo


class InvalidMatrix(TrendNetError):
    """Correlation matrix violates symmetry, unit diagonal, or bounds."""


class Disconnected(TrendNetError):
    """Graph is not connected; no spanning tree exists."""


class LabelMismatch(TrendNetError):
    """Two structures that must share labels do not."""


class UnsupportedFormat(TrendNetError):
    """Requested an export/render format that does not exist."""


class ParseError(TrendNetError):
    """A document could not be parsed."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class FetchFailed(TrendNetError):
    """Transport kept failing after all retries."""


class CacheError(TrendNetError):
    """The on-disk fetch cache is unusable."""
