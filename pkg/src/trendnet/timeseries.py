"""Relative-search-volume time series: date grids, per-location series, panels.

Everything here is an immutable value object; the three operations
(normalize_rsv, align_panel, trim_to_onset) are pure functions, so instances
can be shared freely across threads.
"""

from __future__ import annotations

import datetime as dt
import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import (
    DuplicateLocation,
    EmptySeries,
    GridMismatch,
    InvalidValue,
    KeywordMismatch,
    NoOverlap,
    OnsetNotFound,
)

DAILY = 1
WEEKLY = 7
_STEP_NAMES = {DAILY: "daily", WEEKLY: "weekly"}


def step_name(step_days: int) -> str:
    return _STEP_NAMES.get(step_days, f"{step_days}-day")


@dataclass(frozen=True)
class DateGrid:
    """Uniformly spaced calendar dates: a start, a step in days, a length."""

    start: dt.date
    step_days: int
    length: int

    def __post_init__(self):
        if self.step_days not in _STEP_NAMES:
            raise GridMismatch(
                f"step must be {DAILY} (daily) or {WEEKLY} (weekly), got {self.step_days}"
            )
        if self.length < 1:
            raise GridMismatch(f"grid needs at least one date, got length {self.length}")

    @property
    def end(self) -> dt.date:
        return self.start + dt.timedelta(days=self.step_days * (self.length - 1))

    def dates(self) -> tuple[dt.date, ...]:
        step = dt.timedelta(days=self.step_days)
        return tuple(self.start + i * step for i in range(self.length))

    def index_of(self, day: dt.date) -> int:
        """Position of `day` on this grid; GridMismatch if off-grid."""
        offset = (day - self.start).days
        if offset % self.step_days != 0:
            raise GridMismatch(
                f"{day} is off-phase for a {step_name(self.step_days)} grid starting {self.start}"
            )
        idx = offset // self.step_days
        if not 0 <= idx < self.length:
            raise GridMismatch(f"{day} is outside the grid {self.start}..{self.end}")
        return idx

    def covers(self, other: "DateGrid") -> bool:
        """True when every date of `other` is also a date of this grid."""
        if other.step_days != self.step_days:
            return False
        if (other.start - self.start).days % self.step_days != 0:
            return False
        return self.start <= other.start and other.end <= self.end

    def suffix(self, index: int) -> "DateGrid":
        """The sub-grid starting at `index`."""
        if not 0 <= index < self.length:
            raise GridMismatch(f"suffix index {index} outside grid of length {self.length}")
        return DateGrid(
            self.start + dt.timedelta(days=self.step_days * index),
            self.step_days,
            self.length - index,
        )


GEO_WORLD = "WORLD"


def _check_geo(geo: str) -> None:
    if geo == GEO_WORLD:
        return
    if len(geo) == 2 and geo.isalpha() and geo.isupper():
        return
    raise InvalidValue(f"geo must be an ISO 3166-1 alpha-2 code or {GEO_WORLD!r}, got {geo!r}")


@dataclass(frozen=True)
class LocationSeries:
    """One geography's relative search volume for one keyword on one grid."""

    geo: str
    keyword: str
    grid: DateGrid
    values: tuple[float, ...]

    def __post_init__(self):
        _check_geo(self.geo)
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))
        if len(self.values) != self.grid.length:
            raise GridMismatch(
                f"{self.geo}: {len(self.values)} values on a {self.grid.length}-date grid"
            )
        for i, v in enumerate(self.values):
            if not math.isfinite(v):
                raise InvalidValue(f"{self.geo}: non-finite value at index {i}")
            if not 0.0 <= v <= 100.0:
                raise InvalidValue(f"{self.geo}: value {v} at index {i} outside [0, 100]")

    def value_on(self, day: dt.date) -> float:
        return self.values[self.grid.index_of(day)]

    def crop(self, grid: DateGrid) -> "LocationSeries":
        """Restriction of this series to a covered sub-grid."""
        if not self.grid.covers(grid):
            raise GridMismatch(f"{self.geo}: series grid does not cover {grid.start}..{grid.end}")
        lo = self.grid.index_of(grid.start)
        return LocationSeries(self.geo, self.keyword, grid, self.values[lo : lo + grid.length])


@dataclass(frozen=True)
class OnsetMeta:
    """Record of an applied onset trim."""

    date: dt.date
    threshold: float
    reference_geo: str


@dataclass(frozen=True)
class Panel:
    """Date-aligned series for several locations, in canonical geo order."""

    grid: DateGrid
    series: tuple[LocationSeries, ...]
    onset: Optional[OnsetMeta] = None

    def __post_init__(self):
        ordered = tuple(sorted(self.series, key=lambda s: s.geo))
        object.__setattr__(self, "series", ordered)
        if not ordered:
            raise EmptySeries("panel needs at least one series")
        seen = set()
        for s in ordered:
            if s.geo in seen:
                raise DuplicateLocation(f"duplicate geo {s.geo!r} in panel")
            seen.add(s.geo)
            if s.grid != self.grid:
                raise GridMismatch(f"{s.geo}: series grid differs from panel grid")
        keywords = {s.keyword for s in ordered}
        if len(keywords) > 1:
            raise KeywordMismatch(f"panel mixes keywords {sorted(keywords)}")

    @property
    def geos(self) -> tuple[str, ...]:
        return tuple(s.geo for s in self.series)

    @property
    def keyword(self) -> str:
        return self.series[0].keyword

    def __len__(self) -> int:
        return len(self.series)

    def series_for(self, geo: str) -> LocationSeries:
        for s in self.series:
            if s.geo == geo:
                return s
        raise KeyError(geo)


def normalize_rsv(raw: Sequence[float]) -> tuple[float, ...]:
    """Scale a non-negative series so its maximum is exactly 100.

    An all-zero series stays all zero.  The scaling is order preserving, so
    ranks (and hence Spearman correlations) are unchanged.
    """
    values = tuple(float(v) for v in raw)
    if not values:
        raise EmptySeries("cannot normalize an empty series")
    for i, v in enumerate(values):
        if not math.isfinite(v):
            raise InvalidValue(f"non-finite value at index {i}")
        if v < 0:
            raise InvalidValue(f"negative value {v} at index {i}")
    peak = max(values)
    if peak == 0.0:
        return values
    # v/peak is exactly 1.0 at the peak, so max(output) == 100.0 exactly.
    return tuple(100.0 * (v / peak) for v in values)


def align_panel(series_set: Iterable[LocationSeries]) -> Panel:
    """Crop a collection of series to their common date range and build a Panel.

    The result is independent of input order: series are sorted by geo and the
    output grid is the intersection of the input ranges.
    """
    members = list(series_set)
    if len(members) < 2:
        raise EmptySeries(f"panel alignment needs at least 2 series, got {len(members)}")

    geos = [s.geo for s in members]
    for geo in geos:
        if geos.count(geo) > 1:
            raise DuplicateLocation(f"duplicate geo {geo!r}")

    steps = {s.grid.step_days for s in members}
    if len(steps) > 1:
        raise GridMismatch(f"mixed grid steps: {sorted(steps)}")
    step = steps.pop()

    start = max(s.grid.start for s in members)
    end = min(s.grid.end for s in members)
    if start > end:
        raise NoOverlap(f"date ranges do not overlap (latest start {start}, earliest end {end})")
    for s in members:
        if (start - s.grid.start).days % step != 0:
            raise NoOverlap(f"{s.geo}: {step_name(step)} grid is off-phase with the others")
    # Shrink end onto the shared phase.
    span = (end - start).days
    length = span // step + 1
    grid = DateGrid(start, step, length)

    return Panel(grid, tuple(s.crop(grid) for s in members))


def trim_to_onset(panel: Panel, reference: LocationSeries, threshold: float) -> Panel:
    """Crop a panel to start at the first date the reference reaches `threshold`.

    The reference grid must cover the panel's date range (it may extend beyond
    it), which makes the trim idempotent: re-trimming with the same reference
    and threshold is a no-op.
    """
    if not 0.0 < threshold <= 100.0:
        raise InvalidValue(f"onset threshold must be in (0, 100], got {threshold}")
    if not reference.grid.covers(panel.grid):
        raise GridMismatch(
            f"reference {reference.geo} does not cover the panel range "
            f"{panel.grid.start}..{panel.grid.end}"
        )
    for idx, day in enumerate(panel.grid.dates()):
        if reference.value_on(day) >= threshold:
            grid = panel.grid.suffix(idx)
            onset = OnsetMeta(grid.start, threshold, reference.geo)
            return Panel(grid, tuple(s.crop(grid) for s in panel.series), onset)
    raise OnsetNotFound(
        f"reference {reference.geo} never reaches {threshold} within "
        f"{panel.grid.start}..{panel.grid.end}"
    )
