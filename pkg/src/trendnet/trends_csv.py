"""Parsing and re-emitting Google Trends CSV exports.

Two dialects are handled:

* interest over time: a preamble line ("Category: All categories"), a blank
  line, a header "Day,<keyword>: (<geo>)" (or "Week,..."), then one
  "YYYY-MM-DD,<value>" row per date, where <value> is an integer 0..100 or
  the censoring token "<1".
* interest by region: same preamble, a header "Country,<keyword>: (...)",
  then "<region name>,<value>" rows.

"<1" stands for a positive value below one; it parses to 0.5 (the midpoint of
the censored interval).  Rank-based downstream math makes the exact constant
irrelevant, but serialization must round-trip it, so exactly 0.5 maps back to
"<1".
"""

from __future__ import annotations

import datetime as dt
import math
import re
from dataclasses import dataclass, field

from .errors import GridMismatch, InvalidValue, ParseError
from .regions import resolve_region
from .timeseries import DAILY, WEEKLY, DateGrid

CENSORED_TOKEN = "<1"
CENSORED_VALUE = 0.5

_TIME_HEADER = re.compile(r"^(Day|Week),(.+): \((.+)\)$")
_REGION_HEADER = re.compile(r"^([^,]+),(.+): \((.*)\)$")
_DATE = re.compile(r"^\d{4}-\d{2}-\d{2}$")


@dataclass(frozen=True)
class TrendsTimeCsv:
    """A parsed interest-over-time export."""

    keyword: str
    geo: str
    grid: DateGrid
    values: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))
        if len(self.values) != self.grid.length:
            raise GridMismatch(
                f"{len(self.values)} values on a {self.grid.length}-date grid"
            )
        for v in self.values:
            if not 0.0 <= v <= 100.0:
                raise InvalidValue(f"value {v} outside [0, 100]")


@dataclass(frozen=True)
class RegionSnapshot:
    """Per-geography interest for one time window (one choropleth frame).

    Values are renormalized so the busiest geo sits at exactly 100, matching
    how per-window region exports are scaled.  Rows that could not be used
    (unknown region name, blank value) are kept in `warnings`.
    """

    keyword: str
    window: tuple[dt.date, dt.date]
    values: dict[str, float]
    warnings: tuple[str, ...] = field(default=())

    def __post_init__(self):
        start, end = self.window
        if start > end:
            raise InvalidValue(f"window start {start} after end {end}")
        peak = 0.0
        for geo, v in self.values.items():
            if not math.isfinite(v) or not 0.0 <= v <= 100.0:
                raise InvalidValue(f"{geo}: value {v} outside [0, 100]")
            peak = max(peak, v)
        if self.values and peak not in (0.0, 100.0):
            raise InvalidValue(f"snapshot maximum is {peak}, expected 100 (or all zero)")


def _parse_cell(token: str, line_no: int) -> float:
    if token == CENSORED_TOKEN:
        return CENSORED_VALUE
    try:
        value = int(token)
    except ValueError:
        raise ParseError(f"expected an integer or {CENSORED_TOKEN!r}, got {token!r}", line=line_no)
    if not 0 <= value <= 100:
        raise InvalidValue(f"line {line_no}: value {value} outside [0, 100]")
    return float(value)


def _split_lines(text: str) -> list[str]:
    return text.lstrip("﻿").splitlines()


def _find_header(lines: list[str], pattern: re.Pattern) -> tuple[int, re.Match]:
    """Skip the export preamble (anything before the first matching header)."""
    for i, line in enumerate(lines):
        m = pattern.match(line.strip())
        if m:
            return i, m
    raise ParseError("no header row found", line=len(lines))


def parse_interest_over_time_csv(text: str) -> TrendsTimeCsv:
    """Parse an interest-over-time export into a TrendsTimeCsv.

    Dates must be strictly increasing on a uniform daily or weekly step that
    agrees with the header's date column.
    """
    lines = _split_lines(text)
    header_idx, m = _find_header(lines, _TIME_HEADER)
    column, keyword, geo = m.group(1), m.group(2).strip(), m.group(3).strip()
    declared_step = DAILY if column == "Day" else WEEKLY

    dates: list[dt.date] = []
    values: list[float] = []
    for offset, raw in enumerate(lines[header_idx + 1 :], start=header_idx + 2):
        line = raw.strip()
        if not line:
            continue
        try:
            date_part, value_part = line.split(",", 1)
        except ValueError:
            raise ParseError(f"expected 'date,value', got {line!r}", line=offset)
        if not _DATE.match(date_part):
            raise ParseError(f"bad date {date_part!r}", line=offset)
        day = dt.date.fromisoformat(date_part)
        if dates and day <= dates[-1]:
            raise GridMismatch(f"line {offset}: dates not strictly increasing at {day}")
        dates.append(day)
        values.append(_parse_cell(value_part.strip(), offset))

    if not dates:
        raise ParseError("no data rows", line=len(lines))

    if len(dates) > 1:
        step = (dates[1] - dates[0]).days
        for a, b in zip(dates, dates[1:]):
            if (b - a).days != step:
                raise GridMismatch(f"non-uniform step: {a} -> {b} (expected {step} days)")
        if step != declared_step:
            raise GridMismatch(
                f"header says {column!r} but rows are spaced {step} days apart"
            )
    grid = DateGrid(dates[0], declared_step, len(dates))
    return TrendsTimeCsv(keyword, geo, grid, tuple(values))


def serialize_interest_over_time_csv(doc: TrendsTimeCsv) -> str:
    """Emit an export-compatible document (inverse of the parser).

    Integral values are written as integers, values strictly between 0 and 1
    as the "<1" token; anything else has no representation in the dialect and
    raises InvalidValue.
    """
    lines = ["Category: All categories", ""]
    column = "Day" if doc.grid.step_days == DAILY else "Week"
    lines.append(f"{column},{doc.keyword}: ({doc.geo})")
    for day, value in zip(doc.grid.dates(), doc.values):
        if value == int(value):
            cell = str(int(value))
        elif 0.0 < value < 1.0:
            cell = CENSORED_TOKEN
        else:
            raise InvalidValue(f"value {value} has no export representation")
        lines.append(f"{day.isoformat()},{cell}")
    return "\n".join(lines) + "\n"


def parse_interest_by_region_csv(text: str, window: tuple[dt.date, dt.date]) -> RegionSnapshot:
    """Parse an interest-by-region export into a RegionSnapshot.

    Region names are resolved to ISO codes via the bundled table; rows that
    cannot be resolved (or carry a blank value) land in the snapshot's warning
    list instead of being silently dropped.
    """
    lines = _split_lines(text)
    header_idx, m = _find_header(lines, _REGION_HEADER)
    keyword = m.group(2).strip()

    values: dict[str, float] = {}
    warnings: list[str] = []
    saw_rows = False
    for offset, raw in enumerate(lines[header_idx + 1 :], start=header_idx + 2):
        line = raw.strip()
        if not line:
            continue
        name, _, cell = line.rpartition(",")
        if not name:
            raise ParseError(f"expected 'region,value', got {line!r}", line=offset)
        saw_rows = True
        cell = cell.strip()
        name = name.strip()
        if not cell:
            warnings.append(f"line {offset}: no value for {name!r}")
            continue
        code = resolve_region(name)
        if code is None:
            warnings.append(f"line {offset}: unknown region {name!r}")
            continue
        if code in values:
            warnings.append(f"line {offset}: duplicate region {name!r} ({code})")
            continue
        values[code] = _parse_cell(cell, offset)

    if not saw_rows:
        raise ParseError("no data rows", line=len(lines))

    peak = max(values.values(), default=0.0)
    if peak > 0.0:
        values = {geo: 100.0 * (v / peak) for geo, v in values.items()}
    return RegionSnapshot(keyword, window, values, tuple(warnings))
