"""Manifest-described datasets: many CSV exports loaded into one panel.

A dataset is a JSON manifest next to its CSV files.  Relative paths resolve
against the manifest's directory, so a dataset directory can be moved or
shipped as package data (the bundled 54-location fixture works this way).
"""

from __future__ import annotations

import datetime as dt
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from .errors import DuplicateLocation, InvalidValue, KeywordMismatch, ParseError, TrendNetError
from .timeseries import LocationSeries, Panel, align_panel, normalize_rsv
from .trends_csv import (
    RegionSnapshot,
    parse_interest_by_region_csv,
    parse_interest_over_time_csv,
)

DATA_DIR = Path(__file__).resolve().parent / "data"


def bundled_fixture_manifest() -> Path:
    """Path to the manifest of the bundled 54-location dataset."""
    return DATA_DIR / "fixture" / "manifest.json"


@dataclass(frozen=True)
class DatasetManifest:
    """Index of one dataset: time exports per geo plus windowed region exports.

    `reference_file` points at the global (or otherwise privileged) series
    used for onset trimming and the overview line chart; it is not part of
    the location panel.
    """

    keyword: str
    time_files: tuple[tuple[str, Path], ...]
    region_files: tuple[tuple[tuple[dt.date, dt.date], Path], ...]
    onset_threshold: float
    reference_file: Optional[tuple[str, Path]] = None
    notes: str = ""

    def __post_init__(self):
        if not 0.0 < self.onset_threshold <= 100.0:
            raise InvalidValue(
                f"onset_threshold must be in (0, 100], got {self.onset_threshold}"
            )
        geos = [geo for geo, _ in self.time_files]
        for geo in geos:
            if geos.count(geo) > 1:
                raise DuplicateLocation(f"manifest lists geo {geo!r} twice")
        for path in self._all_paths():
            if not path.is_file():
                raise ParseError(f"manifest references missing file {path}")

    def _all_paths(self) -> list[Path]:
        paths = [path for _, path in self.time_files]
        paths.extend(path for _, path in self.region_files)
        if self.reference_file is not None:
            paths.append(self.reference_file[1])
        return paths


def load_manifest(path: Path | str) -> DatasetManifest:
    path = Path(path)
    try:
        doc = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise ParseError(f"{path}: not valid JSON ({e})") from e
    base = path.resolve().parent

    def _resolve(rel: str) -> Path:
        p = Path(rel)
        return p if p.is_absolute() else base / p

    try:
        time_files = tuple(
            (entry["geo"], _resolve(entry["path"])) for entry in doc["time_files"]
        )
        region_files = tuple(
            (
                (
                    dt.date.fromisoformat(entry["window"][0]),
                    dt.date.fromisoformat(entry["window"][1]),
                ),
                _resolve(entry["path"]),
            )
            for entry in doc.get("region_files", [])
        )
        reference = None
        if doc.get("reference_file") is not None:
            reference = (doc["reference_file"]["geo"], _resolve(doc["reference_file"]["path"]))
        return DatasetManifest(
            keyword=doc["keyword"],
            time_files=time_files,
            region_files=region_files,
            onset_threshold=float(doc.get("onset_threshold", 1.0)),
            reference_file=reference,
            notes=doc.get("notes", ""),
        )
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError(f"{path}: malformed manifest ({e})") from e


def _load_series(geo: str, path: Path, keyword: str) -> LocationSeries:
    try:
        doc = parse_interest_over_time_csv(path.read_text(encoding="utf-8"))
    except TrendNetError as e:
        raise type(e)(f"{path}: {e}") from e
    if doc.keyword.lower() != keyword.lower():
        raise KeywordMismatch(
            f"{path}: export is for {doc.keyword!r}, manifest says {keyword!r}"
        )
    return LocationSeries(geo, keyword, doc.grid, normalize_rsv(doc.values))


def load_dataset(manifest: DatasetManifest) -> tuple[Panel, list[RegionSnapshot]]:
    """Parse, normalize, and align every time file; parse every region file.

    Snapshots come back sorted by window start.  The result does not depend
    on the order the manifest happened to list its files in.
    """
    series = [
        _load_series(geo, path, manifest.keyword) for geo, path in manifest.time_files
    ]
    panel = align_panel(series)

    snapshots = []
    for window, path in manifest.region_files:
        try:
            snapshots.append(parse_interest_by_region_csv(path.read_text(encoding="utf-8"), window))
        except TrendNetError as e:
            raise type(e)(f"{path}: {e}") from e
    snapshots.sort(key=lambda s: (s.window[0], s.window[1]))
    return panel, snapshots


def load_reference(manifest: DatasetManifest) -> Optional[LocationSeries]:
    """The manifest's reference series (normalized), or None if not declared."""
    if manifest.reference_file is None:
        return None
    geo, path = manifest.reference_file
    return _load_series(geo, path, manifest.keyword)
