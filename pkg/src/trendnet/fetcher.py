"""Cached, rate-limited fetching behind a pluggable transport.

No live Google Trends client ships with this package: the endpoint is
unofficial and volatile.  What ships is the contract around it: a transport
is any object with ``fetch(request) -> bytes``, and CachedFetcher wraps it
with an on-disk cache, a global minimum inter-request delay, and bounded
exponential backoff.  A filesystem replay transport is provided so pipelines
stay reproducible offline.

Cache layout: one subdirectory per hash prefix, raw response bytes next to a
JSON sidecar recording the request, fetch time, and content hash.  Responses
are persisted verbatim before parsing, so a cache survives parser changes.
"""

from __future__ import annotations

import datetime as dt
import hashlib
import json
import os
import threading
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Protocol

from .errors import CacheError, FetchFailed
from .timeseries import DAILY
from .trends_csv import TrendsTimeCsv, parse_interest_over_time_csv

CACHE_DIR_ENV = "TRENDNET_CACHE_DIR"

# Transport access is serialized process-wide; the rate limit applies across
# all CachedFetcher instances, not per instance.
_transport_lock = threading.Lock()
_last_transport_call = [float("-inf")]


def _default_cache_dir() -> Path:
    env = os.environ.get(CACHE_DIR_ENV)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "trendnet"


@dataclass(frozen=True)
class TrendsRequest:
    """One interest-over-time request."""

    keyword: str
    geo: str
    start: dt.date
    end: dt.date
    step_days: int = DAILY

    def cache_key(self) -> str:
        blob = "|".join(
            ["trendnet-v1", self.keyword, self.geo, self.start.isoformat(),
             self.end.isoformat(), str(self.step_days)]
        )
        return hashlib.sha256(blob.encode("utf-8")).hexdigest()


class Transport(Protocol):
    def fetch(self, request: TrendsRequest) -> bytes: ...


class ReplayTransport:
    """Serves canned responses from a directory; the offline stand-in.

    The file for a request is located by formatting `template` with the
    request's fields (default: just "<geo>.csv", which matches the bundled
    fixture layout).
    """

    def __init__(self, root: Path | str, template: str = "{geo}.csv"):
        self.root = Path(root)
        self.template = template
        self.calls = 0

    def fetch(self, request: TrendsRequest) -> bytes:
        self.calls += 1
        name = self.template.format(
            keyword=request.keyword,
            geo=request.geo,
            start=request.start.isoformat(),
            end=request.end.isoformat(),
            step_days=request.step_days,
        )
        return (self.root / name).read_bytes()


class CachedFetcher:
    """Wraps a transport with caching, rate limiting, and retries.

    The minimum inter-request delay and the backoff schedule live here, not
    in transports, so every transport gets the same politeness for free.
    `sleep` and `clock` are injectable for tests.
    """

    def __init__(
        self,
        transport: Transport,
        cache_dir: Path | str | None = None,
        min_delay: float = 1.0,
        max_attempts: int = 3,
        backoff_base: float = 0.5,
        backoff_cap: float = 8.0,
        sleep: Callable[[float], None] = time.sleep,
        clock: Callable[[], float] = time.monotonic,
    ):
        if max_attempts < 1:
            raise ValueError("max_attempts must be >= 1")
        self.transport = transport
        self.cache_dir = Path(cache_dir) if cache_dir is not None else _default_cache_dir()
        self.min_delay = min_delay
        self.max_attempts = max_attempts
        self.backoff_base = backoff_base
        self.backoff_cap = backoff_cap
        self._sleep = sleep
        self._clock = clock
        self.hits = 0
        self.misses = 0
        self.quarantined = 0
        self.backoff_delays: list[float] = []

    def _entry_paths(self, request: TrendsRequest) -> tuple[Path, Path]:
        key = request.cache_key()
        bucket = self.cache_dir / key[:2]
        return bucket / f"{key}.csv", bucket / f"{key}.json"

    def _read_cache(self, request: TrendsRequest) -> bytes | None:
        body_path, meta_path = self._entry_paths(request)
        if not (body_path.is_file() and meta_path.is_file()):
            return None
        body = body_path.read_bytes()
        try:
            meta = json.loads(meta_path.read_text(encoding="utf-8"))
            stored_hash = meta["sha256"]
        except (json.JSONDecodeError, KeyError):
            stored_hash = None
        if stored_hash == hashlib.sha256(body).hexdigest():
            return body
        self._quarantine(body_path, meta_path)
        return None

    def _quarantine(self, body_path: Path, meta_path: Path) -> None:
        try:
            for p in (body_path, meta_path):
                if p.is_file():
                    p.rename(p.with_suffix(p.suffix + ".quarantined"))
        except OSError as e:
            raise CacheError(f"could not quarantine corrupt cache entry {body_path}: {e}") from e
        self.quarantined += 1

    def _write_cache(self, request: TrendsRequest, body: bytes) -> None:
        body_path, meta_path = self._entry_paths(request)
        body_path.parent.mkdir(parents=True, exist_ok=True)
        meta = {
            "keyword": request.keyword,
            "geo": request.geo,
            "start": request.start.isoformat(),
            "end": request.end.isoformat(),
            "step_days": request.step_days,
            "fetched_at": dt.datetime.now(dt.timezone.utc).isoformat(),
            "sha256": hashlib.sha256(body).hexdigest(),
        }
        tmp = body_path.with_suffix(".tmp")
        tmp.write_bytes(body)
        tmp.rename(body_path)
        meta_path.write_text(json.dumps(meta, indent=2) + "\n", encoding="utf-8")

    def _call_transport(self, request: TrendsRequest) -> bytes:
        with _transport_lock:
            last_error = None
            for attempt in range(self.max_attempts):
                wait = self.min_delay - (self._clock() - _last_transport_call[0])
                if wait > 0:
                    self._sleep(wait)
                try:
                    body = self.transport.fetch(request)
                    _last_transport_call[0] = self._clock()
                    return body
                except Exception as e:
                    _last_transport_call[0] = self._clock()
                    last_error = e
                    if attempt + 1 < self.max_attempts:
                        delay = min(self.backoff_base * (2.0 ** attempt), self.backoff_cap)
                        self.backoff_delays.append(delay)
                        self._sleep(delay)
            raise FetchFailed(
                f"transport failed {self.max_attempts} times for "
                f"({request.keyword!r}, {request.geo}): {last_error}"
            ) from last_error

    def fetch(self, request: TrendsRequest) -> TrendsTimeCsv:
        """Return the parsed series for a request, fetching at most once.

        Cache hits never touch the transport; misses persist the raw response
        before parsing, so the same key is never fetched twice in a process
        (or ever again, while the cache directory survives).
        """
        body = self._read_cache(request)
        if body is not None:
            self.hits += 1
            return parse_interest_over_time_csv(body.decode("utf-8"))
        body = self._call_transport(request)
        self._write_cache(request, body)
        self.misses += 1
        return parse_interest_over_time_csv(body.decode("utf-8"))


def cached_fetch(
    request: TrendsRequest,
    fetcher: Transport,
    cache_dir: Path | str | None = None,
    **kwargs,
) -> TrendsTimeCsv:
    """One-shot convenience around CachedFetcher."""
    return CachedFetcher(fetcher, cache_dir=cache_dir, **kwargs).fetch(request)
