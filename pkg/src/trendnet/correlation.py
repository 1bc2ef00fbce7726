"""Tie-aware Spearman rank correlation and the pairwise location matrix.

Spearman's rho is computed as the Pearson correlation of average ranks.  The
popular 1 - 6*sum(d^2)/(n*(n^2-1)) shortcut is only equivalent on tie-free
data; integer search volumes over a couple of months guarantee ties, so the
rank-then-Pearson route is the one implemented here.
"""

from __future__ import annotations

import io
import json
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import GridMismatch, InvalidMatrix, InvalidValue, ZeroVariance
from .timeseries import Panel

POLICY_ERROR = "error"
POLICY_DROP = "drop"
CONSTANT_POLICIES = (POLICY_ERROR, POLICY_DROP)


@dataclass(frozen=True)
class CorrelationMatrix:
    """Symmetric rho matrix with its geo labels, in canonical label order."""

    labels: tuple[str, ...]
    rho: tuple[tuple[float, ...], ...]
    method: str = "spearman"

    def __post_init__(self):
        n = len(self.labels)
        object.__setattr__(self, "rho", tuple(tuple(float(v) for v in row) for row in self.rho))
        if len(self.rho) != n or any(len(row) != n for row in self.rho):
            raise InvalidMatrix(f"rho must be {n}x{n}")
        for i in range(n):
            if self.rho[i][i] != 1.0:
                raise InvalidMatrix(f"diagonal entry for {self.labels[i]} is {self.rho[i][i]}, not 1")
            for j in range(n):
                v = self.rho[i][j]
                if not math.isfinite(v) or abs(v) > 1.0 + 1e-12:
                    raise InvalidMatrix(f"rho[{i}][{j}] = {v} outside [-1, 1]")
                if self.rho[i][j] != self.rho[j][i]:
                    raise InvalidMatrix(
                        f"asymmetry at ({self.labels[i]}, {self.labels[j]})"
                    )

    def __len__(self) -> int:
        return len(self.labels)

    def value(self, a: str, b: str) -> float:
        return self.rho[self.labels.index(a)][self.labels.index(b)]


def average_ranks(values: Sequence[float]) -> tuple[float, ...]:
    """1-based ranks; tied values share the mean of the positions they span."""
    arr = np.asarray(values, dtype=np.float64)
    if arr.size == 0:
        raise InvalidValue("cannot rank an empty sequence")
    if not np.all(np.isfinite(arr)):
        raise InvalidValue("cannot rank non-finite values")
    order = np.argsort(arr, kind="stable")
    ranks = np.empty(arr.size, dtype=np.float64)
    i = 0
    while i < arr.size:
        j = i
        while j + 1 < arr.size and arr[order[j + 1]] == arr[order[i]]:
            j += 1
        ranks[order[i : j + 1]] = 0.5 * (i + j) + 1.0
        i = j + 1
    return tuple(ranks.tolist())


def _pearson(x: np.ndarray, y: np.ndarray) -> float:
    dx = x - x.mean()
    dy = y - y.mean()
    denom = math.sqrt(float(np.dot(dx, dx)) * float(np.dot(dy, dy)))
    return float(np.dot(dx, dy)) / denom


def spearman_rho(x: Sequence[float], y: Sequence[float]) -> float:
    """Spearman correlation of two equal-length sequences (>= 3 points)."""
    if len(x) != len(y):
        raise GridMismatch(f"length mismatch: {len(x)} vs {len(y)}")
    if len(x) < 3:
        raise GridMismatch(f"need at least 3 paired observations, got {len(x)}")
    rx = np.asarray(average_ranks(x))
    ry = np.asarray(average_ranks(y))
    if np.all(rx == rx[0]):
        raise ZeroVariance("first sequence is constant")
    if np.all(ry == ry[0]):
        raise ZeroVariance("second sequence is constant")
    return _pearson(rx, ry)


def _is_constant(values: Sequence[float]) -> bool:
    return min(values) == max(values)


def correlation_matrix(panel: Panel, constant_policy: str = POLICY_ERROR) -> CorrelationMatrix:
    """All pairwise Spearman correlations of a panel's series.

    Each unordered pair is computed once and mirrored, so the matrix is
    symmetric by construction.  `constant_policy` decides what happens to
    zero-variance series: "error" raises naming the geo, "drop" removes them
    and shrinks the matrix.
    """
    if constant_policy not in CONSTANT_POLICIES:
        raise InvalidValue(f"constant_policy must be one of {CONSTANT_POLICIES}")
    if len(panel) < 2:
        raise GridMismatch(f"correlation needs at least 2 series, got {len(panel)}")
    if panel.grid.length < 3:
        raise GridMismatch(f"correlation needs grid length >= 3, got {panel.grid.length}")

    members = list(panel.series)
    constant = [s.geo for s in members if _is_constant(s.values)]
    if constant:
        if constant_policy == POLICY_ERROR:
            raise ZeroVariance(f"constant series for {', '.join(constant)}", geo=constant[0])
        members = [s for s in members if s.geo not in set(constant)]
        if len(members) < 2:
            raise ZeroVariance(
                f"fewer than 2 series left after dropping constant geos {constant}",
                geo=constant[0],
            )

    labels = tuple(s.geo for s in members)
    ranks = [np.asarray(average_ranks(s.values)) for s in members]
    n = len(members)
    rho = [[1.0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = _pearson(ranks[i], ranks[j])
            rho[i][j] = v
            rho[j][i] = v
    return CorrelationMatrix(labels, tuple(tuple(row) for row in rho))


def matrix_to_csv(matrix: CorrelationMatrix) -> str:
    """Header row plus one labeled row per geo, full float precision."""
    out = io.StringIO()
    out.write("geo," + ",".join(matrix.labels) + "\n")
    for label, row in zip(matrix.labels, matrix.rho):
        out.write(label + "," + ",".join(repr(v) for v in row) + "\n")
    return out.getvalue()


def matrix_to_json(matrix: CorrelationMatrix) -> str:
    doc = {
        "method": matrix.method,
        "labels": list(matrix.labels),
        "values": [list(row) for row in matrix.rho],
    }
    return json.dumps(doc, indent=2) + "\n"


def matrix_from_json(text: str) -> CorrelationMatrix:
    doc = json.loads(text)
    return CorrelationMatrix(
        labels=tuple(doc["labels"]),
        rho=tuple(tuple(row) for row in doc["values"]),
        method=doc.get("method", "spearman"),
    )
