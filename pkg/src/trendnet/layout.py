"""Seeded force-directed layout (Fruchterman-Reingold style).

Positions depend only on the node order, the edge set, the seed, and the
iteration count, which makes tree renders byte-reproducible.  Nodes repel
with k^2/d, edge endpoints attract with d^2/k, displacement is capped by a
linearly cooling temperature.
"""

from __future__ import annotations

import random

import numpy as np


def force_layout(
    n_nodes: int,
    edges: list[tuple[int, int]],
    seed: int,
    iterations: int = 150,
) -> np.ndarray:
    """Positions in the unit square for nodes 0..n_nodes-1, shape (n, 2)."""
    if n_nodes == 1:
        return np.array([[0.5, 0.5]])
    rng = random.Random(seed)
    pos = np.array([[rng.random(), rng.random()] for _ in range(n_nodes)])
    k = np.sqrt(1.0 / n_nodes)
    edge_idx = np.array(edges, dtype=np.intp).reshape(-1, 2)

    for step in range(iterations):
        temperature = 0.1 * (1.0 - step / iterations)

        delta = pos[:, None, :] - pos[None, :, :]
        dist = np.sqrt((delta ** 2).sum(axis=-1))
        np.fill_diagonal(dist, 1.0)
        dist = np.maximum(dist, 1e-9)
        repulsion = (k * k) / (dist ** 2)
        np.fill_diagonal(repulsion, 0.0)
        disp = (delta / dist[:, :, None] * repulsion[:, :, None]).sum(axis=1)

        if len(edge_idx):
            span = pos[edge_idx[:, 0]] - pos[edge_idx[:, 1]]
            edge_dist = np.maximum(np.sqrt((span ** 2).sum(axis=-1)), 1e-9)
            pull = (span / edge_dist[:, None]) * (edge_dist ** 2 / k)[:, None]
            np.subtract.at(disp, edge_idx[:, 0], pull)
            np.add.at(disp, edge_idx[:, 1], pull)

        norm = np.maximum(np.sqrt((disp ** 2).sum(axis=-1)), 1e-12)
        step_len = np.minimum(norm, temperature)
        pos = pos + disp / norm[:, None] * step_len[:, None]

    # Rescale into the unit square; a degenerate axis collapses to its middle.
    lo = pos.min(axis=0)
    hi = pos.max(axis=0)
    span = hi - lo
    out = np.empty_like(pos)
    for axis in range(2):
        if span[axis] < 1e-12:
            out[:, axis] = 0.5
        else:
            out[:, axis] = (pos[:, axis] - lo[axis]) / span[axis]
    return out
