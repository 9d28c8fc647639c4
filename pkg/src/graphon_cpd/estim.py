"""Link-probability estimation from a window of snapshots.

Two estimators are provided: neighborhood smoothing over the time-averaged
adjacency matrix (the primary method) and a spectral truncation alternative
(``musvt_estimate``) that thresholds eigenvalues of the averaged matrix.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .netcore import average_adjacency

# Chunk size bound (floats) for the row-difference workspace in
# pairwise_distance; keeps peak memory around 300 MB for large n.
_CHUNK_FLOATS = 2**22


@dataclass(frozen=True)
class EstimatorConfig:
    b0: float = 3.0
    eta: float = 0.01

    def __post_init__(self):
        if self.b0 <= 0:
            raise ValueError("b0 must be positive")
        if not 0 < self.eta < 1:
            raise ValueError("eta must be in (0, 1)")


def pairwise_distance(abar: np.ndarray) -> np.ndarray:
    """Node distance matrix: D[i, i'] = max_{k != i, i'} |G[i,k] - G[i',k]|,
    where G = abar @ abar / n. Diagonal is 0."""
    abar = np.asarray(abar, dtype=float)
    n = abar.shape[0]
    if n < 3:
        raise ValueError("need n >= 3 so the max over k != i, i' is nonempty")
    g = abar @ abar / n
    dist = np.empty((n, n))
    chunk = max(1, _CHUNK_FLOATS // (n * n))
    idx = np.arange(n)
    for start in range(0, n, chunk):
        stop = min(start + chunk, n)
        # diff[a, i', k] = |G[start+a, k] - G[i', k]|
        diff = np.abs(g[start:stop, None, :] - g[None, :, :])
        for a in range(stop - start):
            diff[a, :, start + a] = -np.inf  # exclude k = i
        diff[:, idx, idx] = -np.inf  # exclude k = i'
        dist[start:stop] = diff.max(axis=2)
    dist[idx, idx] = 0.0
    return dist


def neighborhoods(dist: np.ndarray, q: float) -> list[np.ndarray]:
    """Per-node neighbor sets from the lower empirical q-quantile of each
    node's distances to the other nodes. Ties at the cutoff are included,
    so every set has at least max(1, ceil(q * (n - 1))) members."""
    if not 0 < q <= 1:
        raise ValueError("q must be in (0, 1]")
    dist = np.asarray(dist, dtype=float)
    n = dist.shape[0]
    m = max(1, math.ceil(q * (n - 1)))
    nbhd = []
    for i in range(n):
        others = np.delete(np.arange(n), i)
        d = dist[i, others]
        cutoff = np.partition(d, m - 1)[m - 1]
        nbhd.append(others[d <= cutoff])
    return nbhd


def mnbs_q(n: int, omega: float, b0: float) -> float:
    """Neighborhood quantile b0 * log(n) / (sqrt(n) * omega), clamped to 1."""
    if n < 3 or omega <= 0 or b0 <= 0:
        raise ValueError("require n >= 3, omega > 0, b0 > 0")
    return min(1.0, b0 * math.log(n) / (math.sqrt(n) * omega))


def mnbs_smooth(abar: np.ndarray, nbhd: list[np.ndarray]) -> np.ndarray:
    """Average rows of abar over each node's neighbor set, then symmetrize."""
    abar = np.asarray(abar, dtype=float)
    n = abar.shape[0]
    if len(nbhd) != n:
        raise ValueError("neighbor sets do not match matrix size")
    raw = np.empty((n, n))
    for i, members in enumerate(nbhd):
        if len(members) == 0:
            raise ValueError(f"empty neighborhood for node {i}")
        raw[i] = np.add.reduce(abar[np.sort(members)], axis=0) / len(members)
    return (raw + raw.T) / 2


def smoothing_bandwidth(n: int, window: int) -> float:
    """omega = min(sqrt(n), sqrt(window * log n))."""
    return min(math.sqrt(n), math.sqrt(window * math.log(n)))


def mnbs_from_average(abar: np.ndarray, window: int, cfg: EstimatorConfig) -> np.ndarray:
    """Neighborhood-smoothing estimate given a precomputed window average."""
    n = abar.shape[0]
    q = mnbs_q(n, smoothing_bandwidth(n, window), cfg.b0)
    nbhd = neighborhoods(pairwise_distance(abar), q)
    return mnbs_smooth(abar, nbhd)


def mnbs_estimate(
    seq: np.ndarray, t_from: int, t_to: int, cfg: EstimatorConfig | None = None
) -> np.ndarray:
    """Full estimation chain over the 1-based window [t_from, t_to]."""
    cfg = cfg or EstimatorConfig()
    abar = average_adjacency(seq, t_from, t_to)
    return mnbs_from_average(abar, t_to - t_from + 1, cfg)


def musvt_estimate(abar: np.ndarray, window: int, eta: float = 0.01) -> np.ndarray:
    """Spectral estimate: keep eigencomponents of abar with |eigenvalue| >=
    (2 + eta) * sqrt(n / window), reconstruct and clip entries to [0, 1]."""
    if window < 1:
        raise ValueError("window must be >= 1")
    if not 0 < eta < 1:
        raise ValueError("eta must be in (0, 1)")
    abar = np.asarray(abar, dtype=float)
    n = abar.shape[0]
    evals, evecs = np.linalg.eigh(abar)
    keep = np.abs(evals) >= (2 + eta) * math.sqrt(n / window)
    recon = (evecs[:, keep] * evals[keep]) @ evecs[:, keep].T
    return np.clip(recon, 0.0, 1.0)
