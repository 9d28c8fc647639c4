"""Dense symmetric matrix containers, matrix distances and window averaging.

Adjacency sequences are stored as numpy arrays of shape (T, n, n) with binary
entries. Time indices are 1-based throughout the library to keep the window
arithmetic aligned with the usual scan-statistic conventions; only the edge-list
CSV format (see cliio) is 0-based.
"""

from __future__ import annotations

import numpy as np

SYM_TOL = 1e-12


def as_adjacency_sequence(arr) -> np.ndarray:
    """Validate and return a (T, n, n) array of symmetric binary snapshots."""
    seq = np.asarray(arr)
    if seq.ndim != 3 or seq.shape[1] != seq.shape[2]:
        raise ValueError(f"expected shape (T, n, n), got {seq.shape}")
    if seq.shape[0] < 1:
        raise ValueError("need at least one snapshot")
    if not np.isin(seq, (0, 1)).all():
        raise ValueError("adjacency entries must be 0 or 1")
    if not (seq == seq.transpose(0, 2, 1)).all():
        raise ValueError("snapshots must be symmetric")
    return seq


def check_symmetric(mat: np.ndarray, tol: float = SYM_TOL) -> np.ndarray:
    mat = np.asarray(mat, dtype=float)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise ValueError(f"expected a square matrix, got {mat.shape}")
    if np.abs(mat - mat.T).max(initial=0.0) > tol:
        raise ValueError("matrix is not symmetric within tolerance")
    return mat


def average_adjacency(seq: np.ndarray, t_from: int, t_to: int) -> np.ndarray:
    """Mean of the snapshots over the inclusive 1-based window [t_from, t_to]."""
    T = seq.shape[0]
    if not (1 <= t_from <= t_to <= T):
        raise IndexError(f"window [{t_from}, {t_to}] out of range for T={T}")
    window = seq[t_from - 1 : t_to]
    # 0/1 entries: the float64 running sum is exact, so the result does not
    # depend on how the window is later split (see sliding-window use in cpd).
    return np.add.reduce(window, axis=0, dtype=float) / (t_to - t_from + 1)


def _check_same_shape(p: np.ndarray, q: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    if p.shape != q.shape:
        raise ValueError(f"shape mismatch: {p.shape} vs {q.shape}")
    return p, q


def dist_2inf(p: np.ndarray, q: np.ndarray) -> float:
    """Normalized 2,inf distance: max over rows i of n^{-1/2} ||P_i - Q_i||_2."""
    p, q = _check_same_shape(p, q)
    n = p.shape[0]
    row_norms = np.sqrt(np.square(p - q).sum(axis=1))
    return float(row_norms.max() / np.sqrt(n))


def dist_frob(p: np.ndarray, q: np.ndarray) -> float:
    """Normalized Frobenius distance: n^{-1} ||P - Q||_F."""
    p, q = _check_same_shape(p, q)
    n = p.shape[0]
    return float(np.linalg.norm(p - q) / n)
