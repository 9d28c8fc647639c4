"""Estimate link probabilities of a static block model from noisy snapshots.

We observe repeated Bernoulli adjacency snapshots of one underlying
probability matrix and compare three estimates of it: the raw time average,
neighborhood smoothing of that average (MNBS), and spectral truncation
(MUSVT). Longer observation windows should help every method, and smoothing
should beat the raw average at any fixed window.
"""

import numpy as np

from graphon_cpd import (
    average_adjacency,
    dist_2inf,
    dist_frob,
    mnbs_estimate,
    musvt_estimate,
    sample_snapshot,
    sbm_matrix,
    snapshot_rng,
)

n, seed = 100, 7
p = sbm_matrix("SBM-I", n)
print(f"truth: SBM-I on {n} nodes, two blocks, probabilities 0.6 / 0.3")

for window in (5, 20, 80):
    seq = np.stack(
        [sample_snapshot(p, snapshot_rng(seed, t)) for t in range(1, window + 1)]
    )
    abar = average_adjacency(seq, 1, window)
    mnbs = mnbs_estimate(seq, 1, window)
    musvt = musvt_estimate(abar, window)
    print(f"\nwindow T = {window}")
    for name, est in (("raw average", abar), ("MNBS", mnbs), ("MUSVT", musvt)):
        print(
            f"  {name:12s} d_2inf = {dist_2inf(est, p):.4f}"
            f"   d_F = {dist_frob(est, p):.4f}"
        )
