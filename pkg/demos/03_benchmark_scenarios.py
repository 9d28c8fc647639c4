"""Small Monte Carlo benchmark across scenario families.

Each scenario is replicated several times with fresh seeds; we record the
mean number of detected change-points (Jhat) and the mean Boysen distances
between estimated and true change-point sets. The no-change suites check
false-positive control: their Jhat should sit near zero.

Runs in about a minute at this scale. Set GRAPHON_CPD_THREADS to use more
worker threads; results are identical at any thread count.
"""

from graphon_cpd import BENCH_CSV_HEADER, ScenarioSpec, monte_carlo

scenarios = [
    "DSBM-I", "DSBM-II", "DSBM-IV", "MDSBM-I",
    "NOCHANGE-SBM-III", "NOCHANGE-GRAPHON-II",
]

print(BENCH_CSV_HEADER)
for sid in scenarios:
    row = monte_carlo(ScenarioSpec(id=sid, n=100, T=100, seed=1), reps=5)
    print(row.csv_line())
