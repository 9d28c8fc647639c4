"""Edge-list ingestion, serialization and the command-line surface.

File formats
    edge CSV      header ``t,i,j``; one row per undirected edge occurrence;
                  0-based snapshot index and node ids; duplicates idempotent.
    matrix CSV    n rows of n comma-separated reals.
    report JSON   keys n, T, h, B0, D0, delta0, threshold, scan, local_max,
                  changepoints; floats written with 17 significant digits.
"""

from __future__ import annotations

import argparse
import csv
import sys
from typing import IO

import numpy as np

from .cpd import ChangePointReport, DetectorParams, default_params, detect
from .estim import EstimatorConfig, mnbs_estimate, musvt_estimate
from .evalbench import BENCH_CSV_HEADER, boysen, monte_carlo
from .genmodels import ScenarioSpec, scenario_sequence
from .netcore import as_adjacency_sequence, average_adjacency

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_NUMERIC = 3


class DataError(Exception):
    pass


# --- edge CSV -------------------------------------------------------------

def parse_edge_csv(stream: IO[str], n: int | None = None, T: int | None = None) -> np.ndarray:
    """Read an edge-list CSV into a dense (T, n, n) binary sequence.

    Sizes default to the largest observed id/time plus one; explicit values
    must cover the data.
    """
    reader = csv.reader(stream)
    header = next(reader, None)
    if header is None or [c.strip() for c in header] != ["t", "i", "j"]:
        raise DataError("expected header 't,i,j'")
    records = []
    max_t = -1
    max_node = -1
    for lineno, row in enumerate(reader, start=2):
        if not row or (len(row) == 1 and not row[0].strip()):
            continue
        if len(row) != 3:
            raise DataError(f"line {lineno}: expected 3 fields, got {len(row)}")
        try:
            t, i, j = (int(field) for field in row)
        except ValueError:
            raise DataError(f"line {lineno}: non-integer field in {row}")
        if t < 0 or i < 0 or j < 0:
            raise DataError(f"line {lineno}: negative index in {row}")
        if i > j:
            i, j = j, i
        records.append((t, i, j))
        max_t = max(max_t, t)
        max_node = max(max_node, j)

    inferred_T = max_t + 1
    inferred_n = max_node + 1
    if T is None:
        T = inferred_T
    if n is None:
        n = inferred_n
    if T < inferred_T or n < inferred_n:
        raise DataError(
            f"declared sizes (n={n}, T={T}) below observed (n={inferred_n}, T={inferred_T})"
        )
    if T < 1 or n < 1:
        raise DataError("empty file needs explicit n and T")
    seq = np.zeros((T, n, n), dtype=np.int8)
    for t, i, j in records:
        seq[t, i, j] = 1
        seq[t, j, i] = 1
    return seq


def write_edge_csv(seq: np.ndarray, stream: IO[str]) -> None:
    """Write the canonical edge list: rows sorted by (t, i, j), i <= j."""
    stream.write("t,i,j\n")
    for t in range(seq.shape[0]):
        i_idx, j_idx = np.nonzero(np.triu(seq[t]))
        for i, j in zip(i_idx, j_idx):
            stream.write(f"{t},{i},{j}\n")


# --- JSON with fixed float formatting -------------------------------------

def _json_value(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return format(float(value), ".17g")
    if isinstance(value, str):
        return '"' + value.replace("\\", "\\\\").replace('"', '\\"') + '"'
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_json_value(v) for v in value) + "]"
    if isinstance(value, dict):
        items = (f"{_json_value(str(k))}: {_json_value(v)}" for k, v in value.items())
        return "{" + ", ".join(items) + "}"
    raise TypeError(f"cannot serialize {type(value)}")


def dumps_json(obj: dict) -> str:
    return _json_value(obj) + "\n"


def report_to_dict(report: ChangePointReport) -> dict:
    return {
        "n": report.n,
        "T": report.T,
        "h": report.params.h,
        "B0": report.params.b0,
        "D0": report.params.d0,
        "delta0": report.params.delta0,
        "threshold": report.threshold,
        "scan": [
            [int(t), float(v)] for t, v in zip(report.scan.ts, report.scan.values)
        ],
        "local_max": list(report.local_max),
        "changepoints": [
            [int(t), float(v)]
            for t, v in zip(report.changepoints, report.changepoint_values)
        ],
    }


def write_report_json(report: ChangePointReport, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_json(report_to_dict(report)))


def write_matrix_csv(mat: np.ndarray, stream: IO[str]) -> None:
    for row in np.asarray(mat, dtype=float):
        stream.write(",".join(format(v, ".17g") for v in row) + "\n")


# --- CLI ------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphon-cpd",
        description="Dynamic-network change-point detection via smoothed "
        "link-probability estimation",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_detector_flags(p):
        p.add_argument("--h", type=int, default=None, help="window half-width")
        p.add_argument("--B0", type=float, default=3.0)
        p.add_argument("--D0", type=float, default=0.25)
        p.add_argument("--delta0", type=float, default=0.1)

    p = sub.add_parser("detect", help="detect change-points in an edge CSV")
    p.add_argument("input", help="edge CSV path")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--T", type=int, default=None)
    add_detector_flags(p)
    p.add_argument("--out", required=True, help="report JSON path")
    p.add_argument("--scan-out", default=None, help="optional scan CSV path")

    p = sub.add_parser("estimate", help="estimate link probabilities on a window")
    p.add_argument("input")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--T", type=int, default=None)
    p.add_argument("--from", dest="t_from", type=int, required=True,
                   help="window start (1-based, inclusive)")
    p.add_argument("--to", dest="t_to", type=int, required=True)
    p.add_argument("--method", choices=["mnbs", "musvt"], default="mnbs")
    p.add_argument("--B0", type=float, default=3.0)
    p.add_argument("--eta", type=float, default=0.01)
    p.add_argument("--out", required=True, help="matrix CSV path")

    p = sub.add_parser("simulate", help="sample a synthetic scenario")
    p.add_argument("--scenario", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--T", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", required=True, help="edge CSV path")
    p.add_argument("--truth-out", default=None, help="ground-truth JSON path")

    p = sub.add_parser("eval", help="Boysen distances between change-point lists")
    p.add_argument("--est", default="", help="comma-separated estimates")
    p.add_argument("--truth", default="", help="comma-separated true points")
    p.add_argument("--T", type=int, required=True)

    p = sub.add_parser("bench", help="Monte Carlo benchmark of one scenario")
    p.add_argument("--scenario", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--T", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--reps", type=int, required=True)
    add_detector_flags(p)
    p.add_argument("--out", default=None, help="BenchRow CSV path (default stdout)")

    return parser


def _detector_params(args, T: int, n: int) -> DetectorParams:
    base = default_params(T, n)
    h = args.h if args.h is not None else base.h
    return DetectorParams(h=h, b0=args.B0, d0=args.D0, delta0=args.delta0)


def _parse_points(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    return [int(part) for part in text.split(",")]


def _run(args) -> int:
    if args.command == "detect":
        with open(args.input, newline="", encoding="utf-8") as fh:
            seq = parse_edge_csv(fh, n=args.n, T=args.T)
        T, n = seq.shape[0], seq.shape[1]
        params = _detector_params(args, T, n)
        if 2 * params.h > T:
            raise UsageError(f"need 2h <= T, got h={params.h}, T={T}")
        report = detect(seq, params)
        write_report_json(report, args.out)
        if args.scan_out:
            with open(args.scan_out, "w", encoding="utf-8") as fh:
                fh.write("t,D\n")
                for t, v in zip(report.scan.ts, report.scan.values):
                    fh.write(f"{int(t)},{format(float(v), '.17g')}\n")
        return EXIT_OK

    if args.command == "estimate":
        with open(args.input, newline="", encoding="utf-8") as fh:
            seq = parse_edge_csv(fh, n=args.n, T=args.T)
        T = seq.shape[0]
        if not 1 <= args.t_from <= args.t_to <= T:
            raise UsageError(f"window [{args.t_from}, {args.t_to}] invalid for T={T}")
        if args.method == "mnbs":
            est = mnbs_estimate(
                seq, args.t_from, args.t_to, EstimatorConfig(b0=args.B0, eta=args.eta)
            )
        else:
            abar = average_adjacency(seq, args.t_from, args.t_to)
            est = musvt_estimate(abar, args.t_to - args.t_from + 1, args.eta)
        with open(args.out, "w", encoding="utf-8") as fh:
            write_matrix_csv(est, fh)
        return EXIT_OK

    if args.command == "simulate":
        spec = ScenarioSpec(id=args.scenario, n=args.n, T=args.T, seed=args.seed)
        seq, truth = scenario_sequence(spec)
        with open(args.out, "w", encoding="utf-8") as fh:
            write_edge_csv(seq, fh)
        if args.truth_out:
            payload = {
                "scenario": spec.id,
                "n": spec.n,
                "T": spec.T,
                "seed": spec.seed,
                "changepoints": truth.changepoints,
            }
            with open(args.truth_out, "w", encoding="utf-8") as fh:
                fh.write(dumps_json(payload))
        return EXIT_OK

    if args.command == "eval":
        res = boysen(_parse_points(args.est), _parse_points(args.truth), args.T)
        payload = {"xi1": res.xi1, "xi2": res.xi2 if res.xi2 is not None else "-"}
        sys.stdout.write(dumps_json(payload))
        return EXIT_OK

    if args.command == "bench":
        spec = ScenarioSpec(id=args.scenario, n=args.n, T=args.T, seed=args.seed)
        params = _detector_params(args, args.T, args.n)
        row = monte_carlo(spec, args.reps, params)
        text = BENCH_CSV_HEADER + "\n" + row.csv_line() + "\n"
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        return EXIT_OK

    raise UsageError(f"unknown command {args.command!r}")


class UsageError(Exception):
    pass


def cli_main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return _run(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DataError, OSError) as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except (ValueError, IndexError, np.linalg.LinAlgError, FloatingPointError) as exc:
        print(f"numeric error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
