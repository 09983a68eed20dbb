"""Time graph generation across a range of sizes and fit the growth law.

Prints one table row per run (phase times, edges/s) and, with 3+ distinct
sizes, a non-negative least-squares fit of

    t_total = a + b * n^1.5 * ln(n) + c * m * ln(n)

weighted for relative error. Optionally writes the raw rows as CSV.
"""

import argparse
import csv
import sys

import numpy as np
from scipy.optimize import nnls

from hrgen import GeneratorParams, generate_with_stats


def parse_args(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument(
        "--sizes",
        default="10000,30000,100000,300000,1000000",
        help="comma-separated vertex counts",
    )
    ap.add_argument("--avg-degree", type=float, default=16.0)
    ap.add_argument("--gamma", type=float, default=3.0)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--threads", type=int, default=1)
    ap.add_argument("--reps", type=int, default=1, help="keep the fastest of REPS runs")
    ap.add_argument("--output", help="also write rows to this CSV file")
    return ap.parse_args(argv)


def best_of(params, reps):
    best = None
    for _ in range(reps):
        graph, stats = generate_with_stats(params)
        del graph
        if best is None or stats.t_total_ns < best.t_total_ns:
            best = stats
    return best


def fit_growth(ns, ms, ts):
    """Fitted coefficients and per-point relative residuals."""
    design = np.column_stack(
        [np.ones_like(ns), ns**1.5 * np.log(ns), ms * np.log(ns)]
    )
    weighted = design / ts[:, None]
    scale = weighted.max(axis=0)
    coef, _ = nnls(weighted / scale, np.ones_like(ts))
    fit = (design / scale) @ coef
    return coef / scale, np.abs(fit - ts) / ts


def main(argv=None) -> int:
    args = parse_args(argv)
    sizes = [int(tok) for tok in args.sizes.split(",") if tok.strip()]

    rows = []
    print(f"{'n':>9} {'m':>10} {'sample_s':>9} {'build_s':>8} {'edges_s':>8} "
          f"{'total_s':>8} {'edges/s':>10}")
    for n in sizes:
        stats = best_of(
            GeneratorParams(
                n=n,
                avg_degree=args.avg_degree,
                gamma=args.gamma,
                seed=args.seed,
                threads=args.threads,
            ),
            args.reps,
        )
        total = stats.t_total_ns / 1e9
        row = {
            "n": n,
            "m": stats.m,
            "t_sample_s": stats.t_sample_ns / 1e9,
            "t_build_s": stats.t_build_ns / 1e9,
            "t_edges_s": stats.t_edges_ns / 1e9,
            "t_total_s": total,
            "edges_per_s": stats.m / total,
        }
        rows.append(row)
        print(f"{n:>9} {stats.m:>10} {row['t_sample_s']:>9.3f} "
              f"{row['t_build_s']:>8.3f} {row['t_edges_s']:>8.3f} "
              f"{total:>8.3f} {row['edges_per_s']:>10,.0f}")

    if len(set(sizes)) >= 3:
        ns = np.array([r["n"] for r in rows], dtype=np.float64)
        ms = np.array([r["m"] for r in rows], dtype=np.float64)
        ts = np.array([r["t_total_s"] for r in rows])
        coef, residuals = fit_growth(ns, ms, ts)
        print(f"\nfit: t = {coef[0]:.3g} + {coef[1]:.3g}*n^1.5*ln(n) "
              f"+ {coef[2]:.3g}*m*ln(n)")
        print(f"relative residuals: max {residuals.max():.1%}, "
              f"mean {residuals.mean():.1%}")

    if args.output:
        with open(args.output, "w", newline="") as fh:
            writer = csv.DictWriter(fh, fieldnames=list(rows[0]))
            writer.writeheader()
            writer.writerows(rows)
        print(f"wrote {len(rows)} rows to {args.output}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
