"""Time rsk against stanley on the two standard sweeps and write CSV files.

    python3 scripts/run_crossover.py --out results/
"""

import argparse
from pathlib import Path

from widthone.bench import BenchPlan, monotone_violations, run_bench, to_csv

SWEEPS = {
    "fixed_d30.csv": BenchPlan("d", 30, (5, 10, 20, 40)),
    "fixed_n5.csv": BenchPlan("n", 5, (100, 1000, 10000)),
}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=Path("results"))
    ap.add_argument("--reps", type=int, default=3)
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    for name, plan in SWEEPS.items():
        plan = BenchPlan(plan.fixed, plan.fixed_value, plan.sweep, repetitions=args.reps)
        rows = run_bench(plan)
        (args.out / name).write_text(to_csv(rows))
        print(f"{name}")
        for r in rows:
            print(f"  {plan.fixed}={plan.fixed_value} sweep={r.sweep_value:>6} "
                  f"{r.method:<8} {r.seconds:.4f}s")
        for method, a, b in monotone_violations(rows):
            print(f"  warning: {method} faster at {b} than at {a}")


if __name__ == "__main__":
    main()
