"""Entry ranges and heat-map data for S(30,5) and S(10000,30)."""

import argparse
import time
from pathlib import Path

from widthone.formulas import sum_matrix
from widthone.render import render_plot_data, sci


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=None, help="directory for plot data")
    args = ap.parse_args()

    for d, n in ((30, 5), (10000, 30)):
        start = time.perf_counter()
        S = sum_matrix(d, n, n, "stanley")
        elapsed = time.perf_counter() - start
        print(f"S({d},{n}): min {sci(S.min(), 3)}  max {sci(S.max(), 3)}  ({elapsed:.2f}s)")
        if args.out is not None:
            args.out.mkdir(parents=True, exist_ok=True)
            (args.out / f"S_{d}_{n}.dat").write_text(render_plot_data(S))


if __name__ == "__main__":
    main()
