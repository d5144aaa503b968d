"""Command-line entry point: ``widthone <subcommand> ...``.

Exit codes: 0 success, 1 usage or input error, 2 verification mismatch,
3 refused by a feasibility guard.
"""

from __future__ import annotations

import argparse
import json
import sys

from widthone import bench, render, transport, verify
from widthone.formulas import sum_matrix
from widthone.order_complex import h_poly_closed, h_poly_shelling
from widthone.width_one import (
    FeasibilityError,
    count_width_one,
    enumerate_biwords,
    biword_to_matrix,
)

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH, EXIT_GUARD = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _add_shape(p: argparse.ArgumentParser) -> None:
    p.add_argument("--d", type=int, required=True, help="entry sum")
    p.add_argument("--n", type=int, help="square size")
    p.add_argument("--rows", type=int, help="row count (rectangular)")
    p.add_argument("--cols", type=int, help="column count (rectangular)")


def _add_output(p: argparse.ArgumentParser, formats=render.FORMATS) -> None:
    p.add_argument("--format", choices=formats, default=formats[0])
    p.add_argument("--precision", type=int, default=4, help="significant digits")
    p.add_argument("--output", "-o", default=None, help="write here instead of stdout")


def _shape(args) -> tuple[int, int]:
    if args.n is not None:
        if args.rows is not None or args.cols is not None:
            raise ValueError("give either --n or --rows/--cols")
        return args.n, args.n
    if args.rows is None or args.cols is None:
        raise ValueError("give --n, or both --rows and --cols")
    return args.rows, args.cols


def _spec(args, approx: bool = False) -> render.OutputSpec:
    return render.OutputSpec(args.format, args.precision, args.output, approx)


def cmd_sum_matrix(args) -> int:
    n1, n2 = _shape(args)
    S = sum_matrix(
        args.d,
        n1,
        n2,
        args.method,
        use_symmetry=not args.no_symmetry,
        workers=args.threads,
        force=args.force,
    )
    spec = _spec(args, args.approx)
    spec.emit(render.render_matrix(S, spec))
    return EXIT_OK


def cmd_plot_data(args) -> int:
    n1, n2 = _shape(args)
    S = sum_matrix(args.d, n1, n2, args.method)
    text = render.render_plot_data(S, args.kind, args.precision)
    render.OutputSpec("csv", args.precision, args.output).emit(text)
    return EXIT_OK


def _load_cost(arg: str, n: int) -> transport.CostMatrix:
    if arg == "l1":
        return transport.l1_cost(n)
    if arg.startswith("file:"):
        C = transport.read_cost_file(arg[len("file:"):])
        if C.shape != (n, n):
            raise ValueError(f"cost file is {C.shape[0]}x{C.shape[1]}, expected {n}x{n}")
        return C
    raise ValueError(f"cost must be 'l1' or 'file:PATH', got {arg!r}")


def cmd_mean_emd(args) -> int:
    C = _load_cost(args.cost, args.n)
    label = "mean NW-plan cost" if args.unchecked else "mean EMD"
    value = transport.mean_emd(args.d, args.n, C, allow_non_monge=args.unchecked)
    oracle = None
    if args.oracle:
        oracle = transport.mean_emd_oracle(args.d, args.n, C, allow_non_monge=args.unchecked)
    exact = render.render_fraction(value)
    approx = render.sci(value, args.precision) if value.denominator == 1 else (
        f"{float(value):.{args.precision}g}"
    )
    if args.format == "json":
        obj = {"d": args.d, "n": args.n, "label": label, "value": exact, "approx": approx}
        if oracle is not None:
            obj["oracle"] = render.render_fraction(oracle)
            obj["match"] = oracle == value
        text = json.dumps(obj) + "\n"
    else:
        text = f"{label} = {exact}  (~ {approx})\n"
        if oracle is not None:
            verdict = "exact match" if oracle == value else "MISMATCH"
            text += f"oracle = {render.render_fraction(oracle)}  [{verdict}]\n"
    render.OutputSpec("pretty", args.precision, args.output).emit(text)
    if oracle is not None and oracle != value:
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_enumerate(args) -> int:
    n1, n2 = _shape(args)
    size = count_width_one(args.d, n1, n2)
    if size > args.limit and not args.force:
        raise FeasibilityError(f"{size} width-one matrices exceeds the limit {args.limit}")
    out = []
    for B in enumerate_biwords(args.d, n1, n2):
        if args.what == "biwords":
            out.append(" ".join(map(str, B.top)) + " / " + " ".join(map(str, B.bottom)))
        else:
            T = biword_to_matrix(B, n1, n2)
            out.append(";".join(",".join(map(str, r)) for r in T.entries))
    out.append(f"# {size} total")
    render.OutputSpec("pretty", 4, args.output).emit("\n".join(out) + "\n")
    return EXIT_OK


def cmd_h_poly(args) -> int:
    f = h_poly_closed if args.method == "closed" else h_poly_shelling
    h = f(args.i, args.j)
    text = f"h_{args.i},{args.j}(t) = {h}\ncoefficients: {' '.join(map(str, h.coeffs))}\n"
    sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    results = verify.run_verify(args.d_max, args.n_max, oracle=not args.no_oracle)
    for r in results:
        print(r.line())
    return EXIT_OK if all(r.ok for r in results) else EXIT_MISMATCH


def cmd_bench(args) -> int:
    plan = bench.BenchPlan(
        fixed=args.fix,
        fixed_value=args.value,
        sweep=args.sweep,
        methods=args.methods,
        repetitions=args.reps,
        workers=args.threads,
    )
    rows = bench.run_bench(plan)
    render.OutputSpec("csv", 4, args.output).emit(bench.to_csv(rows))
    if not args.no_monotone_check:
        bad = bench.monotone_violations(rows)
        if bad:
            for method, v0, v1 in bad:
                print(f"non-monotone timing for {method}: {v1} ran faster than {v0}",
                      file=sys.stderr)
            return EXIT_MISMATCH
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="widthone", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("sum-matrix", help="entrywise sum of all width-one matrices")
    _add_shape(p)
    p.add_argument("--method", choices=("auto", "rsk", "stanley", "oracle"), default="auto")
    _add_output(p)
    p.add_argument("--approx", action="store_true", help="scientific entries (pretty/csv)")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--no-symmetry", action="store_true", help="compute every entry")
    p.add_argument("--force", action="store_true", help="ignore the oracle size guard")
    p.set_defaults(func=cmd_sum_matrix)

    p = sub.add_parser("plot-data", help="(i, j, value, log10) rows for plotting")
    _add_shape(p)
    p.add_argument("--kind", choices=("matrix", "contour"), default="matrix")
    p.add_argument("--method", choices=("auto", "rsk", "stanley"), default="auto")
    p.add_argument("--precision", type=int, default=4)
    p.add_argument("--output", "-o", default=None)
    p.set_defaults(func=cmd_plot_data)

    p = sub.add_parser("mean-emd", help="mean earth mover's distance for a Monge cost")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--cost", default="l1", help="'l1' or 'file:PATH'")
    p.add_argument("--oracle", action="store_true", help="also brute-force and compare")
    p.add_argument("--unchecked", action="store_true", help="skip the Monge check")
    _add_output(p, formats=("pretty", "json"))
    p.set_defaults(func=cmd_mean_emd)

    p = sub.add_parser("enumerate", help="list width-one matrices or biwords")
    _add_shape(p)
    p.add_argument("--what", choices=("matrices", "biwords"), default="matrices")
    p.add_argument("--limit", type=int, default=10**5)
    p.add_argument("--force", action="store_true")
    p.add_argument("--output", "-o", default=None)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("h-poly", help="h-polynomial of the grid order complex")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--method", choices=("closed", "shelling"), default="closed")
    p.set_defaults(func=cmd_h_poly)

    p = sub.add_parser("verify", help="run the cross-check suites")
    p.add_argument("--d-max", type=int, default=4)
    p.add_argument("--n-max", type=int, default=3)
    p.add_argument("--no-oracle", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time rsk against stanley")
    p.add_argument("--fix", choices=("d", "n"), required=True)
    p.add_argument("--value", type=int, required=True)
    p.add_argument("--sweep", type=_int_list, required=True, help="e.g. 5,10,20,40")
    p.add_argument("--methods", type=lambda s: tuple(s.split(",")), default=("rsk", "stanley"))
    p.add_argument("--reps", type=int, default=3)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--no-monotone-check", action="store_true")
    p.add_argument("--output", "-o", default=None)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FeasibilityError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
