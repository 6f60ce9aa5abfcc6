"""Command-line interface.

CSV goes to stdout, human-readable reports to stderr, optional figures to the
path given by --plot.  Exit codes: 0 success, 2 configuration error, 3 budget
or conditioning error.  Identical configuration (and seed) produces
byte-identical CSV for any worker count; timings never enter the CSV.
"""

from __future__ import annotations

import argparse
import csv
import sys
import time

from . import baselines as bl
from .feasible import (JensenCase, NonUnique, density_mode, expectation_point,
                       jensen_classify, sample_points, sample_statistics)
from .gridsearch import BudgetError, DEFAULT_BUDGET, grid_min
from .handelman import bound_series, f_beta_refine, f_handelman_powered
from .polynomial import (ParseError, Polynomial, TestFunction, BUILTIN_NAMES,
                         builtin, evaluate, parse_polynomial, relative_gap)
from .rates import empirical_rate, expected_value_at_shapes, shape_parameters
from .sos import BASES, ConditioningError, f_sos, graded_basis
from .tablegen import compute_table

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_BUDGET = 3


def _report(msg: str) -> None:
    print(msg, file=sys.stderr)


def _parse_ks(text: str) -> list[int]:
    """Accept '7', '1..50', or '5,10,15'."""
    text = text.strip()
    if ".." in text:
        lo, hi = text.split("..", 1)
        lo, hi = int(lo), int(hi)
        if hi < lo:
            raise ValueError(f"empty range {text!r}")
        return list(range(lo, hi + 1))
    if "," in text:
        return [int(t) for t in text.split(",") if t.strip()]
    return [int(text)]


def _add_source_args(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--builtin", choices=BUILTIN_NAMES,
                     help="named test function")
    src.add_argument("--poly", metavar="FILE",
                     help="path to a sparse-monomial polynomial file")
    p.add_argument("--n", type=int, default=None,
                   help="dimension for the scalable builtins (default 2)")


def _load_source(args) -> tuple[Polynomial, TestFunction | None]:
    if args.builtin:
        tf = builtin(args.builtin, args.n)
        return tf.poly, tf
    with open(args.poly) as fh:
        return parse_polynomial(fh.read()), None


def _rg(value: float, tf: TestFunction | None) -> str:
    return repr(relative_gap(value, tf)) if tf is not None else ""


def _fmt_vec(v) -> str:
    return "|".join(repr(x) if isinstance(x, float) else str(x) for x in v)


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_bound(args) -> int:
    poly, tf = _load_source(args)
    ks = _parse_ks(args.k)
    if any(k < 0 for k in ks):
        raise ValueError("k must be nonnegative")
    out = csv.writer(sys.stdout)
    out.writerow(["k", "r", "value", "rg_percent", "eta", "beta", "candidates",
                  "refined_value"])
    t0 = time.perf_counter()
    results = []
    for k in ks:
        b = f_handelman_powered(poly, k, args.r, workers=args.workers)
        refined = ""
        if args.refine:
            refined = repr(f_beta_refine(poly, k, b.argmin).value)
        out.writerow([k, args.r, repr(b.value), _rg(b.value, tf),
                      _fmt_vec(b.argmin.eta), _fmt_vec(b.argmin.beta),
                      b.candidates_evaluated, refined])
        results.append(b)
    dt = time.perf_counter() - t0
    _report(f"bound: {len(ks)} degrees, r={args.r}, "
            f"last value {results[-1].value:.6g} in {dt:.2f}s")
    if args.plot:
        from . import plotting
        series = {"bound": ([b.k for b in results], [b.value for b in results])}
        plotting.plot_series(args.plot, "density bound vs degree", "k", "bound",
                             series)
        _report(f"bound: figure written to {args.plot}")
    return EXIT_OK


def cmd_sos(args) -> int:
    poly, tf = _load_source(args)
    ks = _parse_ks(args.k)
    out = csv.writer(sys.stdout)
    out.writerow(["k", "basis", "order", "value", "rg_percent"])
    t0 = time.perf_counter()
    values = []
    for k in ks:
        v = f_sos(poly, k, args.basis)
        values.append(v)
        out.writerow([k, args.basis, len(graded_basis(poly.n_vars, k)),
                      repr(v), _rg(v, tf)])
    _report(f"sos: {len(ks)} degrees in {time.perf_counter() - t0:.2f}s")
    if args.plot:
        from . import plotting
        plotting.plot_series(args.plot, "sos density bound", "k", "bound",
                             {"sos": (ks, values)})
        _report(f"sos: figure written to {args.plot}")
    return EXIT_OK


def cmd_grid(args) -> int:
    poly, tf = _load_source(args)
    ks = _parse_ks(args.k)
    out = csv.writer(sys.stdout)
    out.writerow(["k", "value", "rg_percent", "argmin", "points"])
    t0 = time.perf_counter()
    values = []
    for k in ks:
        g = grid_min(poly, k, budget=args.budget)
        values.append(g.value)
        out.writerow([k, repr(g.value), _rg(g.value, tf), _fmt_vec(g.argmin),
                      g.points_evaluated])
    _report(f"grid: {len(ks)} grids in {time.perf_counter() - t0:.2f}s")
    if args.plot:
        from . import plotting
        plotting.plot_series(args.plot, "grid search minimum", "k", "value",
                             {"grid": (ks, values)})
        _report(f"grid: figure written to {args.plot}")
    return EXIT_OK


def cmd_feasible(args) -> int:
    poly, tf = _load_source(args)
    (k,) = _parse_ks(args.k)
    b = f_handelman_powered(poly, k, args.r, workers=args.workers)
    case = jensen_classify(poly, convex_asserted=args.convex)
    out = csv.writer(sys.stdout)
    out.writerow(["k", "r", "strategy", "point", "value", "rg_percent", "note"])
    strategies = ("mode", "mean") if args.strategy == "both" else (args.strategy,)
    marks = {}
    for strategy in strategies:
        if strategy == "mode":
            point = density_mode(b.argmin, args.r)
            if point is NonUnique:
                out.writerow([k, args.r, "mode", "non-unique", "", "",
                              "density is flat in some coordinate"])
                continue
        else:
            point = expectation_point(b.argmin, args.r)
        value = evaluate(poly, point)
        note = ""
        if strategy == "mean" and case is JensenCase.NOT_APPLICABLE:
            note = "no certificate that the mean value stays below the bound"
        out.writerow([k, args.r, strategy, _fmt_vec(point), repr(value),
                      _rg(value, tf), note])
        marks[strategy] = point
    _report(f"feasible: k={k} r={args.r} bound {b.value:.6g}, "
            f"jensen case {case.value}")
    if args.plot:
        from . import plotting
        plotting.plot_density(args.plot, b.argmin, args.r, marks)
        _report(f"feasible: figure written to {args.plot}")
    return EXIT_OK


def cmd_sample(args) -> int:
    poly, tf = _load_source(args)
    (k,) = _parse_ks(args.k)
    if args.size < 2:
        raise ValueError("sample size must be at least 2")
    b = f_handelman_powered(poly, k, args.r, workers=args.workers)
    stats = sample_statistics(poly, b.argmin, args.r, args.size, args.seed)
    out = csv.writer(sys.stdout)
    out.writerow(["k", "r", "N", "seed", "generator", "mean", "variance",
                  "minimum", "minimizer"])
    out.writerow([k, args.r, args.size, args.seed, stats.generator,
                  repr(stats.mean), repr(stats.variance), repr(stats.minimum),
                  _fmt_vec(stats.minimizer)])
    _report(f"sample: k={k} r={args.r} N={args.size} seed={args.seed}: "
            f"mean {stats.mean:.6g} vs bound {b.value:.6g}")
    if args.plot:
        from . import plotting
        X = sample_points(b.argmin, args.r, args.size, args.seed)
        values = [evaluate(poly, x) for x in X]
        plotting.plot_histogram(args.plot, values,
                                f"sampled f values (k={k}, r={args.r})",
                                {"bound": b.value})
        _report(f"sample: figure written to {args.plot}")
    return EXIT_OK


def cmd_rates(args) -> int:
    if not args.builtin:
        raise ValueError("rates requires --builtin (reference minimum needed)")
    tf = builtin(args.builtin, args.n)
    out = csv.writer(sys.stdout)
    out.writerow(["metric", "k", "r", "value"])

    # gaps are taken against the evaluated minimum: for styblinski-tang the
    # rounded reference constant sits above it, which would break the fit
    f_star = evaluate(tf.poly, tf.minimizers[0])
    series = bound_series(tf.poly, args.k_max, workers=args.workers)
    ks = [b.k for b in series if b.k >= args.slope_kmin]
    gaps = [b.value - f_star for b in series if b.k >= args.slope_kmin]
    for k, g in zip(ks, gaps):
        out.writerow(["bound_gap", k, "", repr(g)])
    bound_slope = empirical_rate(ks, gaps)
    out.writerow(["bound_slope", "", "", repr(bound_slope)])

    grid_ks = list(range(4, args.grid_kmax + 1))
    grid_gaps = [grid_min(tf.poly, k).value - f_star for k in grid_ks]
    for k, g in zip(grid_ks, grid_gaps):
        out.writerow(["grid_gap", k, "", repr(g)])
    # grids through a rational minimizer hit it exactly; the log-log fit
    # uses only the positive gaps
    fit = [(k, g) for k, g in zip(grid_ks, grid_gaps) if g > 0]
    if len(fit) < len(grid_ks):
        _report(f"rates: {len(grid_ks) - len(fit)} grids hit the minimum "
                "exactly; slope fitted over the rest")
    grid_slope = empirical_rate([k for k, _ in fit], [g for _, g in fit])
    out.writerow(["grid_slope", "", "", repr(grid_slope)])

    x_star = tf.minimizers[0]
    f_star = evaluate(tf.poly, x_star)
    for r in range(1, args.r_max + 1):
        s = shape_parameters(x_star, r, tf.minimizer_rationals)
        ev = expected_value_at_shapes(tf.poly, s)
        out.writerow(["shape_kr", "", r, s.k_r])
        out.writerow(["shape_expected", "", r, repr(ev)])
        out.writerow(["shape_excess", "", r, repr(ev - f_star)])
    _report(f"rates: bound slope {bound_slope:.3f}, grid slope {grid_slope:.3f}")
    if args.plot:
        from . import plotting
        plotting.plot_series(
            args.plot, f"convergence diagnostics: {tf.name}", "k", "gap",
            {"bound gap": (ks, gaps), "grid gap": (grid_ks, grid_gaps)},
            logy=True)
        _report(f"rates: figure written to {args.plot}")
    return EXIT_OK


def cmd_table(args) -> int:
    cells = compute_table(args.table, workers=args.workers)
    out = csv.writer(sys.stdout)
    out.writerow(["table", "function", "k", "r", "column", "computed",
                  "reference", "abs_diff", "note"])
    worst = 0.0
    flagged = []
    for c in cells:
        out.writerow([c.table, c.function, c.k, "" if c.r is None else c.r,
                      c.column,
                      "" if c.computed is None else repr(c.computed),
                      "" if c.reference is None else repr(c.reference),
                      "" if c.diff is None else repr(c.diff), c.note])
        if c.diff is not None:
            worst = max(worst, c.diff)
            if c.diff > 5e-4:
                flagged.append(c)
    _report(f"table {args.table}: {len(cells)} cells, worst diff {worst:.2e}")
    for c in flagged:
        _report(f"  diff {c.diff:.2e} at {c.function} k={c.k} r={c.r} "
                f"{c.column}: {c.note or 'computed differs from reference'}")
    if args.plot:
        from . import plotting
        plotting.plot_table_cells(args.plot, args.table, cells)
        _report(f"table: figure written to {args.plot}")
    return EXIT_OK


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="boxbounds",
        description="Upper bounds for polynomial minimization on the unit box")
    p.add_argument("--workers", type=int, default=None,
                   help="scan worker count (default: BOXBOUNDS_WORKERS or 1)")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bound", help="density bound for one or more degrees")
    _add_source_args(b)
    b.add_argument("--k", required=True, help="degree, range 'a..b', or list")
    b.add_argument("--r", type=int, default=1, help="density power (default 1)")
    b.add_argument("--refine", action="store_true",
                   help="refine each bound over real shape exponents")
    b.add_argument("--plot", metavar="FILE", help="write a series figure")
    b.set_defaults(func=cmd_bound)

    s = sub.add_parser("sos", help="sum-of-squares density bound")
    _add_source_args(s)
    s.add_argument("--k", required=True, help="degree, range 'a..b', or list")
    s.add_argument("--basis", choices=BASES, default="orthonormal")
    s.add_argument("--plot", metavar="FILE")
    s.set_defaults(func=cmd_sos)

    g = sub.add_parser("grid", help="brute-force rational-grid minimum")
    _add_source_args(g)
    g.add_argument("--k", required=True, help="denominator, range, or list")
    g.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                   help="maximum number of grid evaluations")
    g.add_argument("--plot", metavar="FILE")
    g.set_defaults(func=cmd_grid)

    fe = sub.add_parser("feasible", help="extract a feasible point from the "
                                         "optimal density")
    _add_source_args(fe)
    fe.add_argument("--k", required=True)
    fe.add_argument("--r", type=int, default=1)
    fe.add_argument("--strategy", choices=("mode", "mean", "both"),
                    default="both")
    fe.add_argument("--convex", action="store_true",
                    help="assert that the polynomial is convex on the box")
    fe.add_argument("--plot", metavar="FILE",
                    help="contour of the optimal density (n=2 only)")
    fe.set_defaults(func=cmd_feasible)

    sa = sub.add_parser("sample", help="seeded sampling from the optimal density")
    _add_source_args(sa)
    sa.add_argument("--k", required=True)
    sa.add_argument("--r", type=int, default=1)
    sa.add_argument("--N", dest="size", type=int, required=True)
    sa.add_argument("--seed", type=int, default=0)
    sa.add_argument("--plot", metavar="FILE")
    sa.set_defaults(func=cmd_sample)

    ra = sub.add_parser("rates", help="convergence-rate diagnostics")
    _add_source_args(ra)
    ra.add_argument("--k-max", type=int, default=50)
    ra.add_argument("--slope-kmin", type=int, default=10)
    ra.add_argument("--grid-kmax", type=int, default=64)
    ra.add_argument("--r-max", type=int, default=10)
    ra.add_argument("--plot", metavar="FILE")
    ra.set_defaults(func=cmd_rates)

    t = sub.add_parser("table", help="recompute an embedded reference table")
    t.add_argument("table", type=int, choices=bl.TABLE_IDS)
    t.add_argument("--plot", metavar="FILE")
    t.set_defaults(func=cmd_table)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (BudgetError, ConditioningError) as exc:
        _report(f"error: {exc}")
        return EXIT_BUDGET
    except (ParseError, ValueError, OSError) as exc:
        _report(f"error: {exc}")
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
