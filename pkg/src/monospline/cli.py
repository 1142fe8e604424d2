"""Command line interface.

Subcommands:

* ``mstar A B C`` — minimal curvature of a two-point datum, with branch.
* ``interp A B C`` — build one two-point interpolant; writes a sample CSV
  and a spline JSON, prints a report.
* ``global`` — assemble an interpolant over a dataset file.
* ``seminorm`` — minimize the monotone trace seminorm over slope vectors.
* ``compare A B C`` — all four constructions side by side, skipping
  out-of-range ones with a reason instead of aborting.
* ``verify`` — run the seeded randomized invariant suite.

Exit codes: 0 success, 1 verification failure, 2 bad numeric input,
3 method range violation, 4 infeasible dataset.  All output is
deterministic given flags (plus the seed for ``verify``); files render
floats as %.17g, stdout reports use shortest round-trip floats.
"""

from __future__ import annotations

import os
import sys
from pathlib import Path

import click

from . import verification
from .assembly import ASSEMBLY_METHODS, assemble, optimize_slopes, seminorm_oracle
from .classical import (
    bernstein_interpolant,
    bernstein_proportional,
    bezier_interpolant,
    in_whitney_range,
    whitney_interpolant,
)
from .errors import (
    ConfigError,
    DomainError,
    InfeasibleError,
    MonosplineError,
    RangeError,
)
from .formats import (
    dumps_file_json,
    dumps_report_json,
    format_number_report,
    parse_dataset_json,
    samples_csv_text,
)
from .piecewise import ParametricCurve, PiecewisePolynomial, sample
from .smoothing import mollify_c2
from .twopoint import (
    TwoPointData,
    minimal_curvature,
    minimal_curvature_branch,
    optimal_interpolant,
    saturation_threshold,
)

EXIT_VERIFY_FAILURE = 1
EXIT_BAD_INPUT = 2
EXIT_RANGE_VIOLATION = 3
EXIT_INFEASIBLE = 4


def _fail(code, message):
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _guarded(fn):
    try:
        return fn()
    except RangeError as exc:
        _fail(EXIT_RANGE_VIOLATION, str(exc))
    except InfeasibleError as exc:
        _fail(EXIT_INFEASIBLE, str(exc))
    except (DomainError, ConfigError) as exc:
        _fail(EXIT_BAD_INPUT, str(exc))
    except MonosplineError as exc:
        _fail(EXIT_BAD_INPUT, str(exc))


def _two_point(a, b, c):
    try:
        return TwoPointData(a, b, c)
    except DomainError as exc:
        _fail(EXIT_BAD_INPUT, str(exc))


TWO_POINT_METHODS = ("optimal", "whitney", "bezier", "bernstein", "mollified")


def _build_two_point(data, method):
    if method == "optimal":
        return optimal_interpolant(data)
    if method == "whitney":
        return whitney_interpolant(data)
    if method == "bezier":
        return bezier_interpolant(data)
    if method == "bernstein":
        return bernstein_interpolant(data)[1]
    if method == "mollified":
        return mollify_c2(data)
    raise DomainError(f"unknown method {method!r}")


def _two_point_report(data, method, fn):
    m = minimal_curvature(data)
    if isinstance(fn, ParametricCurve):
        curvature = fn.sup_abs_deriv2()
        min_d1 = fn.min_deriv1()
        jumps = (0.0, 0.0, 0.0)
    else:
        report = fn.smoothness_report()
        curvature = report.sup_abs_deriv2
        min_d1 = report.min_deriv1
        jumps = (report.max_value_jump, report.max_deriv1_jump, report.max_deriv2_jump)
    ratio = curvature / m.value if (not m.is_infinite and m.value > 0.0) else None
    return {
        "method": method,
        "intervals": [
            {
                "index": 0,
                "a": data.a,
                "b": data.b,
                "c": data.c,
                "h": 1.0,
                "optimal_curvature": m,
                "curvature": curvature,
            }
        ],
        "curvature": curvature,
        "optimal_curvature": m,
        "curvature_ratio": ratio,
        "min_deriv1": min_d1,
        "max_value_jump": jumps[0],
        "max_deriv1_jump": jumps[1],
        "max_deriv2_jump": jumps[2],
    }


def _spline_json(fn):
    return fn.to_json_dict()


@click.group()
def cli():
    """Monotone Hermite interpolation with minimal curvature."""


@cli.command("mstar")
@click.argument("a", type=float)
@click.argument("b", type=float)
@click.argument("c", type=float)
def cmd_mstar(a, b, c):
    """Minimal curvature of the two-point datum (A, B, C)."""
    data = _two_point(a, b, c)
    value, branch = minimal_curvature_branch(data)
    if value.is_infinite:
        click.echo("inf")
        return
    if branch == "zero":
        click.echo("0")
        return
    c0 = saturation_threshold(data)
    click.echo(
        f"{format_number_report(value.value)} "
        f"(branch: {branch}, c0={format_number_report(c0)})"
    )


@cli.command("interp")
@click.argument("a", type=float)
@click.argument("b", type=float)
@click.argument("c", type=float)
@click.option("--method", type=click.Choice(TWO_POINT_METHODS), default="optimal")
@click.option("--samples", type=int, default=101, show_default=True)
@click.option("--out", type=click.Path(file_okay=False), default=".", show_default=True)
def cmd_interp(a, b, c, method, samples, out):
    """Build one two-point interpolant; write samples CSV + spline JSON."""
    data = _two_point(a, b, c)

    def run():
        fn = _build_two_point(data, method)
        table = sample(fn, samples)
        out_dir = Path(out)
        out_dir.mkdir(parents=True, exist_ok=True)
        csv_path = out_dir / f"interp_{method}_samples.csv"
        json_path = out_dir / f"interp_{method}_spline.json"
        csv_path.write_text(samples_csv_text(table))
        json_path.write_text(dumps_file_json(_spline_json(fn)))
        report = _two_point_report(data, method, fn)
        report["outputs"] = {"samples_csv": str(csv_path), "spline_json": str(json_path)}
        click.echo(dumps_report_json(report))

    _guarded(run)


@cli.command("global")
@click.option("--data", "data_path", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--method", type=click.Choice(ASSEMBLY_METHODS), default="optimal")
@click.option("--samples", type=int, default=201, show_default=True)
@click.option("--out", type=click.Path(file_okay=False), default=".", show_default=True)
def cmd_global(data_path, method, samples, out):
    """Assemble a global interpolant from a dataset JSON file."""

    def run():
        dataset = parse_dataset_json(Path(data_path).read_text())
        gi = assemble(dataset, method)
        table = gi.sample(samples)
        out_dir = Path(out)
        out_dir.mkdir(parents=True, exist_ok=True)
        csv_path = out_dir / f"global_{method}_samples.csv"
        json_path = out_dir / f"global_{method}_spline.json"
        csv_path.write_text(samples_csv_text(table))
        if gi.function is not None:
            json_path.write_text(dumps_file_json(gi.function.to_json_dict()))
        else:
            segments = [
                {
                    "x0": seg.x0,
                    "h": seg.h,
                    "f0": seg.f0,
                    "x_coeffs": list(seg.curve.x_coeffs),
                    "y_coeffs": list(seg.curve.y_coeffs),
                }
                for seg in gi.segments
            ]
            json_path.write_text(dumps_file_json({"segments": segments}))
        jumps = gi.node_jumps()
        report = {
            "method": method,
            "intervals": [
                {
                    "index": r.index,
                    "a": r.a,
                    "b": r.b,
                    "c": r.c,
                    "h": r.h,
                    "optimal_curvature": r.optimal_curvature,
                    "curvature": r.curvature,
                }
                for r in gi.intervals
            ],
            "curvature": gi.sup_abs_deriv2(),
            "min_deriv1": gi.min_deriv1(),
            "max_value_jump": jumps[0],
            "max_deriv1_jump": jumps[1],
            "max_deriv2_jump": jumps[2],
            "c11_nodes": list(gi.c11_nodes),
            "patched_nodes": list(gi.patched_nodes),
            "outputs": {"samples_csv": str(csv_path), "spline_json": str(json_path)},
        }
        click.echo(dumps_report_json(report))

    _guarded(run)


@cli.command("seminorm")
@click.option("--data", "data_path", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--oracle", "oracle_grid", type=int, default=None,
              help="Also run the grid oracle with this resolution.")
def cmd_seminorm(data_path, oracle_grid):
    """Monotone trace seminorm of the dataset's values (slopes ignored)."""

    def run():
        dataset = parse_dataset_json(Path(data_path).read_text()).without_slopes()
        result = optimize_slopes(dataset)
        report = {
            "value": result.value,
            "slopes": list(result.slopes),
            "per_interval": list(result.per_interval),
            "lower_bound": result.lower_bound,
        }
        if oracle_grid is not None:
            oracle = seminorm_oracle(dataset, oracle_grid)
            report["oracle"] = {
                "grid": oracle_grid,
                "value": oracle,
                "gap": result.value.as_float() - oracle.as_float(),
            }
        click.echo(dumps_report_json(report))

    _guarded(run)


@cli.command("compare")
@click.argument("a", type=float)
@click.argument("b", type=float)
@click.argument("c", type=float)
@click.option("--samples", type=int, default=101, show_default=True)
@click.option("--out", type=click.Path(file_okay=False), default=".", show_default=True)
def cmd_compare(a, b, c, samples, out):
    """All four constructions side by side; out-of-range ones are skipped
    with a reason, never an abort."""
    data = _two_point(a, b, c)
    out_dir = Path(out)
    out_dir.mkdir(parents=True, exist_ok=True)
    m = minimal_curvature(data)
    click.echo(
        f"data: a={format_number_report(a)} b={format_number_report(b)} "
        f"c={format_number_report(c)}  optimal_curvature="
        + ("inf" if m.is_infinite else format_number_report(m.value))
    )
    header = f"{'method':10s} {'curvature':>12s} {'min_deriv1':>12s} {'ratio':>8s}  note"
    click.echo(header)
    for method in ("optimal", "whitney", "bezier", "bernstein"):
        extra = ""
        try:
            fn = _build_two_point(data, method)
        except MonosplineError as exc:
            if method == "bernstein":
                # outside the certified band: fall back to the plain
                # proportional construction, like the whitney treatment
                fn = bernstein_proportional(data)
                extra = ", out of certificate range"
            else:
                click.echo(f"{method:10s} {'-':>12s} {'-':>12s} {'-':>8s}  skipped ({exc})")
                continue
        curvature = fn.sup_abs_deriv2()
        min_d1 = fn.min_deriv1()
        ratio = (
            f"{curvature / m.value:.3f}"
            if (not m.is_infinite and m.value > 0.0)
            else "-"
        )
        note = "ok" if min_d1 >= -1e-9 * (1.0 + a + b) else "NON-MONOTONE"
        if method == "whitney" and not in_whitney_range(data):
            extra = ", out of certificate range"
        table = sample(fn, samples)
        csv_path = out_dir / f"compare_{method}.csv"
        csv_path.write_text(samples_csv_text(table))
        click.echo(
            f"{method:10s} {curvature:12.6g} {min_d1:12.6g} {ratio:>8s}  {note}{extra}"
        )


@cli.command("verify")
@click.option("--seed", type=int, default=0, show_default=True,
              help="RNG seed (the MONOSPLINE_SEED env var overrides it).")
@click.option("--cases", type=int, default=200, show_default=True)
def cmd_verify(seed, cases):
    """Run the seeded randomized invariant suite over all modules."""
    env_seed = os.environ.get("MONOSPLINE_SEED")
    if env_seed is not None:
        try:
            seed = int(env_seed)
        except ValueError:
            _fail(EXIT_BAD_INPUT, f"MONOSPLINE_SEED must be an integer, got {env_seed!r}")
    if cases < 0:
        _fail(EXIT_BAD_INPUT, "--cases must be nonnegative")
    if cases == 0:
        click.echo("0 cases")
        return
    results = verification.run_all(seed, cases)
    failures = 0
    for result in results:
        if result.passed:
            click.echo(f"PASS {result.name}")
        else:
            failures += 1
            click.echo(f"FAIL {result.name}: counterexample={result.counterexample!r}")
            if result.detail:
                click.echo(f"     {result.detail}")
    click.echo(f"{len(results) - failures}/{len(results)} checks passed "
               f"(seed={seed}, cases={cases})")
    if failures:
        sys.exit(EXIT_VERIFY_FAILURE)


def main():
    cli()


if __name__ == "__main__":
    main()
