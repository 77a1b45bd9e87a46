"""Command line entry points: sweep, check, plot-data."""

from __future__ import annotations

import sys

import click

from . import obstruction, oracles, rational_cf, sweep
from .errors import TwoBridgeError
from .invariants import genus_closed, genus_even, v3_even


@click.group()
def main() -> None:
    """Chirally cosmetic surgery obstruction checks for positive 2-bridge knots."""


@main.command("sweep")
@click.option("--max-crossings", type=int, required=True)
@click.option("--jobs", type=int, default=1, show_default=True)
@click.option("--memo-cap", "memo_cap_bytes", type=int, default=None,
              help="Approximate memo cache budget in bytes (LRU beyond it).")
@click.option("--dedup", type=click.Choice(["presentations", "canonical"]),
              default="presentations", show_default=True)
@click.option("--checkpoint", "checkpoint_dir", type=click.Path(), default=None)
@click.option("--out", "output_path", type=click.Path(), required=True)
def sweep_cmd(max_crossings: int, jobs: int, memo_cap_bytes: int | None,
              dedup: str, checkpoint_dir: str | None, output_path: str) -> None:
    """Verify the obstruction for every knot up to the crossing bound."""
    try:
        config = sweep.SweepConfig(
            max_crossings=max_crossings,
            output_path=output_path,
            worker_count=jobs,
            memo_cap_bytes=memo_cap_bytes,
            checkpoint_dir=checkpoint_dir,
            dedup_mode=dedup,
        )
        report = sweep.run_sweep(config)
    except (TwoBridgeError, OSError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)
    census = report.census
    click.echo(f"rows written to {output_path}")
    click.echo(f"presentations: {census.total_presentations}"
               f" (per crossing: {census.presentations_per_crossing})")
    click.echo(f"canonical keys: {census.total_canonical}"
               f" (per crossing: {census.canonical_per_crossing})")
    click.echo(f"equalities among non-torus knots: {report.equality_count}")
    click.echo(f"elapsed: {report.elapsed:.1f}s, peak memo entries: {report.peak_memo_entries}")
    sys.exit(0 if report.equality_count == 0 else 2)


@main.command("check")
@click.option("--cf", "cf_text", type=str, default=None,
              help='Continued fraction, e.g. "2,2,1".')
@click.option("--fraction", "fraction_text", type=str, default=None,
              help='Rational, e.g. "7/3".')
@click.option("--verify", is_flag=True,
              help="Also recompute every invariant by its independent oracle.")
def check_cmd(cf_text: str | None, fraction_text: str | None, verify: bool) -> None:
    """Print the obstruction record of a single knot."""
    if (cf_text is None) == (fraction_text is None):
        click.echo("error: give exactly one of --cf / --fraction", err=True)
        sys.exit(1)
    try:
        if cf_text is not None:
            word = rational_cf.parse_cf(cf_text)
        else:
            value = rational_cf.parse_fraction(fraction_text)
            word = rational_cf.positive_cf_from_rational(value.numerator, value.denominator)
        rec = obstruction.check(word)
    except TwoBridgeError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)
    click.echo(f"cf:        [{rational_cf.format_cf(rec.cf)}]")
    click.echo(f"fraction:  {rec.p}/{rec.q}")
    click.echo(f"key:       ({rec.key.p},{rec.key.q_star})")
    click.echo(f"a2={rec.inv.a2} a4={rec.inv.a4} det={rec.inv.det}"
               f" genus={rec.inv.genus} v3={rec.inv.v3}")
    click.echo(f"lhs={rec.lhs} rhs={rec.rhs}")
    if rec.quotient is not None:
        click.echo(f"quotient=|lhs|/|rhs|={float(rec.quotient):.12g}"
                   f" s_k={float(rec.s_k):.12g}")
    else:
        click.echo("quotient undefined (rhs = 0)")
    click.echo(f"verdict:   {rec.verdict.value}")
    if verify:
        _print_verification(rec)


def _print_verification(rec) -> None:
    from .conway import conway

    poly = conway(rec.cf)
    alex_skein = oracles.alexander_from_conway(poly)
    alex_seifert = oracles.alexander_from_seifert(oracles.seifert_matrix(rec.cf))
    jones = oracles.jones_poly(rec.cf)
    ecf = rational_cf.to_even_cf(rec.p, rec.q)
    click.echo("verification (independent routes):")
    click.echo(f"  alexander (skein)   : {alex_skein}")
    click.echo(f"  alexander (seifert) : {alex_seifert}"
               f"  [{'match' if alex_skein == alex_seifert else 'MISMATCH'}]")
    g_cf, g_ecf = genus_closed(rec.cf), genus_even(ecf)
    click.echo(f"  genus: closed-form {g_cf}, even-cf {g_ecf}, record {rec.inv.genus}")
    v3_j = oracles.v3_from_jones(jones)
    click.echo(f"  v3: even-cf {v3_even(ecf)}, jones-derivative {v3_j}, record {rec.inv.v3}")
    det_j = abs(sum(c * (-1) ** (e % 2) for e, c in alex_seifert.items()))
    click.echo(f"  det: |alexander(-1)| = {det_j}, record {rec.inv.det}, p = {rec.p}")


@main.command("plot-data")
@click.option("--in", "results_csv", type=click.Path(exists=True), required=True)
@click.option("--out", "out_dir", type=click.Path(), required=True)
def plot_data_cmd(results_csv: str, out_dir: str) -> None:
    """Write the per-figure derived CSVs from a sweep results file."""
    try:
        written = sweep.emit_plot_data(results_csv, out_dir)
    except (TwoBridgeError, OSError, KeyError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)
    for path in written:
        click.echo(path)


if __name__ == "__main__":
    main()
