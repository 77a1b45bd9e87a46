from __future__ import annotations

import sys

import click

from .render import MissingColumn, render_all


@click.command()
@click.option("--in", "in_dir", type=click.Path(exists=True, file_okay=False),
              required=True, help="Directory of derived CSVs from plot-data.")
@click.option("--out", "out_dir", type=click.Path(), required=True)
@click.option("--format", "image_format", type=click.Choice(["png", "svg"]),
              default="png", show_default=True)
def main(in_dir: str, out_dir: str, image_format: str) -> None:
    """Render the obstruction sweep scatter plots."""
    try:
        written = render_all(in_dir, out_dir, image_format)
    except (MissingColumn, OSError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)
    for path in written:
        click.echo(path)


if __name__ == "__main__":
    main()
