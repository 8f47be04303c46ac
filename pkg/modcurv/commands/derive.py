# Copyright (c) 2023 Canonical Ltd.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
# implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import logging

import click
from rich.console import Console

from modcurv.errors import ModcurvException
from modcurv.symbols.decompose import derive_decomposition, numeric_crosscheck
from modcurv.symbols.printer import render_json, render_paper

LOG = logging.getLogger(__name__)
console = Console()


@click.command("derive-b2")
@click.option(
    "--format",
    "output_format",
    type=click.Choice(["paper", "json"]),
    default="paper",
    help="Output format",
)
@click.option(
    "--check",
    is_flag=True,
    default=False,
    help="Compare the decomposition numerically with the closed forms",
)
@click.option("--s", type=float, default=2.0, help="y1 for the numeric check")
@click.option("--t", type=float, default=0.5, help="y2 for the numeric check")
@click.option("--m", type=float, default=4.0, help="Dimension for the numeric check")
def derive_b2(output_format: str, check: bool, s: float, t: float, m: float) -> None:
    """Derive the symbol b2, its sphere average and spectral decomposition."""
    try:
        with console.status("Deriving b2 ... "):
            b2, averaged, decomposition = derive_decomposition()
            deviation = None
            if check:
                deviation = numeric_crosscheck(decomposition, s, t, m)
                LOG.debug(f"crosscheck at s={s} t={t} m={m}: {deviation!r}")
    except ModcurvException as e:
        raise click.ClickException(str(e))

    if output_format == "json":
        click.echo(render_json(b2, averaged, decomposition, deviation))
    else:
        click.echo(render_paper(b2, averaged, decomposition, deviation))
