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
from pathlib import Path
from typing import List, Optional

import click
from rich.console import Console
from rich.table import Table

from modcurv import log
from modcurv.config import LIST_KEYS, build_settings, parse_config_text
from modcurv.errors import ConfigException, ModcurvException
from modcurv.jobs.common import ResultType
from modcurv.jobs.reports import RelationReport, write_reports
from modcurv.jobs.suites import ALL_SUITES, SUITES, VerifySuiteStep, suite_names
from modcurv.utils import parse_float_list

LOG = logging.getLogger(__name__)
console = Console()


def _options(
    config_file: Optional[Path], m_values: Optional[str], arg_values: Optional[str]
) -> dict:
    options = {}
    if config_file is not None:
        try:
            text = config_file.read_text()
        except OSError as e:
            raise ConfigException(f"Cannot read config file {config_file}: {e}")
        options.update(parse_config_text(text))
    for key, raw in zip(LIST_KEYS, (m_values, arg_values)):
        if raw is not None:
            options[key] = parse_float_list(raw)
    return options


def _summary(reports: List[RelationReport]) -> Table:
    table = Table(title="Relation reports")
    table.add_column("relation")
    table.add_column("points", justify="right")
    table.add_column("max |residual|", justify="right")
    table.add_column("tolerance", justify="right")
    table.add_column("result")
    for report in reports:
        residual = (
            "-"
            if report.max_abs_residual is None
            else f"{report.max_abs_residual:.2e}"
        )
        result = "[green]pass[/green]" if report.passed else "[red]fail[/red]"
        table.add_row(
            report.relation_id,
            str(len(report.rows)),
            residual,
            f"{report.tolerance:.1e}",
            result,
        )
    return table


@click.command()
@click.argument("suite", type=click.Choice([*SUITES, ALL_SUITES]))
@click.option("--m", "m_values", help="Comma separated dimensions, e.g. 3,4,5.5")
@click.option("--args", "arg_values", help="Comma separated positive arguments")
@click.option(
    "--out",
    type=click.Path(file_okay=False, path_type=Path),
    default=Path("."),
    help="Directory for report.json and report.csv",
)
@click.option(
    "--config",
    "config_file",
    type=click.Path(dir_okay=False, path_type=Path),
    help="key = value configuration file",
)
@click.option(
    "--logfile",
    type=click.Path(dir_okay=False, path_type=Path),
    help="Append debug logs to this file",
)
def verify(
    suite: str,
    m_values: Optional[str],
    arg_values: Optional[str],
    out: Path,
    config_file: Optional[Path],
    logfile: Optional[Path],
) -> None:
    """Verify a suite of identities on a grid and write reports.

    Exits with 1 when any relation fails and with 2 on configuration errors.
    """
    if logfile is not None:
        log.setup_logging(logfile)

    try:
        settings = build_settings(_options(config_file, m_values, arg_values))
    except ConfigException as e:
        raise click.UsageError(str(e))
    LOG.debug(f"Verifying {suite} on {settings.grid.describe()}")

    plan = [VerifySuiteStep(name, settings) for name in suite_names(suite)]
    reports: List[RelationReport] = []
    failures = []
    for step in plan:
        LOG.debug(f"Starting step {step.name}")
        message = f"{step.description} ... "
        with console.status(message) as status:
            if step.is_skip(status):
                LOG.debug(f"Skipping step {step.name}")
                console.print(f"{message}[yellow]skipped[/yellow]")
                continue

            LOG.debug(f"Running step {step.name}")
            result = step.run(status)
            LOG.debug(
                f"Finished running step {step.name}. Result: {result.result_type}"
            )
        reports.extend(result.reports)

        if result.result_type == ResultType.FAILED:
            console.print(f"{message}[red]failed[/red]")
            failures.append(result.message)
        else:
            console.print(f"{message}[green]done[/green]")

    try:
        paths = write_reports(reports, out)
    except (OSError, ModcurvException) as e:
        raise click.ClickException(f"Cannot write reports to {out}: {e}")

    console.print(_summary(reports))
    console.print(f"Reports written to {', '.join(str(p) for p in paths)}")
    if failures:
        raise click.ClickException(
            f"{len(failures)} suite(s) failed: {'; '.join(failures)}"
        )
