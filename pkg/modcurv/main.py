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

from modcurv import log
from modcurv.commands import derive as derive_cmds
from modcurv.commands import evaluate as evaluate_cmds
from modcurv.commands import verify as verify_cmds

LOG = logging.getLogger()

# Update the help options to allow -h in addition to --help for
# triggering the help for various commands
CONTEXT_SETTINGS = dict(help_option_names=["-h", "--help"])


@click.group("modcurv", context_settings=CONTEXT_SETTINGS)
@click.option("--quiet", "-q", default=False, is_flag=True)
@click.option("--verbose", "-v", default=False, is_flag=True)
@click.pass_context
def cli(ctx, quiet, verbose):
    """Special functions of modular curvature on noncommutative tori.

    Evaluate the hypergeometric and spectral functions with `eval`, check
    the identities they satisfy with `verify`, and print the symbolic
    derivation of the curvature term with `derive-b2`.
    """


def main():
    log.setup_root_logging()
    cli.add_command(evaluate_cmds.evaluate_cmd)
    cli.add_command(verify_cmds.verify)
    cli.add_command(derive_cmds.derive_b2)
    cli()


if __name__ == "__main__":
    main()
