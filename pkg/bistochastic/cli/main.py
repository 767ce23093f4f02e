"""The `bistochastic` command line tool.

Usage Example:
    `$ bistochastic sample --kind sinkhorn --n 3 --seed 7 > P.json`
    `$ bistochastic construct --in P.json --mode weighted`
"""
import click
from bistochastic import __version__
from bistochastic.cli.base import CommandMixin
from bistochastic.cli.compute import (bound_command, construct_command,
                                      construct_full_command, dims_command,
                                      feasible_command, nu_command,
                                      verify_command)
from bistochastic.cli.explore import (sample_command, scan_command,
                                      search_command)


@click.group()
@click.option('--verbose', '-v', count=True,
              help='Log progress to stderr, repeat for more detail.')
@click.option('--no-color', is_flag=True, default=False,
              help='Do not color the messages on stderr.')
@click.version_option(__version__, prog_name='bistochastic')
@click.pass_context
def cli(ctx, verbose, no_color):
    """Squared-norm images of isometries with vector entries.

    Every subcommand writes one JSON document on standard output and exits
    with 0 on a certified result, 1 on an honest failure and 2 on
    malformed input.
    """
    ctx.obj = CommandMixin(verbosity=verbose, color=not no_color)


for _command in (nu_command, verify_command, feasible_command,
                 construct_command, construct_full_command, bound_command,
                 dims_command, sample_command, search_command, scan_command):
    cli.add_command(_command)


def main():
    cli(prog_name='bistochastic')
