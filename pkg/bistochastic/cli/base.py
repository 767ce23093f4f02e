import functools
import json
import logging
import sys

import click
from bistochastic.common.console import Color
from bistochastic.core.errors import BistochasticError, MalformedInput
from bistochastic.core.matrices import DEFAULT_TOLERANCE
from bistochastic.core.serialization import (bistochastic_from_dict,
                                             vector_matrix_from_dict)

# Standard output only carries JSON, everything else goes to stderr
package_logger = logging.getLogger('bistochastic')
package_logger.addHandler(logging.StreamHandler(sys.stderr))

logger = logging.getLogger('bistochastic.cli')

LOG_LEVELS = {0: logging.WARNING, 1: logging.INFO}


class CommandMixin(object):
    """Common utilities of all subcommands."""

    def __init__(self, verbosity=0, color=True):
        self.verbosity = verbosity
        self.color = color
        package_logger.setLevel(LOG_LEVELS.get(verbosity, logging.DEBUG))

    def output(self, payload):
        """Write one JSON document on standard output."""
        click.echo(json.dumps(payload, sort_keys=True))

    def echo(self, msg):
        Color.echo(msg, color=self.color)

    def verbose(self, msg):
        if self.verbosity > 0:
            self.echo(msg)

    def fail(self, error):
        """Report the given error and exit with its status.

        :param BistochasticError error: the error
        """
        self.output(error.to_dict())
        self.echo('[error]{}[end]: {}'.format(error.code, error.message))
        raise click.exceptions.Exit(error.exit_code)

    def read_json(self, fp):
        """Parse a JSON document from an open file.

        :raise MalformedInput: if the content is not valid JSON
        """
        try:
            return json.load(fp)
        except ValueError as e:
            raise MalformedInput(
                'Invalid JSON in {}: {}'.format(getattr(fp, 'name', '?'), e))

    def read_bistochastic(self, fp, tol=DEFAULT_TOLERANCE):
        return bistochastic_from_dict(self.read_json(fp), tol=tol)

    def read_certificate(self, fp):
        """Read a vector-entry matrix, also from the output of `construct`
        (key "V") or `search` (key "certificate").

        :return: the matrix and the nu-residual tolerance the document was
            produced with (`config.success_tol` of a search), or None
        :rtype: tuple
        """
        data = self.read_json(fp)
        success_tol = None
        if isinstance(data, dict) and 'rows' not in data:
            config = data.get('config')
            if isinstance(config, dict):
                success_tol = config.get('success_tol')
            for key in ('V', 'certificate'):
                if isinstance(data.get(key), dict):
                    data = data[key]
                    break
        if success_tol is not None and (
                isinstance(success_tol, bool) or
                not isinstance(success_tol, (int, float)) or
                success_tol <= 0):
            raise MalformedInput(
                'Invalid `config.success_tol`: {}'.format(success_tol))
        return vector_matrix_from_dict(data), success_tol


def command(f):
    """Pass the CommandMixin of the group to the command and turn library
    errors into error documents and exit statuses."""

    @click.pass_obj
    @functools.wraps(f)
    def wrapper(mixin, *args, **kwargs):
        try:
            return f(mixin, *args, **kwargs)
        except BistochasticError as e:
            logger.debug('Command failed with %s', e.code)
            mixin.fail(e)

    return wrapper


def exit_with(ok):
    """Exit with 0 if `ok`, else with the certified-failure status."""
    if not ok:
        raise click.exceptions.Exit(1)


input_option = click.option(
    '--in', 'input_file', type=click.File('r'), required=True,
    help='Input JSON file, "-" for standard input.',
)

field_option = click.option(
    '--field', type=click.Choice(['R', 'C', 'H'], case_sensitive=False),
    default='R', show_default=True, help='The scalar field.',
)
