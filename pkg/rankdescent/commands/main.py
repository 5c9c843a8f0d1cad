# Copyright (c) 2026, the rankdescent authors
# All rights reserved.  See LICENSE for the terms (3-clause BSD).

"""Module containing the hierarchy of commands."""

import logging
import sys

from rankdescent.commands.command import Command


def configure_logging(verbose=False, quiet=False):
    """Send log messages to the standard error."""
    level = logging.INFO
    if verbose:
        level = logging.DEBUG
    elif quiet:
        level = logging.WARNING

    logging.basicConfig(stream=sys.stderr, level=level,
            format="%(asctime)s %(levelname)s %(name)s: %(message)s")


def main(args=None):
    """Parse command-line arguments and execute the command."""
    command = Command()
    args = command.parser.parse_args(args)
    configure_logging(args.verbose, args.quiet)
    try:
        args.func(args)
    except (ValueError, OSError) as err:
        print("Error: {}".format(err), file=sys.stderr)
        sys.exit(1)
