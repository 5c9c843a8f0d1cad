# Copyright (c) 2026, the rankdescent authors
# All rights reserved.  See LICENSE for the terms (3-clause BSD).

"""Module containing the base classes of commands, described below."""

from argparse import ArgumentParser
import logging
import sys

from rankdescent.descent import ConfigurationError
from rankdescent.experiment import FORMATS, RECALL_MODES, ExperimentSpec

logger = logging.getLogger(__name__)


class BaseCommand(object):

    """Base class of a command-line tool.

    This class is mainly a bridge between a set of commands and
    the 'argparse' module.  The latter manages sub-commands, but
    the automation of function calls isn't very straightforward.
    This wrapper is used to create a simple distinction between
    sub-commands.

    To create a new command, you should inherit from this class.
    The '__init__' method can be redefined to add arguments to the
    parser (the 'parser' attribute).  The 'execute' method is
    also to be redefined.

    """

    name = None
    help = None

    def __init__(self, parser=None):
        parser = parser or ArgumentParser()
        self.parser = parser
        self.subparsers = None
        self.parser.set_defaults(func=self.execute)

    def add_subcommand(self, CommandClass):
        """Add a sub-command."""
        if self.subparsers is None:
            self.subparsers = self.parser.add_subparsers()
        parser = self.subparsers.add_parser(CommandClass.name,
                help=CommandClass.help)
        return CommandClass(parser)

    def execute(self, args):
        """Execute the command."""
        raise NotImplementedError

    def output(self, text, filename=None):
        """Write the text to the file, or to the standard output."""
        if filename:
            with open(filename, "w", encoding="utf-8") as file:
                file.write(text)
            logger.info("Report written to %s", filename)
        else:
            sys.stdout.write(text)


class ExperimentCommand(BaseCommand):

    """Base class of the commands running experiments.

    The experiment can be described in a YAML file (--config),
    explicit options overriding its values.

    """

    def __init__(self, parser=None):
        BaseCommand.__init__(self, parser)
        parser = self.parser
        parser.add_argument("--config",
                help="a YAML file describing the experiment")
        parser.add_argument("--n", type=int, help="the number of points")
        parser.add_argument("--k", type=int,
                help="the number of neighbors per point")
        parser.add_argument("--seed", type=int, help="the master seed")
        parser.add_argument("--ranking", choices=["kl", "euclidean"],
                help="the ranking system (default kl)")
        parser.add_argument("--fcc-samples", type=int,
                help="samples of the friend clustering rate per round")
        parser.add_argument("--max-rounds", type=int,
                help="the maximum number of rounds")
        parser.add_argument("--workers",
                help="the number of workers, or 'auto'")
        parser.add_argument("--recall", choices=RECALL_MODES,
                help="how to measure the recall (default sample6)")
        parser.add_argument("--force-oracle", action="store_true",
                default=None, help="run the exact oracle on large data")
        parser.add_argument("--format", choices=FORMATS,
                help="the report format (default json)")
        parser.add_argument("--out", help="write the report to this file")

    def overrides(self, args):
        """Return the options given explicitly on the command line."""
        options = {
            "n": args.n,
            "k": args.k,
            "seed": args.seed,
            "ranking": args.ranking,
            "fcc_samples": args.fcc_samples,
            "max_rounds": args.max_rounds,
            "workers": args.workers,
            "recall": args.recall,
            "force_oracle": args.force_oracle,
            "format": args.format,
        }
        if options["workers"] is not None and options["workers"] != "auto":
            try:
                options["workers"] = int(options["workers"])
            except ValueError:
                raise ConfigurationError("--workers expects a number or " \
                        "'auto', not {}".format(repr(args.workers)))

        return {key: value for key, value in options.items()
                if value is not None}

    def build_spec(self, args, **options):
        """Build the ExperimentSpec from the command-line arguments."""
        options.update(self.overrides(args))
        if args.config:
            try:
                with open(args.config, "r", encoding="utf-8") as file:
                    content = file.read()
            except IOError as err:
                raise ConfigurationError("cannot read the {} file: " \
                        "{}".format(repr(args.config), err))

            return ExperimentSpec.read_YAML(content, **options)

        return ExperimentSpec.from_dict(options)
