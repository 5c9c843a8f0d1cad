# Copyright (c) 2026, the rankdescent authors
# All rights reserved.  See LICENSE for the terms (3-clause BSD).

"""Module containing the Command class, described below."""

from argparse import ArgumentParser

from rankdescent.commands.base import BaseCommand
from rankdescent.commands.generate import GenerateCommand
from rankdescent.commands.run import RunCommand
from rankdescent.commands.sweep import SweepCommand
from rankdescent.commands.witness import WitnessCommand


class Command(BaseCommand):

    """Main command, parents of them all."""

    def __init__(self):
        BaseCommand.__init__(self, ArgumentParser(prog="rankdescent",
                description="K-nearest neighbor descent with triplet " \
                "comparisons"))
        self.parser.add_argument("-v", "--verbose", action="store_true",
                help="log debugging messages")
        self.parser.add_argument("-q", "--quiet", action="store_true",
                help="only log warnings and errors")
        self.add_subcommand(RunCommand)
        self.add_subcommand(SweepCommand)
        self.add_subcommand(WitnessCommand)
        self.add_subcommand(GenerateCommand)

    def execute(self, args):
        """Without a sub-command, display the help."""
        self.parser.print_help()
