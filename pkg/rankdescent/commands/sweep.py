# Copyright (c) 2026, the rankdescent authors
# All rights reserved.  See LICENSE for the terms (3-clause BSD).

"""Module containing the SweepCommand class, described below."""

from rankdescent.commands.base import ExperimentCommand
from rankdescent.experiment import dimension_sweep, emit_sweep


class SweepCommand(ExperimentCommand):

    """Command 'sweep'.

    This command repeats an experiment for several dimensions and
    writes a table with the rounds, the final clustering rate and
    the recall of each dimension.

    """

    name = "sweep"
    help = "run the K-NN descent for several dimensions"

    def __init__(self, parser=None):
        ExperimentCommand.__init__(self, parser)
        parser.add_argument("--dims", type=int, nargs="+",
                default=[10, 20, 40, 60],
                help="the dimensions to try (default 10 20 40 60)")

    def execute(self, args):
        """Execute the command."""
        base = self.build_spec(args, d=args.dims[0])
        reports = dimension_sweep(base, args.dims)
        self.output(emit_sweep(reports, base.format), args.out)
