# Copyright (c) 2026, the rankdescent authors
# All rights reserved.  See LICENSE for the terms (3-clause BSD).

"""Module containing the RunCommand class, described below."""

from rankdescent.commands.base import ExperimentCommand
from rankdescent.dataset import load
from rankdescent.experiment import emit_report, run_experiment


class RunCommand(ExperimentCommand):

    """Command 'run'.

    This command runs a single experiment and writes its report.
    Points are sampled on the simplex, unless a dataset file is
    given with --data.

    """

    name = "run"
    help = "run the K-NN descent once and report"

    def __init__(self, parser=None):
        ExperimentCommand.__init__(self, parser)
        parser.add_argument("--dim", type=int,
                help="the number of coordinates of the points")
        parser.add_argument("--data",
                help="a dataset file (.csv or .bin) to use instead " \
                "of random points")

    def execute(self, args):
        """Execute the command."""
        dataset = None
        options = {}
        if args.dim is not None:
            options["d"] = args.dim
        if args.data:
            dataset = load(args.data)
            options["n"] = dataset.n
            options["d"] = dataset.dimension

        spec = self.build_spec(args, **options)
        report = run_experiment(spec, dataset)
        self.output(emit_report(report, spec.format), args.out)
