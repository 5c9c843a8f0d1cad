# Copyright (c) 2026, the rankdescent authors
# All rights reserved.  See LICENSE for the terms (3-clause BSD).

"""Module containing the GenerateCommand class, described below."""

from rankdescent.commands.base import BaseCommand
from rankdescent.dataset import save
from rankdescent.descent import substream
from rankdescent.experiment import DATA_STREAM
from rankdescent.providers import simplex_dataset


class GenerateCommand(BaseCommand):

    """Command 'generate'.

    This command samples points of the simplex and saves them,
    in CSV or binary format depending on the file extension.  With
    the same seed and dimension, the points are those 'run' would
    generate.

    """

    name = "generate"
    help = "sample simplex points into a dataset file"

    def __init__(self, parser=None):
        BaseCommand.__init__(self, parser)
        parser.add_argument("filename",
                help="the dataset file to write (.csv or .bin)")
        parser.add_argument("--n", type=int, required=True,
                help="the number of points")
        parser.add_argument("--dim", type=int, required=True,
                help="the number of coordinates of the points")
        parser.add_argument("--seed", type=int, default=0,
                help="the master seed")
        parser.add_argument("--concentration", type=float, default=1.0,
                help="the Dirichlet parameter (default 1, uniform)")

    def execute(self, args):
        """Execute the command."""
        rng = substream(args.seed, DATA_STREAM, args.dim)
        dataset = simplex_dataset(args.dim, args.n, rng, args.concentration)
        save(dataset, args.filename)
