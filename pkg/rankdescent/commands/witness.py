# Copyright (c) 2026, the rankdescent authors
# All rights reserved.  See LICENSE for the terms (3-clause BSD).

"""Module containing the WitnessCommand class, described below."""

import logging
import sys

import numpy as np

from rankdescent.commands.base import BaseCommand
from rankdescent.evaluation import (build_ranking_digraph, format_cycle,
        search_non_metric_witness)
from rankdescent.providers import KlRankingSystem

logger = logging.getLogger(__name__)


class WitnessCommand(BaseCommand):

    """Command 'witness'.

    This command looks for six simplex points whose Kullback-Leibler
    ranking digraph has a directed cycle, which proves that this
    ranking system isn't derived from any metric.  The cycle is
    printed, and the digraph can be written in DOT format.

    """

    name = "witness"
    help = "search a cycle in a Kullback-Leibler ranking digraph"

    def __init__(self, parser=None):
        BaseCommand.__init__(self, parser)
        parser.add_argument("--dim", type=int, default=15,
                help="the number of coordinates (default 15)")
        parser.add_argument("--trials", type=int, default=1000,
                help="the number of point sets to try (default 1000)")
        parser.add_argument("--seed", type=int, default=0,
                help="the random seed")
        parser.add_argument("--dot",
                help="write the ranking digraph to this DOT file")

    def execute(self, args):
        """Execute the command."""
        rng = np.random.default_rng(args.seed)
        found = search_non_metric_witness(args.dim, args.trials, rng)
        if found is None:
            print("No cycle found in {} trials".format(args.trials),
                    file=sys.stderr)
            sys.exit(1)

        dataset, cycle = found
        print(format_cycle(cycle))
        for i, point in enumerate(dataset.items):
            print("{}: {}".format(i, " ".join(repr(float(c))
                    for c in point)))

        if args.dot:
            digraph = build_ranking_digraph(dataset,
                    KlRankingSystem(dataset))
            self.output(digraph.to_dot(cycle), args.dot)
