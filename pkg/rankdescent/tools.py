# Copyright (c) 2026, the rankdescent authors
# All rights reserved.  See LICENSE for the terms (3-clause BSD).

"""Module containing different tools as functions.

They wrap the classes of the 'rankdescent' library for the most
common uses: building an approximate K-NN graph of a collection of
items, and checking it against the exact graph.

"""

from rankdescent.dataset import Dataset
from rankdescent.descent import DescentConfig, run
from rankdescent.evaluation import exact_knn, recall
from rankdescent.providers import RANKINGS
from rankdescent.ranking import ComparatorRankingSystem, RankingSystem


def make_ranking(dataset, ranking):
    """Return a ranking system for the dataset.

    'ranking' can be a RankingSystem already built, a name ("kl" or
    "euclidean") or a comparison function:
        comparator(anchor, y, z)
    returning a negative number when 'y' is more similar to 'anchor'
    than 'z' is.

    """
    if isinstance(ranking, RankingSystem):
        return ranking
    elif isinstance(ranking, str):
        if ranking not in RANKINGS:
            raise ValueError("unknown ranking {}".format(repr(ranking)))
        return RANKINGS[ranking](dataset)
    elif callable(ranking):
        return ComparatorRankingSystem(dataset, ranking)

    raise ValueError("cannot build a ranking system from {}".format(
            repr(ranking)))


def knn_graph(items, ranking, k, **kwargs):
    """Build the approximate K-NN graph of a collection of items.

    Items can be a Dataset, a numpy array of vectors or any sequence.
    Other keyword arguments are given to DescentConfig (fcc_samples,
    max_rounds, seed, workers).  For instance:
        friends = knn_graph(points, "kl", 16, seed=42)
        # friends[0] is the tuple of the 16 approximate neighbors of 0

    Return a dictionary associating each item id with the tuple of
    its K friends, nearest first.

    """
    dataset = items if isinstance(items, Dataset) else Dataset(items)
    config = DescentConfig(k=k, **kwargs)
    return run(dataset, make_ranking(dataset, ranking), config).friends


def knn_recall(items, ranking, friends, sample_ids=None, workers=1):
    """Return the recall of 'friends' against the exact K-NN graph."""
    dataset = items if isinstance(items, Dataset) else Dataset(items)
    k = len(next(iter(friends.values())))
    exact = exact_knn(dataset, make_ranking(dataset, ranking), k,
            anchors=sample_ids, workers=workers)
    return recall(friends, exact, sample_ids)
