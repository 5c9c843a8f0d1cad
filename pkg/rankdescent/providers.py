# Copyright (c) 2026, the rankdescent authors
# All rights reserved.  See LICENSE for the terms (3-clause BSD).

"""Module containing concrete ranking systems and data generators.

The Kullback-Leibler ranking system orders points of the simplex
by divergence from the anchor, D(x || y).  It isn't symmetric and
can't be derived from a metric.  The metric ranking systems order
items by distance to the anchor.

Points of the simplex are vectors of d positive coordinates summing
to 1.  The simplex itself has dimension d - 1: 'd' is always the
number of coordinates here.

"""

import numpy as np
from scipy.special import rel_entr

from rankdescent.dataset import Dataset
from rankdescent.ranking import ScoredRankingSystem

TOLERANCE = 1e-12


def check_simplex(points):
    """Raise ValueError unless every row is an interior simplex point."""
    points = np.atleast_2d(np.asarray(points, dtype=np.float64))
    if np.any(points <= 0):
        raise ValueError("simplex points must have positive coordinates")

    sums = points.sum(axis=1)
    if np.any(np.abs(sums - 1.0) > TOLERANCE):
        raise ValueError("simplex points must have coordinates " \
                "summing to 1, got sums up to {!r}".format(
                float(sums[np.argmax(np.abs(sums - 1.0))])))


def kl_divergence(x, y):
    """Return the Kullback-Leibler divergence D(x || y), in nats."""
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if x.shape != y.shape:
        raise ValueError("cannot compare points of dimensions {} " \
                "and {}".format(x.shape, y.shape))

    if np.any(x <= 0) or np.any(y <= 0):
        raise ValueError("the divergence needs positive coordinates")

    return float(rel_entr(x, y).sum())


def sample_simplex_uniform(d, n, rng, concentration=1.0):
    """Sample n points of the simplex with d coordinates.

    Points follow a symmetric Dirichlet distribution of parameter
    'concentration'.  The default, 1, is the uniform distribution
    on the simplex, obtained by normalizing unit-rate exponential
    draws.

    """
    if d < 2:
        raise ValueError("simplex points need at least 2 coordinates, " \
                "not {}".format(d))
    if n < 1:
        raise ValueError("cannot sample {} points".format(n))
    if concentration <= 0:
        raise ValueError("the concentration must be positive, " \
                "not {}".format(concentration))

    if concentration == 1.0:
        draws = rng.standard_exponential((n, d))
    else:
        draws = rng.standard_gamma(concentration, (n, d))
        # Small concentrations underflow to 0
        np.maximum(draws, np.finfo(np.float64).tiny, out=draws)

    return draws / draws.sum(axis=1, keepdims=True)


class KlRankingSystem(ScoredRankingSystem):

    """Rank simplex points by Kullback-Leibler divergence.

    'y' precedes 'z' for the anchor 'x' when D(x || y) < D(x || z),
    equal divergences being decided by the smaller id.

    """

    def __init__(self, dataset, memoize=False):
        ScoredRankingSystem.__init__(self, dataset, memoize=memoize)
        self.points = dataset.require_array()
        check_simplex(self.points)

    def compute_scores(self, x, ids):
        anchor = self.points[x]
        return rel_entr(anchor, self.points[ids]).sum(axis=1)


class MetricRankingSystem(ScoredRankingSystem):

    """Rank items by a distance function.

    'distance(a, b)' receives two item payloads and returns a real
    number.  It should be a metric (symmetric, null only on equal
    items, triangle inequality): the ranking digraph is then acyclic.

    """

    def __init__(self, dataset, distance, memoize=False):
        ScoredRankingSystem.__init__(self, dataset, memoize=memoize)
        self.distance = distance

    def compute_scores(self, x, ids):
        items = self.dataset.items
        anchor = items[x]
        return np.array([self.distance(anchor, items[i])
                for i in ids.tolist()], dtype=np.float64)


class EuclideanRankingSystem(MetricRankingSystem):

    """Rank real vectors by Euclidean distance.

    Squared distances are compared: they give the same order and
    avoid square roots.

    """

    def __init__(self, dataset, memoize=False):
        ScoredRankingSystem.__init__(self, dataset, memoize=memoize)
        self.points = dataset.require_array()

    def distance(self, a, b):
        return float(np.sqrt(((np.asarray(a) - np.asarray(b)) ** 2).sum()))

    def compute_scores(self, x, ids):
        differences = self.points[ids] - self.points[x]
        return (differences ** 2).sum(axis=1)


def kl_ranking(dataset, memoize=False):
    """Return the Kullback-Leibler ranking system of a dataset."""
    return KlRankingSystem(dataset, memoize=memoize)


def euclidean_ranking(dataset, memoize=False):
    """Return the Euclidean ranking system of a dataset."""
    return EuclideanRankingSystem(dataset, memoize=memoize)


RANKINGS = {
    "kl": kl_ranking,
    "euclidean": euclidean_ranking,
}


def simplex_dataset(d, n, rng, concentration=1.0):
    """Return a Dataset of n simplex points with d coordinates."""
    return Dataset(sample_simplex_uniform(d, n, rng, concentration))
