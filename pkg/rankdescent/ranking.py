# Copyright (c) 2026, the rankdescent authors
# All rights reserved.  See LICENSE for the terms (3-clause BSD).

"""Module containing the RankingSystem classes, described below."""

from functools import cmp_to_key

import numpy as np

LESS = -1
GREATER = 1


class RankingSystem(object):

    """A base class for a ranking system.

    A ranking system attaches to every item 'x' of a dataset a
    strict total order on the other items.  'compare(x, y, z)' returns
    LESS when 'y' is more similar to 'x' than 'z' is, GREATER otherwise.
    The answer is never "equal": when the underlying comparison
    can't decide, the smaller item id wins.

    Ranking systems should inherit this class and implement the
    'raw_compare' method, which may return 0 for a tie.  If the
    ranking derives from a numeric score, inherit
    ScoredRankingSystem instead: it is faster and needs only a 'scores'
    method.  Ranking systems are read-only once built, so many workers
    can call them at the same time.

    """

    def __init__(self, dataset):
        self.dataset = dataset

    def __repr__(self):
        return "<rankdescent.{} (n={})>".format(type(self).__name__,
                len(self.dataset))

    def raw_compare(self, x, y, z):
        """Compare 'y' and 'z' from the point of view of 'x'.

        Return a negative number, zero or a positive number.

        """
        raise NotImplementedError

    def compare(self, x, y, z):
        """Return LESS if y precedes z for the anchor x, GREATER otherwise."""
        if x == y or x == z or y == z:
            raise ValueError("compare expects three distinct items, " \
                    "got {}, {} and {}".format(x, y, z))

        result = self.raw_compare(x, y, z)
        if result < 0:
            return LESS
        elif result > 0:
            return GREATER

        return LESS if y < z else GREATER

    def sort_key(self, x):
        """Return a key function ordering item ids under the anchor x."""
        return cmp_to_key(lambda y, z: self.compare(x, y, z))

    def ranked(self, x, ids):
        """Return the ids sorted from the most to the least similar to x."""
        return sorted(ids, key=self.sort_key(x))


class ScoredRankingSystem(RankingSystem):

    """A ranking system derived from a per-anchor score.

    'y' precedes 'z' for the anchor 'x' when 'score(x, y)' is smaller
    than 'score(x, z)'.  The score doesn't have to be symmetric:
    the Kullback-Leibler divergence is a valid score.  Subclasses
    implement 'compute_scores', which returns the scores of
    several items for a single anchor as a numpy array.

    When 'memoize' is set, the scores already computed for an anchor
    are kept in a per-anchor dictionary.

    """

    def __init__(self, dataset, memoize=False):
        RankingSystem.__init__(self, dataset)
        self.memoize = memoize
        self.memo = {}

    def compute_scores(self, x, ids):
        """Compute the scores of 'ids' for the anchor 'x'."""
        raise NotImplementedError

    def scores(self, x, ids):
        """Return the scores of 'ids' for the anchor 'x'."""
        ids = np.fromiter(ids, dtype=np.int64)
        if not self.memoize:
            return self.compute_scores(x, ids)

        memo = self.memo.setdefault(x, {})
        missing = np.array([i for i in ids.tolist() if i not in memo],
                dtype=np.int64)
        if len(missing):
            computed = self.compute_scores(x, missing)
            memo.update(zip(missing.tolist(), computed.tolist()))

        return np.array([memo[i] for i in ids.tolist()], dtype=np.float64)

    def score(self, x, y):
        """Return the score of y for the anchor x."""
        return float(self.scores(x, [y])[0])

    def raw_compare(self, x, y, z):
        first, second = self.scores(x, [y, z])
        if first < second:
            return -1
        elif first > second:
            return 1

        return 0

    def order(self, x, ids):
        """Sort 'ids' under the anchor x, ties broken by ascending id.

        Return a tuple (sorted ids as a numpy array, number of scores
        computed).

        """
        ids = np.fromiter(ids, dtype=np.int64)
        scores = self.scores(x, ids)
        order = np.lexsort((ids, scores))
        return ids[order], len(ids)

    def ranked(self, x, ids):
        return self.order(x, ids)[0].tolist()


class ComparatorRankingSystem(RankingSystem):

    """A ranking system built on a plain comparison function.

    The comparator receives the payloads of the anchor and of the two
    items to compare:
        comparator(anchor, y, z)
    and returns a negative number if 'y' is more similar to 'anchor'
    than 'z' is.  This is the most general form of ranking system:
    items can be strings, trajectories or anything the comparator
    understands.

    """

    def __init__(self, dataset, comparator):
        RankingSystem.__init__(self, dataset)
        self.comparator = comparator

    def raw_compare(self, x, y, z):
        items = self.dataset.items
        return self.comparator(items[x], items[y], items[z])
