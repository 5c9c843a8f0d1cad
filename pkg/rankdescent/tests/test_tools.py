# Copyright (c) 2026, the rankdescent authors
# All rights reserved.  See LICENSE for the terms (3-clause BSD).

import unittest

import numpy as np

from rankdescent import knn_graph, knn_recall, make_ranking
from rankdescent.dataset import Dataset
from rankdescent.providers import EuclideanRankingSystem, KlRankingSystem
from rankdescent.ranking import ComparatorRankingSystem


def by_distance(anchor, y, z):
    return abs(y - anchor) - abs(z - anchor)


class TestTools(unittest.TestCase):

    """Unittest for the functions of the tools module."""

    def test_make_ranking(self):
        """Test the different ways of naming a ranking system."""
        dataset = Dataset(np.random.default_rng(0).dirichlet(np.ones(3), 10))
        self.assertIsInstance(make_ranking(dataset, "kl"), KlRankingSystem)
        self.assertIsInstance(make_ranking(dataset, "euclidean"),
                EuclideanRankingSystem)
        ranking = KlRankingSystem(dataset)
        self.assertIs(make_ranking(dataset, ranking), ranking)
        self.assertIsInstance(make_ranking(Dataset([1, 2]), by_distance),
                ComparatorRankingSystem)
        with self.assertRaises(ValueError):
            make_ranking(dataset, "cosine")
        with self.assertRaises(ValueError):
            make_ranking(dataset, 42)

    def test_comparator_graph(self):
        """Test that plain integers with a comparator give the vector graph."""
        values = np.random.default_rng(1).permutation(1000)[:150]
        items = [int(value) for value in values]
        generic = knn_graph(items, by_distance, 4, seed=6)
        vectors = knn_graph(values.astype(float).reshape(-1, 1),
                "euclidean", 4, seed=6)
        self.assertEqual(generic, vectors)

    def test_recall(self):
        """Test the recall of a graph built on simplex points."""
        points = np.random.default_rng(2).dirichlet(np.ones(4), 200)
        friends = knn_graph(points, "kl", 6, seed=1)
        self.assertEqual(len(friends), 200)
        value = knn_recall(points, "kl", friends)
        self.assertTrue(0.5 <= value <= 1.0)
        self.assertEqual(knn_recall(points, "kl", friends, sample_ids=[3]),
                knn_recall(points, "kl", {3: friends[3]}, sample_ids=[3]))
