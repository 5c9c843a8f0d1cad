# Copyright (c) 2026, the rankdescent authors
# All rights reserved.  See LICENSE for the terms (3-clause BSD).

import unittest

import numpy as np

from rankdescent.dataset import Dataset
from rankdescent.descent import (ConfigurationError, DescentConfig,
        KnnState, candidate_set, diameter_bound, friend_clustering_rate,
        init_random_kout, propose_new_friend_set, round_budget, run,
        run_round)
from rankdescent.evaluation import exact_knn, recall
from rankdescent.providers import (EuclideanRankingSystem, KlRankingSystem,
        simplex_dataset)
from rankdescent.ranking import LESS, ComparatorRankingSystem


def line_dataset(n, seed=0):
    values = np.random.default_rng(seed).permutation(n * 10)[:n]
    return Dataset(values.astype(float).reshape(-1, 1))


def assert_valid_state(test, state, ranking, k):
    """Check out-degree, sortedness and the co-friend transpose."""
    for x, friends in state.friends.items():
        test.assertEqual(len(friends), k)
        test.assertEqual(len(set(friends)), k)
        test.assertNotIn(x, friends)
        for a, b in zip(friends, friends[1:]):
            test.assertEqual(ranking.compare(x, a, b), LESS)
        for y in friends:
            test.assertIn(x, state.cofriends[y])

    test.assertEqual(sum(len(c) for c in state.cofriends.values()),
            k * state.n)


class TestBudget(unittest.TestCase):

    """Unittest for the round budget arithmetic."""

    def test_table(self):
        """Test the budget for the published (n, K) pairs."""
        expected = {
            (20000, 16): 8,
            (20000, 32): 6,
            (200000, 16): 10,
            (200000, 32): 8,
            (2000000, 16): 12,
            (2000000, 32): 10,
            (2000000, 64): 8,
        }
        for (n, k), budget in expected.items():
            self.assertEqual(round_budget(n, k), budget)

    def test_exact_powers(self):
        """Test that exact powers don't suffer from rounding."""
        self.assertEqual(round_budget(4096, 16), 6)
        self.assertEqual(round_budget(4097, 16), 8)
        self.assertEqual(diameter_bound(20000, 16), 4)

    def test_config(self):
        """Test the validation of the configuration."""
        with self.assertRaises(ConfigurationError):
            DescentConfig(k=1)
        with self.assertRaises(ConfigurationError):
            DescentConfig(k=4, max_rounds=0)
        with self.assertRaises(ConfigurationError):
            DescentConfig(k=4, workers=0)
        with self.assertRaises(ConfigurationError):
            DescentConfig(k=4, fcc_samples=0)

        self.assertEqual(DescentConfig(k=16).rounds_for(20000), 12)
        self.assertEqual(DescentConfig(k=16, max_rounds=3).rounds_for(20000),
                3)
        self.assertGreaterEqual(DescentConfig(k=2, workers="auto").k, 2)


class TestInitialization(unittest.TestCase):

    """Unittest for the random K-out initialization."""

    def test_out_degree(self):
        """Test that every item gets K sorted friends."""
        dataset = line_dataset(5)
        ranking = EuclideanRankingSystem(dataset)
        for seed in range(5):
            state = init_random_kout(dataset, ranking,
                    DescentConfig(k=2, seed=seed))
            assert_valid_state(self, state, ranking, 2)

    def test_forced(self):
        """Test that with n = K + 1, friends are all the other items."""
        dataset = line_dataset(6)
        ranking = EuclideanRankingSystem(dataset)
        state = init_random_kout(dataset, ranking, DescentConfig(k=5))
        for x in range(6):
            self.assertEqual(list(state.friends[x]),
                    ranking.ranked(x, [y for y in range(6) if y != x]))

    def test_deterministic(self):
        """Test that the same seed gives the same friends."""
        dataset = simplex_dataset(3, 1000, np.random.default_rng(0))
        ranking = KlRankingSystem(dataset)
        config = DescentConfig(k=8, seed=42)
        first = init_random_kout(dataset, ranking, config)
        second = init_random_kout(dataset, ranking, config)
        self.assertEqual(first.friends, second.friends)

    def test_too_small(self):
        """Test that n must exceed K."""
        dataset = line_dataset(4)
        with self.assertRaises(ConfigurationError):
            init_random_kout(dataset, EuclideanRankingSystem(dataset),
                    DescentConfig(k=4))


class TestCandidates(unittest.TestCase):

    """Unittest for candidate sets and proposals."""

    def test_saturated(self):
        """Test that a complete triangle has no candidate."""
        state = KnnState.from_friends({0: (1, 2), 1: (0, 2), 2: (0, 1)})
        for x in range(3):
            self.assertEqual(candidate_set(x, state), set())

    def test_cycle(self):
        """Test the three-part union on a 3-cycle."""
        state = KnnState.from_friends({0: (1, ), 1: (2, ), 2: (0, )})
        self.assertEqual(candidate_set(0, state), {2})

    def test_exclusion(self):
        """Test that candidates exclude the item and its friends."""
        dataset = line_dataset(60)
        ranking = EuclideanRankingSystem(dataset)
        state = init_random_kout(dataset, ranking, DescentConfig(k=4))
        for x in range(60):
            candidates = candidate_set(x, state)
            self.assertNotIn(x, candidates)
            self.assertFalse(candidates & set(state.friends[x]))
            cofriends = state.cofriends[x]
            self.assertLessEqual(len(candidates),
                    len(cofriends) + 4 * 4 + 4 * len(cofriends))

    def test_no_candidate(self):
        """Test that without candidates the friends are kept."""
        dataset = line_dataset(3)
        ranking = EuclideanRankingSystem(dataset)
        state = KnnState.from_friends({0: (1, 2), 1: (0, 2), 2: (0, 1)})
        proposal = propose_new_friend_set(0, state,
                ranking)
        self.assertEqual(tuple(proposal.members), state.friends[0])
        self.assertEqual(proposal.comparisons, 0)

    def test_proposal(self):
        """Test proposals against a full sort of the union."""
        dataset = line_dataset(20)
        ranking = EuclideanRankingSystem(dataset)
        state = init_random_kout(dataset, ranking, DescentConfig(k=2))
        for x in range(20):
            union = set(state.friends[x]) | candidate_set(x, state)
            proposal = propose_new_friend_set(x, state, ranking)
            self.assertEqual(proposal.members,
                    ranking.ranked(x, union)[:2])
            self.assertNotIn(x, proposal.members)

    def test_generic_proposal(self):
        """Test that the comparator path proposes the same friends."""
        dataset = line_dataset(40, seed=3)
        scored = EuclideanRankingSystem(dataset)
        values = [float(v) for v in dataset.array[:, 0]]
        generic = ComparatorRankingSystem(Dataset(values),
                lambda a, y, z: abs(y - a) - abs(z - a))
        state = init_random_kout(dataset, scored, DescentConfig(k=3))
        for x in range(40):
            self.assertEqual(
                    propose_new_friend_set(x, state, scored).members,
                    propose_new_friend_set(x, state, generic).members)


class TestRound(unittest.TestCase):

    """Unittest for a round of friend set updates."""

    def setUp(self):
        self.dataset = simplex_dataset(4, 500, np.random.default_rng(8))
        self.ranking = KlRankingSystem(self.dataset)

    def test_fixed_point(self):
        """Test that the exact K-NN graph is a fixed point."""
        exact = exact_knn(self.dataset, self.ranking, 6)
        state = KnnState.from_friends(exact)
        new_state, stats = run_round(state, self.ranking,
                DescentConfig(k=6))
        self.assertEqual(new_state.friends, state.friends)
        self.assertEqual(stats.changed_friend_sets, 0)

    def test_workers(self):
        """Test that the number of workers doesn't change the result."""
        state = init_random_kout(self.dataset, self.ranking,
                DescentConfig(k=8, seed=1))
        single, first = run_round(state, self.ranking,
                DescentConfig(k=8, seed=1, workers=1))
        several, second = run_round(state, self.ranking,
                DescentConfig(k=8, seed=1, workers=4))
        self.assertEqual(single.friends, several.friends)
        self.assertEqual(first.fcc, second.fcc)
        self.assertEqual(first.comparison_count, second.comparison_count)

    def test_invariants(self):
        """Test out-degree, monotony and the comparison bound."""
        k = 8
        config = DescentConfig(k=k, seed=5)
        state = init_random_kout(self.dataset, self.ranking, config)
        for _ in range(4):
            new_state, stats = run_round(state, self.ranking, config)
            assert_valid_state(self, new_state, self.ranking, k)
            self.assertEqual(new_state.round, state.round + 1)
            self.assertLessEqual(stats.comparison_count,
                    3 * self.dataset.n * (k + 2 * k * k))
            self.assertTrue(0 <= stats.fcc <= 1)
            for x in range(self.dataset.n):
                old, new = state.friends[x][-1], new_state.friends[x][-1]
                if old != new:
                    self.assertEqual(self.ranking.compare(x, new, old), LESS)
            state = new_state


class TestClusteringRate(unittest.TestCase):

    """Unittest for the friend clustering rate."""

    def test_complete(self):
        """Test that a complete digraph has a rate of 1."""
        state = KnnState.from_friends({0: (1, 2), 1: (0, 2), 2: (0, 1)})
        rng = np.random.default_rng(0)
        for count in (1, 10, 1000):
            self.assertEqual(friend_clustering_rate(state, count, rng), 1.0)

    def test_no_clustering(self):
        """Test friends that are never adjacent."""
        friends = {i: ((i + 1) % 7, (i + 3) % 7) for i in range(7)}
        state = KnnState.from_friends(friends)
        rate = friend_clustering_rate(state, 500,
                np.random.default_rng(0))
        self.assertEqual(rate, 0.0)

    def test_single_friend(self):
        """Test that K must be at least 2."""
        state = KnnState.from_friends({0: (1, ), 1: (2, ), 2: (0, )})
        with self.assertRaises(ConfigurationError):
            friend_clustering_rate(state, 10, np.random.default_rng(0))

    def test_random_start(self):
        """Test that the rate is close to zero at the outset."""
        rng = np.random.default_rng(0)
        dataset = Dataset(rng.uniform(size=(5000, 2)))
        state = init_random_kout(dataset, EuclideanRankingSystem(dataset),
                DescentConfig(k=16))
        rate = friend_clustering_rate(state, 1000, rng)
        self.assertLess(rate, 0.05)


class TestRun(unittest.TestCase):

    """Unittest for the complete descent."""

    def test_single_round(self):
        """Test that max_rounds=1 runs exactly one round."""
        dataset = simplex_dataset(3, 100, np.random.default_rng(0))
        result = run(dataset, KlRankingSystem(dataset),
                DescentConfig(k=4, max_rounds=1))
        self.assertEqual(result.rounds_used, 1)
        self.assertFalse(result.terminated)

    def test_small_recall(self):
        """Test the recall of a small instance against the oracle."""
        dataset = simplex_dataset(3, 30, np.random.default_rng(1))
        ranking = KlRankingSystem(dataset)
        result = run(dataset, ranking, DescentConfig(k=4, seed=3))
        exact = exact_knn(dataset, ranking, 4)
        self.assertGreaterEqual(recall(result.friends, exact), 0.9)

    def test_stopping_rule(self):
        """Test that the descent stops when the rate stops increasing."""
        dataset = simplex_dataset(5, 800, np.random.default_rng(2))
        ranking = KlRankingSystem(dataset)
        config = DescentConfig(k=8, seed=9)
        result = run(dataset, ranking, config)
        history = [stats.fcc for stats in result.rounds]
        self.assertEqual(list(result.state.fcc_history), history)
        self.assertLessEqual(len(history), config.rounds_for(800))
        for previous, current in zip(history[:-2], history[1:-1]):
            self.assertGreater(current, previous)
        if result.terminated:
            self.assertLessEqual(history[-1], history[-2])
        else:
            self.assertEqual(len(history), config.rounds_for(800))

    def test_reproducible(self):
        """Test that the seed determines the friends."""
        dataset = simplex_dataset(4, 300, np.random.default_rng(4))
        ranking = KlRankingSystem(dataset)
        first = run(dataset, ranking, DescentConfig(k=6, seed=12))
        second = run(dataset, ranking, DescentConfig(k=6, seed=12,
                workers=3))
        self.assertEqual(first.friends, second.friends)
        self.assertEqual(first.rounds_used, second.rounds_used)
