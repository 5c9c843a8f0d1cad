# Copyright (c) 2026, the rankdescent authors
# All rights reserved.  See LICENSE for the terms (3-clause BSD).

"""Module containing the K-nearest neighbor descent algorithm.

Every item starts with K friends chosen uniformly at random.  Then,
at each round, every item proposes a new friend set: the best K
among its current friends, its co-friends, the friends of its
friends and the friends of its co-friends.  All proposals of a round
read the same snapshot of the friend map, so they can be computed
by any number of workers, in any order, with the same result.

After each round, the friend clustering rate is sampled: the
proportion of sampled pairs of friends of a common item that are
themselves friends, in either direction.  The descent stops at the
first round where this rate doesn't increase.

"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
import logging
import os
import time

import numpy as np

from rankdescent.neighbors import BoundedNeighborSet, build_cofriends

logger = logging.getLogger(__name__)

# Random substreams derived from the master seed
INIT_STREAM = 0
FCC_STREAM = 1


class ConfigurationError(ValueError):

    """A configuration value breaks a precondition."""


def ceil_log(n, base):
    """Return the smallest integer m such that base ** m >= n."""
    if base < 2:
        raise ConfigurationError("the base of a logarithm must be at " \
                "least 2, not {}".format(base))

    m, power = 0, 1
    while power < n:
        power *= base
        m += 1

    return m


def round_budget(n, k):
    """Return 2 * ceil(log_K(n)), the expected number of rounds."""
    return 2 * ceil_log(n, k)


def diameter_bound(n, k):
    """Return ceil(log_(K-1)(n)), which bounds the diameter of random K-out.

    With high probability, the undirected version of a random
    K-out graph on n vertices has no larger diameter.

    """
    return ceil_log(n, k - 1)


def resolve_workers(workers):
    """Return a number of workers, 'auto' meaning one per processor."""
    if workers == "auto":
        return os.cpu_count() or 1

    workers = int(workers)
    if workers < 1:
        raise ConfigurationError("the number of workers must be " \
                "positive, not {}".format(workers))

    return workers


def substream(seed, *keys):
    """Return a random generator for the substream 'keys' of 'seed'."""
    return np.random.default_rng(np.random.SeedSequence(
            [seed & 0xFFFFFFFFFFFFFFFF] + list(keys)))


@dataclass(frozen=True)
class DescentConfig:

    """Configuration of a K-NN descent.

    'max_rounds' defaults to the round budget plus 4 once the dataset
    size is known (see 'rounds_for').  'workers' is a positive integer
    or "auto".

    """

    k: int
    fcc_samples: int = 1000
    max_rounds: int = None
    seed: int = 0
    workers: object = 1

    def __post_init__(self):
        if self.k < 2:
            raise ConfigurationError("K must be at least 2 to sample " \
                    "pairs of friends, not {}".format(self.k))
        if self.fcc_samples < 1:
            raise ConfigurationError("the number of clustering samples " \
                    "must be positive, not {}".format(self.fcc_samples))
        if self.max_rounds is not None and self.max_rounds < 1:
            raise ConfigurationError("the maximum number of rounds must " \
                    "be positive, not {}".format(self.max_rounds))

        resolve_workers(self.workers)

    def rounds_for(self, n):
        """Return the maximum number of rounds for n items."""
        if self.max_rounds is not None:
            return self.max_rounds

        return round_budget(n, self.k) + 4

    def check(self, dataset):
        """Raise ConfigurationError if the dataset is too small for K."""
        if dataset.n <= self.k:
            raise ConfigurationError("the dataset must have more than " \
                    "K={} items, it has {}".format(self.k, dataset.n))


@dataclass(frozen=True)
class KnnState:

    """A snapshot of the friend graph.

    'friends' maps every id to the tuple of its K friends, nearest
    first; 'cofriends' is its transpose.  States are never modified:
    a round builds a new one.

    """

    friends: dict
    cofriends: dict
    round: int = 0
    fcc_history: tuple = ()

    @classmethod
    def from_friends(cls, friends, round=0, fcc_history=()):
        """Build a state, deriving the co-friends from the friends."""
        return cls(friends, build_cofriends(friends), round,
                tuple(fcc_history))

    @property
    def n(self):
        return len(self.friends)

    @property
    def k(self):
        return len(self.friends[0])


@dataclass
class RoundStats:

    """Statistics of a single round."""

    round_index: int
    duration: float
    fcc: float
    comparison_count: int
    changed_friend_sets: int

    def to_dict(self):
        return {
            "round": self.round_index,
            "duration": self.duration,
            "fcc": self.fcc,
            "comparison_count": self.comparison_count,
            "changed_friend_sets": self.changed_friend_sets,
        }


@dataclass
class DescentResult:

    """The outcome of a descent: the final state and the round history."""

    state: KnnState
    rounds: list = field(default_factory=list)
    terminated: bool = False

    @property
    def friends(self):
        return self.state.friends

    @property
    def rounds_used(self):
        return len(self.rounds)

    @property
    def final_fcc(self):
        return self.rounds[-1].fcc if self.rounds else None


def init_random_kout(dataset, ranking, config, rng=None):
    """Return the initial state: K random friends per item.

    Friends of 'x' are K distinct items of S - {x} chosen uniformly
    at random, sorted under the order of 'x' when inserted.

    """
    config.check(dataset)
    if rng is None:
        rng = substream(config.seed, INIT_STREAM)

    n, k = dataset.n, config.k
    friends = {}
    for x in range(n):
        chosen = rng.choice(n - 1, size=k, replace=False)
        chosen[chosen >= x] += 1
        neighbors = BoundedNeighborSet(x, k, ranking)
        neighbors.update(chosen.tolist())
        friends[x] = tuple(neighbors.members)

    return KnnState.from_friends(friends)


def candidate_set(x, state):
    """Return the set of new acquaintances of x.

    These are its co-friends, the friends of its friends and the
    friends of its co-friends, minus x itself and its current friends.

    """
    friends, cofriends = state.friends, state.cofriends
    candidates = set(cofriends[x])
    for f in friends[x]:
        candidates.update(friends[f])
    for c in cofriends[x]:
        candidates.update(friends[c])

    candidates.discard(x)
    candidates.difference_update(friends[x])
    return candidates


def propose_new_friend_set(x, state, ranking):
    """Return the best K of the friends and candidates of x.

    Only the snapshot 'state' is read; the friends of x are not
    updated here.

    """
    current = state.friends[x]
    neighbors = BoundedNeighborSet.from_sorted(x, len(current), ranking,
            current)
    neighbors.update(sorted(candidate_set(x, state)))
    return neighbors


def _propose_chunk(ids, state, ranking):
    return [propose_new_friend_set(x, state, ranking) for x in ids]


def propose_all(state, ranking, workers=1):
    """Return the proposals of every item, in id order."""
    ids = list(range(state.n))
    if workers == 1:
        return _propose_chunk(ids, state, ranking)

    chunk_size = max(1, len(ids) // (workers * 4))
    chunks = [ids[i:i + chunk_size] for i in range(0, len(ids), chunk_size)]
    logger.debug("Proposing with %d workers, %d chunks", workers,
            len(chunks))
    with ThreadPoolExecutor(max_workers=workers) as executor:
        results = executor.map(lambda chunk: _propose_chunk(chunk, state,
                ranking), chunks)
        return [proposal for chunk in results for proposal in chunk]


def friend_clustering_rate(state, sample_count, rng):
    """Sample the friend clustering rate of the state.

    Each sample draws an item x uniformly, then two distinct friends
    y and z of x, and checks whether y is a friend or co-friend of z.
    Samples are drawn with replacement.

    """
    k = state.k
    if k < 2:
        raise ConfigurationError("the clustering rate needs K >= 2, " \
                "not {}".format(k))
    if sample_count < 1:
        raise ConfigurationError("the clustering rate needs at least " \
                "one sample, not {}".format(sample_count))

    anchors = rng.integers(state.n, size=sample_count)
    first = rng.integers(k, size=sample_count)
    second = rng.integers(k - 1, size=sample_count)
    second[second >= first] += 1

    hits = 0
    for x, i, j in zip(anchors.tolist(), first.tolist(), second.tolist()):
        y, z = state.friends[x][i], state.friends[x][j]
        if y in state.friends[z] or y in state.cofriends[z]:
            hits += 1

    return hits / sample_count


def run_round(state, ranking, config):
    """Run one round of friend set updates.

    Return the new state and the round statistics.  The result only
    depends on the state, the ranking system and the configuration:
    neither the number of workers nor the order of proposals matters.

    """
    workers = resolve_workers(config.workers)
    index = state.round + 1
    start = time.perf_counter()
    proposals = propose_all(state, ranking, workers)
    friends = {x: tuple(proposal.members)
            for x, proposal in enumerate(proposals)}
    changed = sum(1 for x in friends if friends[x] != state.friends[x])
    comparisons = sum(proposal.comparisons for proposal in proposals)
    new_state = KnnState.from_friends(friends, index, state.fcc_history)

    fcc = friend_clustering_rate(new_state, config.fcc_samples,
            substream(config.seed, FCC_STREAM, index))
    new_state = KnnState(new_state.friends, new_state.cofriends, index,
            state.fcc_history + (fcc, ))
    duration = time.perf_counter() - start
    stats = RoundStats(index, duration, fcc, comparisons, changed)
    logger.info("Round %d: fcc=%.4f, %d friend sets changed, " \
            "%d comparisons, %.3f s", index, fcc, changed, comparisons,
            duration)
    return new_state, stats


def run(dataset, ranking, config):
    """Run the K-NN descent until the friend clustering rate stalls.

    The descent stops at the first round r >= 2 whose clustering rate
    is no greater than the rate of round r - 1, or after the maximum
    number of rounds.  Return a DescentResult.

    """
    config.check(dataset)
    max_rounds = config.rounds_for(dataset.n)
    logger.info("K-NN descent on %d items, K=%d, at most %d rounds " \
            "(budget %d)", dataset.n, config.k, max_rounds,
            round_budget(dataset.n, config.k))
    state = init_random_kout(dataset, ranking, config)
    result = DescentResult(state)
    for _ in range(max_rounds):
        state, stats = run_round(state, ranking, config)
        result.rounds.append(stats)
        result.state = state
        history = state.fcc_history
        if len(history) >= 2 and history[-1] <= history[-2]:
            result.terminated = True
            break
    else:
        if max_rounds > 1:
            logger.warning("Stopped after %d rounds without the " \
                    "clustering rate settling", max_rounds)

    return result
