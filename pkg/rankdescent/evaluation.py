# Copyright (c) 2026, the rankdescent authors
# All rights reserved.  See LICENSE for the terms (3-clause BSD).

"""Module containing the exact K-NN oracle, recall and ranking digraphs.

The exact oracle sorts, for each anchor, all the other items.  It
costs O(n^2 log n) comparisons and serves as ground truth for small
and medium datasets.

The ranking digraph of a small point set has a vertex for each
unordered pair {a, b} of points, and an arc {x, y} -> {x, z} whenever
y precedes z in the order of x.  It's acyclic if and only if the
ranking system derives from a metric, so a directed cycle proves
that a ranking system isn't metrizable.

"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
import logging
import time

from rankdescent.dataset import Dataset
from rankdescent.descent import ConfigurationError, resolve_workers
from rankdescent.providers import KlRankingSystem, sample_simplex_uniform
from rankdescent.ranking import LESS, ScoredRankingSystem

logger = logging.getLogger(__name__)

DIGRAPH_LIMIT = 64
RECALL_SAMPLE = 6

# Depth-first search colors
WHITE, GRAY, BLACK = 0, 1, 2


def _nearest(x, n, ranking, k):
    others = [y for y in range(n) if y != x]
    if isinstance(ranking, ScoredRankingSystem):
        ordered, _ = ranking.order(x, others)
        return tuple(ordered[:k].tolist())

    return tuple(ranking.ranked(x, others)[:k])


def exact_knn(dataset, ranking, k, anchors=None, workers=1):
    """Return the exact K-NN graph as a dictionary.

    For every anchor x (all items by default), the value is the
    tuple of the first K items of S - {x} sorted under the order of x.

    """
    n = dataset.n
    if n <= k:
        raise ConfigurationError("the exact K-NN graph needs more than " \
                "K={} items, got {}".format(k, n))

    anchors = list(range(n)) if anchors is None else sorted(anchors)
    workers = resolve_workers(workers)
    start = time.perf_counter()
    if workers == 1:
        neighbors = [_nearest(x, n, ranking, k) for x in anchors]
    else:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            neighbors = list(executor.map(
                    lambda x: _nearest(x, n, ranking, k), anchors))

    logger.info("Exact K-NN of %d anchors in %.3f s", len(anchors),
            time.perf_counter() - start)
    return dict(zip(anchors, neighbors))


def recall(approx, exact, sample_ids=None):
    """Return the mean proportion of true neighbors found.

    The mean is taken over 'sample_ids', or over every anchor of
    'exact' when no sample is given.

    """
    if sample_ids is None:
        sample_ids = list(exact)
    sample_ids = list(sample_ids)
    if not sample_ids:
        raise ValueError("recall needs at least one sampled item")

    total = 0.0
    for x in sample_ids:
        found, truth = approx[x], exact[x]
        if len(found) != len(truth):
            raise ValueError("item {}: {} approximate neighbors but {} " \
                    "exact ones".format(x, len(found), len(truth)))

        total += len(set(found) & set(truth)) / len(truth)

    return total / len(sample_ids)


def recall_sample(n, rng, size=RECALL_SAMPLE):
    """Return 'size' distinct ids drawn uniformly among n items."""
    return sorted(rng.choice(n, size=min(size, n), replace=False).tolist())


def pair(a, b):
    """Return the vertex {a, b} of a ranking digraph."""
    return (a, b) if a < b else (b, a)


def format_vertex(vertex):
    return "{{{},{}}}".format(*vertex)


def format_cycle(cycle):
    """Format a cycle as "{1,2} -> {1,4} -> {2,4} -> {1,2}"."""
    return " -> ".join(format_vertex(vertex) for vertex in cycle)


@dataclass
class RankingDigraph:

    """The orientation of the line graph given by a ranking system.

    'arcs' maps every vertex (a pair (a, b) with a < b) to the list of
    its successors.

    """

    points: int
    arcs: dict = field(default_factory=dict)

    @property
    def vertices(self):
        return list(self.arcs)

    @property
    def arc_count(self):
        return sum(len(successors) for successors in self.arcs.values())

    def successors(self, vertex):
        return self.arcs[vertex]

    def has_arc(self, source, target):
        return target in self.arcs.get(source, ())

    def to_dot(self, cycle=None):
        """Return the digraph in DOT format.

        Vertices of 'cycle', if given, are filled in black.

        """
        marked = set(cycle or ())
        lines = ["digraph ranking {"]
        for vertex in self.arcs:
            attributes = ""
            if vertex in marked:
                attributes = " [style=filled, fillcolor=black, " \
                        "fontcolor=white]"
            lines.append('    "{}"{};'.format(format_vertex(vertex),
                    attributes))

        for source, successors in self.arcs.items():
            for target in successors:
                lines.append('    "{}" -> "{}";'.format(
                        format_vertex(source), format_vertex(target)))

        lines.append("}")
        return "\n".join(lines) + "\n"


def build_ranking_digraph(dataset, ranking):
    """Build the ranking digraph of a small dataset."""
    n = dataset.n
    if n > DIGRAPH_LIMIT:
        raise ValueError("the ranking digraph is limited to {} points, " \
                "got {}".format(DIGRAPH_LIMIT, n))

    digraph = RankingDigraph(n)
    for a, b in combinations(range(n), 2):
        digraph.arcs[(a, b)] = []

    for x in range(n):
        others = [y for y in range(n) if y != x]
        for y, z in combinations(others, 2):
            if ranking.compare(x, y, z) == LESS:
                source, target = pair(x, y), pair(x, z)
            else:
                source, target = pair(x, z), pair(x, y)
            digraph.arcs[source].append(target)

    return digraph


def find_cycle_witness(digraph):
    """Return a directed cycle [v0, v1, ..., v0], or None if acyclic.

    The depth-first search uses three colors: white vertices aren't
    visited yet, gray ones are on the current path, black ones are
    done.  An arc to a gray vertex closes a cycle.

    """
    color = {vertex: WHITE for vertex in digraph.arcs}
    for root in digraph.arcs:
        if color[root] != WHITE:
            continue

        path = [root]
        iterators = [iter(digraph.successors(root))]
        color[root] = GRAY
        while iterators:
            successor = next(iterators[-1], None)
            if successor is None:
                color[path.pop()] = BLACK
                iterators.pop()
            elif color[successor] == GRAY:
                return path[path.index(successor):] + [successor]
            elif color[successor] == WHITE:
                color[successor] = GRAY
                path.append(successor)
                iterators.append(iter(digraph.successors(successor)))

    return None


def search_non_metric_witness(d, trials, rng, ranking_class=KlRankingSystem,
        points=6):
    """Look for a point set whose ranking digraph has a cycle.

    Each trial samples 'points' simplex points with d coordinates and
    builds the ranking digraph.  Return (dataset, cycle) for the first
    cycle found, or None once 'trials' are spent.

    """
    if d < 3:
        raise ConfigurationError("the witness search needs d >= 3, " \
                "not {}".format(d))

    for trial in range(trials):
        dataset = Dataset(sample_simplex_uniform(d, points, rng))
        digraph = build_ranking_digraph(dataset, ranking_class(dataset))
        cycle = find_cycle_witness(digraph)
        if cycle is not None:
            logger.debug("Witness found at trial %d", trial + 1)
            return dataset, cycle

    logger.debug("No witness in %d trials", trials)
    return None
