# Copyright (c) 2026, the rankdescent authors
# All rights reserved.  See LICENSE for the terms (3-clause BSD).

"""Module containing the BoundedNeighborSet class and friend map tools.

A friend map is a dictionary associating each item id with the
tuple of its friends, nearest first.  The co-friend map is its
transpose: a dictionary associating each item id with the frozenset
of items that have it as a friend.

"""

from rankdescent.ranking import LESS, ScoredRankingSystem


class BoundedNeighborSet(object):

    """An ordered set of at most 'capacity' neighbors of an anchor.

    Members are kept sorted, nearest first, under the anchor's order.
    The set never contains the anchor itself nor duplicates.  Once
    full, a new candidate is compared to the last (farthest) member
    and replaces it only if it is nearer.

    The 'comparisons' attribute counts the comparator calls made
    by this set.  A neighbor set belongs to a single worker and
    must not be shared.

    """

    def __init__(self, anchor, capacity, ranking):
        if capacity < 1:
            raise ValueError("the capacity of a neighbor set must be " \
                    "positive, not {}".format(capacity))

        self.anchor = anchor
        self.capacity = capacity
        self.ranking = ranking
        self.members = []
        self.comparisons = 0

    def __repr__(self):
        return "<rankdescent.BoundedNeighborSet (anchor={}, {})>".format(
                self.anchor, self.members)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, item):
        return item in self.members

    @classmethod
    def from_sorted(cls, anchor, capacity, ranking, members):
        """Build a neighbor set from members already in order.

        No comparison is made: the caller vouches for the order.

        """
        neighbors = cls(anchor, capacity, ranking)
        members = list(members)
        if len(members) > capacity or anchor in members or \
                len(set(members)) != len(members):
            raise ValueError("invalid members for the anchor {}: " \
                    "{}".format(anchor, members))

        neighbors.members = members
        return neighbors

    @property
    def full(self):
        return len(self.members) == self.capacity

    def precedes(self, y, z):
        """Return whether y is nearer to the anchor than z."""
        self.comparisons += 1
        return self.ranking.compare(self.anchor, y, z) == LESS

    def insert(self, candidate):
        """Insert the candidate if it belongs in the set.

        Return whether the set changed.  A candidate already present
        is ignored.  When the set is full, the candidate must precede
        the last member, which is then evicted.

        """
        if candidate == self.anchor:
            raise ValueError("the anchor {} can't be its own " \
                    "neighbor".format(candidate))

        if candidate in self.members:
            return False

        if self.full:
            if not self.precedes(candidate, self.members[-1]):
                return False

            self.members.pop()

        # Binary search of the insertion point
        low, high = 0, len(self.members)
        while low < high:
            middle = (low + high) // 2
            if self.precedes(candidate, self.members[middle]):
                high = middle
            else:
                low = middle + 1

        self.members.insert(low, candidate)
        return True

    def update(self, candidates):
        """Offer several candidates, return whether the set changed.

        The result is the same as inserting each candidate in turn: the
        set ends up holding the nearest 'capacity' items of its former
        members and the candidates.  Scored ranking systems are handled
        in a single vectorised sort, counting one comparison per new
        candidate.

        """
        candidates = [c for c in dict.fromkeys(candidates)
                if c not in self.members]
        if self.anchor in candidates:
            raise ValueError("the anchor {} can't be its own " \
                    "neighbor".format(self.anchor))

        if not candidates:
            return False

        if not isinstance(self.ranking, ScoredRankingSystem):
            changed = False
            for candidate in candidates:
                changed = self.insert(candidate) or changed

            return changed

        before = self.members
        ordered, _ = self.ranking.order(self.anchor,
                before + candidates)
        self.comparisons += len(candidates)
        self.members = ordered[:self.capacity].tolist()
        return self.members != before


def build_cofriends(friends):
    """Return the co-friend map, the exact transpose of 'friends'.

    Every id of the friend map is a key of the result, even when
    nobody has it as a friend.

    """
    cofriends = {x: [] for x in friends}
    for x, members in friends.items():
        for y in members:
            cofriends.setdefault(y, []).append(x)

    return {y: frozenset(members) for y, members in cofriends.items()}
