# app/poset/pointed.py
"""Graded posets with a least element.

Elements are the integers 0..n-1, ordered by rank, and element 0 is the least
element. The order is given by its cover relation; containment queries go
through per-element down-sets kept as Python int bitsets.
"""
import logging
from collections import deque
from typing import Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from ..errors import DomainError, NotGradable, PosetError

logger = logging.getLogger(__name__)

# above this size leq is answered by search instead of stored bitsets
MATERIALISE_LIMIT = 2**15

Cover = Tuple[int, int]


class PointedPoset:
    def __init__(
        self,
        ranks: Sequence[int],
        covers: Iterable[Cover],
        labels: Optional[Sequence[Hashable]] = None,
    ):
        self.ranks: Tuple[int, ...] = tuple(int(r) for r in ranks)
        self.size = len(self.ranks)
        self.covers: Tuple[Cover, ...] = tuple(sorted(set((int(a), int(b)) for a, b in covers)))
        self.labels = tuple(labels) if labels is not None else None
        if self.labels is not None and len(self.labels) != self.size:
            raise PosetError('one label per element is required')

        self._lower: List[List[int]] = [[] for _ in range(self.size)]
        self._upper: List[List[int]] = [[] for _ in range(self.size)]
        for a, b in self.covers:
            if not (0 <= a < self.size and 0 <= b < self.size):
                raise PosetError(f'cover ({a}, {b}) uses an unknown element')
            if self.ranks[b] != self.ranks[a] + 1:
                raise NotGradable(f'cover ({a}, {b}) does not raise the rank by one')
            self._lower[b].append(a)
            self._upper[a].append(b)
        self._validate_pointed()
        self._below: Optional[List[int]] = None

    def _validate_pointed(self) -> None:
        if self.size == 0:
            raise NotGradable('empty poset has no least element')
        if list(self.ranks) != sorted(self.ranks):
            raise PosetError('elements must be listed by rank')
        if self.ranks[0] != 0 or self.ranks.count(0) != 1:
            raise NotGradable('exactly one element of rank 0 is required')
        for x in range(1, self.size):
            if not self._lower[x]:
                raise NotGradable(f'element {x} of rank {self.ranks[x]} covers nothing')

    def _down_sets(self) -> Optional[List[int]]:
        """Stored down-sets, built on first use; None above the limit."""
        if self._below is not None or self.size > MATERIALISE_LIMIT:
            return self._below
        below = [0] * self.size
        for x in range(self.size):
            bits = 1 << x
            for y in self._lower[x]:
                bits |= below[y]
            below[x] = bits
        self._below = below
        return below

    @property
    def least(self) -> int:
        return 0

    @property
    def length(self) -> int:
        return self.ranks[-1]

    def rank(self, x: int) -> int:
        return self.ranks[x]

    def lower_covers(self, x: int) -> List[int]:
        return list(self._lower[x])

    def upper_covers(self, x: int) -> List[int]:
        return list(self._upper[x])

    def of_rank(self, k: int) -> List[int]:
        return [x for x in range(self.size) if self.ranks[x] == k]

    def rank_sizes(self) -> List[int]:
        sizes = [0] * (self.length + 1)
        for r in self.ranks:
            sizes[r] += 1
        return sizes

    def down_set(self, x: int) -> int:
        """Bitset of every y <= x."""
        below = self._down_sets()
        if below is not None:
            return below[x]
        bits = 0
        stack = [x]
        while stack:
            y = stack.pop()
            if not bits >> y & 1:
                bits |= 1 << y
                stack.extend(self._lower[y])
        return bits

    def leq(self, a: int, b: int) -> bool:
        if self.ranks[a] > self.ranks[b]:
            return False
        below = self._down_sets()
        if below is not None:
            return bool(below[b] >> a & 1)
        seen = set()
        queue = deque([b])
        while queue:
            y = queue.popleft()
            if y == a:
                return True
            for z in self._lower[y]:
                if z not in seen and self.ranks[z] >= self.ranks[a]:
                    seen.add(z)
                    queue.append(z)
        return False

    def below(self, x: int) -> List[int]:
        bits = self.down_set(x)
        return [y for y in range(self.size) if bits >> y & 1]

    def maximal(self) -> List[int]:
        return [x for x in range(self.size) if not self._upper[x]]

    def comparable_count(self) -> int:
        """Number of pairs a <= b, the diagonal included."""
        return sum(bin(self.down_set(x)).count('1') for x in range(self.size))

    def is_lower_set(self, elements: Iterable[int]) -> bool:
        chosen = set(elements)
        return all(y in chosen for x in chosen for y in self._lower[x])

    def restrict(self, elements: Iterable[int]) -> Tuple['PointedPoset', List[int]]:
        """Sub-poset on a lower set, with inherited order and rank.

        Returns the sub-poset and the origin list mapping each of its
        elements back to this poset.
        """
        origin = sorted(set(elements), key=lambda x: (self.ranks[x], x))
        if not origin or origin[0] != self.least:
            raise DomainError('a restriction must contain the least element')
        if not self.is_lower_set(origin):
            raise DomainError('restriction is only defined on lower sets')
        index = {x: i for i, x in enumerate(origin)}
        covers = [(index[a], index[b]) for a, b in self.covers if a in index and b in index]
        labels = [self.labels[x] for x in origin] if self.labels is not None else origin
        return PointedPoset([self.ranks[x] for x in origin], covers, labels), origin

    def hasse(self) -> nx.DiGraph:
        """Hasse diagram, edges pointing upwards, nodes carry ``rank``."""
        g = nx.DiGraph()
        for x in range(self.size):
            g.add_node(x, rank=self.ranks[x])
        g.add_edges_from(self.covers)
        return g

    def __len__(self) -> int:
        return self.size

    def __repr__(self) -> str:
        return f'<PointedPoset size={self.size} length={self.length} covers={len(self.covers)}>'


def grade_abstract(elements: Sequence[Hashable], relations: Iterable[Tuple[Hashable, Hashable]]) -> PointedPoset:
    """Pointed graded poset from a partial order given by pairs (a, b), a <= b.

    Reflexive pairs are ignored and the relation is closed transitively.
    Raises PosetError when the pairs contain a cycle and NotGradable when
    there is no least element or two maximal chains between comparable
    elements have different lengths.
    """
    g = nx.DiGraph()
    g.add_nodes_from(elements)
    for a, b in relations:
        if a not in g or b not in g:
            raise PosetError(f'relation ({a!r}, {b!r}) uses an unknown element')
        if a != b:
            g.add_edge(a, b)
    if not nx.is_directed_acyclic_graph(g):
        raise PosetError('relation is not antisymmetric')
    if g.number_of_nodes() == 0:
        raise NotGradable('empty poset has no least element')

    reduced = nx.transitive_reduction(g)
    minimal = [x for x in reduced.nodes if reduced.in_degree(x) == 0]
    if len(minimal) != 1:
        raise NotGradable(f'{len(minimal)} minimal elements, a least element is required')
    bottom = minimal[0]

    rank: Dict[Hashable, int] = {bottom: 0}
    for x in nx.topological_sort(reduced):
        for y in reduced.successors(x):
            r = rank[x] + 1
            if y in rank and rank[y] != r:
                raise NotGradable(f'maximal chains to {y!r} have different lengths')
            rank[y] = r

    position = {x: i for i, x in enumerate(elements)}
    order = sorted(g.nodes, key=lambda x: (rank[x], position[x]))
    index = {x: i for i, x in enumerate(order)}
    covers = [(index[a], index[b]) for a, b in reduced.edges]
    logger.debug('graded %d elements, length %d', len(order), max(rank.values()))
    return PointedPoset([rank[x] for x in order], covers, order)


def rank_sizes(p: PointedPoset) -> List[int]:
    return p.rank_sizes()


def length(p: PointedPoset) -> int:
    return p.length
