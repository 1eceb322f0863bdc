# app/poset/invariants.py
"""Reconstruction operators on an abstract pointed poset (X, <=).

Everything here sees only the order and the rank function. X_k denotes the
elements of rank k; subsets of X_1 are passed as iterables of element ids.
"""
import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Set, Tuple

from networkx.utils import UnionFind

from ..coxeter.bw_graph import BLACK, WHITE, BWGraph
from ..errors import DomainError
from .pointed import PointedPoset

logger = logging.getLogger(__name__)

SubPoset = Tuple[PointedPoset, List[int]]


def _rank_one_subset(p: PointedPoset, elements: Iterable[int]) -> FrozenSet[int]:
    chosen = frozenset(elements)
    for x in chosen:
        if not 0 <= x < p.size or p.rank(x) != 1:
            raise DomainError(f'{x} is not an element of rank 1')
    return chosen


def x2_of(p: PointedPoset, I: Iterable[int]) -> List[int]:
    """Rank-2 elements whose lower covers are exactly I."""
    chosen = _rank_one_subset(p, I)
    return [x for x in p.of_rank(2) if frozenset(p.lower_covers(x)) == chosen]


def x0_elements(p: PointedPoset, I: Iterable[int]) -> List[int]:
    chosen = _rank_one_subset(p, I)
    allowed = 0
    for x in x2_of(p, chosen):
        allowed |= 1 << x
    rank_two = 0
    for x in p.of_rank(2):
        rank_two |= 1 << x
    members = [p.least] + sorted(chosen)
    for x in range(p.size):
        if p.rank(x) > 1 and p.down_set(x) & rank_two & ~allowed == 0:
            members.append(x)
    return members


def x0_of(p: PointedPoset, I: Iterable[int]) -> SubPoset:
    return p.restrict(x0_elements(p, I))


def xinf_elements(p: PointedPoset, I: Iterable[int]) -> List[int]:
    chosen = _rank_one_subset(p, I)
    forbidden = 0
    for x in p.of_rank(1):
        if x not in chosen:
            forbidden |= 1 << x
    return [x for x in range(p.size) if p.down_set(x) & forbidden == 0]


def xinf_of(p: PointedPoset, I: Iterable[int]) -> SubPoset:
    """Elements all of whose rank-1 predecessors lie in I."""
    return p.restrict(xinf_elements(p, I))


def mu(p: PointedPoset, a: int, b: int) -> int:
    if a == b:
        raise DomainError('mu is defined on distinct elements only')
    return max(p.rank(x) for x in x0_elements(p, (a, b)))


def nu(p: PointedPoset, a: int) -> int:
    return len(x2_of(p, (a,)))


@dataclass(frozen=True)
class ReconTriple:
    x1: Tuple[int, ...]
    mu: Dict[FrozenSet[int], int]
    nu: Dict[int, int]

    def mu_of(self, a: int, b: int) -> int:
        if a == b:
            raise DomainError('mu is defined on distinct elements only')
        return self.mu[frozenset((a, b))]

    def to_dict(self) -> Dict[str, list]:
        return {
            'x1': list(self.x1),
            'mu': sorted([*sorted(pair), value] for pair, value in self.mu.items()),
            'nu': [[a, self.nu[a]] for a in self.x1],
        }


def triple(p: PointedPoset) -> ReconTriple:
    x1 = tuple(p.of_rank(1))
    mus = {frozenset((a, b)): mu(p, a, b) for i, a in enumerate(x1) for b in x1[i + 1:]}
    return ReconTriple(x1, mus, {a: nu(p, a) for a in x1})


def leads_to(p: PointedPoset, a: int, b: int) -> bool:
    """mu(a, b) = 2 and some y in X0(a) has two distinct upper covers above b."""
    if mu(p, a, b) != 2:
        return False
    for y in x0_elements(p, (a,)):
        above_b = [z for z in p.upper_covers(y) if p.leq(b, z)]
        if len(above_b) >= 2:
            return True
    return False


@dataclass(frozen=True)
class SimClasses:
    blocks: Tuple[Tuple[int, ...], ...]

    def block_of(self, a: int) -> Tuple[int, ...]:
        return next(block for block in self.blocks if a in block)

    def __len__(self) -> int:
        return len(self.blocks)


def sim_classes(p: PointedPoset) -> SimClasses:
    """Equivalence on X_1 generated by mu > 2 and by leads_to in either direction."""
    x1 = p.of_rank(1)
    classes = UnionFind(x1)
    for i, a in enumerate(x1):
        for b in x1[i + 1:]:
            if mu(p, a, b) > 2 or leads_to(p, a, b) or leads_to(p, b, a):
                classes.union(a, b)
    blocks = sorted(tuple(sorted(s)) for s in classes.to_sets())
    return SimClasses(tuple(blocks))


def factor_posets(p: PointedPoset) -> List[SubPoset]:
    return [xinf_of(p, block) for block in sim_classes(p).blocks]


def vx(p: PointedPoset) -> List[int]:
    """Non-zero elements lying above at most one element of each rank."""
    masks = [0] * (p.length + 1)
    for x in range(p.size):
        masks[p.rank(x)] |= 1 << x
    found = []
    for x in range(1, p.size):
        below = p.down_set(x)
        if all(bin(below & masks[k]).count('1') <= 1 for k in range(p.rank(x) + 1)):
            found.append(x)
    return found


def g_of(p: PointedPoset) -> BWGraph:
    """bw-graph read off the poset.

    Black vertices are X_1 and white ones the rest of VX. Black pairs with
    mu >= 3 are joined, labelled by mu when it exceeds 3. Covers inside VX
    are edges. Each black a is joined to the minimal x in VX with a not
    below x that has two distinct upper covers above a.
    """
    x1 = p.of_rank(1)
    members = vx(p)
    in_vx: Set[int] = set(members)
    colours = {x: (BLACK if p.rank(x) == 1 else WHITE) for x in members}
    edges: Dict[Tuple[int, int], object] = {}

    for i, a in enumerate(x1):
        for b in x1[i + 1:]:
            m = mu(p, a, b)
            if m >= 3:
                edges[(a, b)] = m if m > 3 else None

    for x, y in p.covers:
        if x in in_vx and y in in_vx:
            edges.setdefault((x, y), None)

    for a in x1:
        candidates = [
            x
            for x in members
            if not p.leq(a, x) and sum(1 for z in p.upper_covers(x) if p.leq(a, z)) >= 2
        ]
        for x in candidates:
            if not any(y != x and p.leq(y, x) for y in candidates):
                edges.setdefault((min(a, x), max(a, x)), None)

    logger.debug('G(X) has %d vertices and %d edges', len(colours), len(edges))
    return BWGraph.build(colours, [(a, b, label) for (a, b), label in edges.items()])
