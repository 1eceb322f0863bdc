# app/coxeter/matrix.py
"""Coxeter matrices, named Weyl types and parabolic subsets.

Generators are integer identifiers. Named constructors number them 1..n
following the usual drawings of the Dynkin diagrams:

* A_n, B_n: a chain s1 - s2 - ... - sn, in B_n the bond between s_{n-1}
  and s_n is 4.
* D_n: a chain s1 - ... - s_{n-2}, with both s_{n-1} and s_n attached to
  s_{n-2}.
* E_n: a chain s1 - ... - s_{n-1}, with the branch generator s_n attached
  to s3.
* F4: s1 - s2 =4= s3 - s4.
* G2: s1 =6= s2.
"""
import math
from dataclasses import dataclass, field
from itertools import chain, combinations
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

import networkx as nx

from ..errors import CoxeterError

INFINITY = math.inf
Bond = Union[int, float]

WEYL_BONDS = frozenset({2, 3, 4, 6})

# Smallest and largest admissible rank per family (None = unbounded)
_RANK_BOUNDS: Dict[str, Tuple[int, Optional[int]]] = {
    'A': (1, None),
    'B': (2, None),
    'D': (4, None),
    'E': (6, 8),
    'F': (4, 4),
    'G': (2, 2),
}


@dataclass(frozen=True)
class CoxeterMatrix:
    """Symmetric bond matrix m(s,t) over an ordered generator set."""

    generators: Tuple[int, ...]
    bonds: Tuple[Tuple[Bond, ...], ...]
    _index: Dict[int, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        n = len(self.generators)
        if len(set(self.generators)) != n:
            raise CoxeterError('generator identifiers must be distinct')
        if len(self.bonds) != n or any(len(row) != n for row in self.bonds):
            raise CoxeterError(f'bond matrix must be {n}x{n}')
        for i in range(n):
            if self.bonds[i][i] != 1:
                raise CoxeterError(f'm(s,s) must be 1 for generator {self.generators[i]}')
            for j in range(i + 1, n):
                m = self.bonds[i][j]
                if m != self.bonds[j][i]:
                    raise CoxeterError(
                        f'bond matrix is not symmetric at '
                        f'({self.generators[i]}, {self.generators[j]})'
                    )
                if m != INFINITY and (int(m) != m or m < 2):
                    raise CoxeterError(
                        f'bond m({self.generators[i]}, {self.generators[j]}) = {m} '
                        f'must be an integer >= 2 or infinity'
                    )
        object.__setattr__(self, '_index', {s: i for i, s in enumerate(self.generators)})

    @classmethod
    def from_edges(cls, generators: Sequence[int], edges: Dict[Tuple[int, int], Bond]) -> 'CoxeterMatrix':
        """Build a matrix from the bonds > 2; every other pair commutes."""
        gens = tuple(generators)
        index = {s: i for i, s in enumerate(gens)}
        rows = [[1 if i == j else 2 for j in range(len(gens))] for i in range(len(gens))]
        for (s, t), m in edges.items():
            if s not in index or t not in index:
                raise CoxeterError(f'edge ({s}, {t}) uses an unknown generator')
            if s == t:
                raise CoxeterError(f'self-loop on generator {s}')
            rows[index[s]][index[t]] = m
            rows[index[t]][index[s]] = m
        return cls(gens, tuple(tuple(row) for row in rows))

    @property
    def rank(self) -> int:
        return len(self.generators)

    def index(self, s: int) -> int:
        try:
            return self._index[s]
        except KeyError:
            raise CoxeterError(f'{s} is not a generator') from None

    def bond(self, s: int, t: int) -> Bond:
        return self.bonds[self.index(s)][self.index(t)]

    def neighbours(self, s: int) -> FrozenSet[int]:
        i = self.index(s)
        return frozenset(t for j, t in enumerate(self.generators) if self.bonds[i][j] > 2)

    def edges(self) -> List[Tuple[int, int, Bond]]:
        """Pairs with m(s,t) > 2, as (s, t, m) with s before t."""
        n = self.rank
        return [
            (self.generators[i], self.generators[j], self.bonds[i][j])
            for i in range(n)
            for j in range(i + 1, n)
            if self.bonds[i][j] > 2
        ]

    def graph(self) -> nx.Graph:
        """The Coxeter graph, edges carry their bond as ``bond``."""
        g = nx.Graph()
        g.add_nodes_from(self.generators)
        for s, t, m in self.edges():
            g.add_edge(s, t, bond=m)
        return g

    def submatrix(self, subset: Iterable[int]) -> 'CoxeterMatrix':
        members = set(subset)
        for s in members:
            self.index(s)
        keep = [i for i, s in enumerate(self.generators) if s in members]
        return CoxeterMatrix(
            tuple(self.generators[i] for i in keep),
            tuple(tuple(self.bonds[i][j] for j in keep) for i in keep),
        )

    def is_weyl(self) -> bool:
        return all(m in WEYL_BONDS for s, t, m in self.edges())

    def to_dict(self) -> Dict[str, object]:
        return {
            'generators': list(self.generators),
            'bonds': [[s, t, m if m != INFINITY else None] for s, t, m in self.edges()],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, object]) -> 'CoxeterMatrix':
        edges = {
            (s, t): (INFINITY if m is None else m)
            for s, t, m in data['bonds']
        }
        return cls.from_edges(data['generators'], edges)

    def __repr__(self) -> str:
        return f'<CoxeterMatrix rank={self.rank} edges={self.edges()}>'


@dataclass(frozen=True, order=True)
class WeylType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in _RANK_BOUNDS:
            raise CoxeterError(f'unknown Weyl family {self.family!r}')
        low, high = _RANK_BOUNDS[self.family]
        if self.rank < low or (high is not None and self.rank > high):
            raise CoxeterError(f'{self.family}{self.rank} is not a valid Weyl type')

    @property
    def name(self) -> str:
        return f'{self.family}{self.rank}'

    @classmethod
    def parse(cls, text: str) -> 'WeylType':
        text = text.strip()
        if len(text) < 2 or not text[1:].isdigit():
            raise CoxeterError(f'cannot read a Weyl type from {text!r}')
        return cls(text[0].upper(), int(text[1:]))

    def __str__(self) -> str:
        return self.name


def build_weyl(t: WeylType) -> CoxeterMatrix:
    """Coxeter matrix of the irreducible Weyl type ``t``."""
    n = t.rank
    gens = list(range(1, n + 1))
    edges: Dict[Tuple[int, int], Bond] = {}
    if t.family in ('A', 'B'):
        for i in range(1, n):
            edges[(i, i + 1)] = 3
        if t.family == 'B':
            edges[(n - 1, n)] = 4
    elif t.family == 'D':
        for i in range(1, n - 1):
            edges[(i, i + 1)] = 3
        edges[(n - 2, n)] = 3
    elif t.family == 'E':
        for i in range(1, n - 1):
            edges[(i, i + 1)] = 3
        edges[(3, n)] = 3
    elif t.family == 'F':
        edges = {(1, 2): 3, (2, 3): 4, (3, 4): 3}
    elif t.family == 'G':
        edges = {(1, 2): 6}
    return CoxeterMatrix.from_edges(gens, edges)


def product(ms: Sequence[CoxeterMatrix]) -> CoxeterMatrix:
    """Disjoint union; generators are renumbered 1..N in input order."""
    offsets = []
    total = 0
    for m in ms:
        offsets.append(total)
        total += m.rank
    edges: Dict[Tuple[int, int], Bond] = {}
    for m, offset in zip(ms, offsets):
        for s, t, bond in m.edges():
            edges[(offset + m.index(s) + 1, offset + m.index(t) + 1)] = bond
    return CoxeterMatrix.from_edges(range(1, total + 1), edges)


def connected_components(m: CoxeterMatrix) -> List[FrozenSet[int]]:
    """Components of the relation m(s,t) > 2, ordered by their first generator."""
    comps = [frozenset(c) for c in nx.connected_components(m.graph())]
    return sorted(comps, key=lambda c: min(m.index(s) for s in c))


def is_simple(m: CoxeterMatrix) -> bool:
    """Connected and acyclic underlying graph."""
    if m.rank == 0:
        return False
    return nx.is_tree(m.graph())


@dataclass(frozen=True)
class ParabolicSubset:
    """A subset J of the generators of ``matrix``."""

    matrix: CoxeterMatrix
    members: FrozenSet[int]

    def __post_init__(self):
        unknown = set(self.members) - set(self.matrix.generators)
        if unknown:
            raise CoxeterError(f'{sorted(unknown)} are not generators of the ambient matrix')
        object.__setattr__(self, 'members', frozenset(self.members))

    @classmethod
    def of(cls, matrix: CoxeterMatrix, members: Iterable[int] = ()) -> 'ParabolicSubset':
        return cls(matrix, frozenset(members))

    @classmethod
    def full(cls, matrix: CoxeterMatrix) -> 'ParabolicSubset':
        return cls(matrix, frozenset(matrix.generators))

    @property
    def complement(self) -> Tuple[int, ...]:
        return tuple(s for s in self.matrix.generators if s not in self.members)

    def sorted(self) -> List[int]:
        return sorted(self.members, key=self.matrix.index)

    def submatrix(self) -> CoxeterMatrix:
        return self.matrix.submatrix(self.members)

    def white_neighbours(self, s: int) -> FrozenSet[int]:
        """Neighbours of ``s`` inside J."""
        return self.matrix.neighbours(s) & self.members

    def to_list(self) -> List[int]:
        return self.sorted()

    def __contains__(self, s: int) -> bool:
        return s in self.members

    def __len__(self) -> int:
        return len(self.members)


def _component_type(m: CoxeterMatrix) -> Optional[WeylType]:
    """Weyl type of a connected matrix, or None if it is not of Weyl type."""
    n = m.rank
    if n == 1:
        return WeylType('A', 1)
    if not m.is_weyl() or not is_simple(m):
        return None
    g = m.graph()
    labels = sorted(bond for _, _, bond in m.edges() if bond > 3)
    degrees = sorted(d for _, d in g.degree())
    if labels == [6]:
        return WeylType('G', 2) if n == 2 else None
    if labels == [4]:
        if degrees[-1] > 2:
            return None
        if n == 2:
            return WeylType('B', 2)
        # the labelled edge sits at an end of the chain for B, in the middle for F4
        s, t = next((s, t) for s, t, bond in m.edges() if bond == 4)
        at_end = g.degree(s) == 1 or g.degree(t) == 1
        if at_end:
            return WeylType('B', n)
        return WeylType('F', 4) if n == 4 else None
    if labels:
        return None
    if degrees[-1] <= 2:
        return WeylType('A', n)
    if degrees[-1] > 3 or degrees.count(3) > 1:
        return None
    branch = next(v for v, d in g.degree() if d == 3)
    legs = []
    for start in g.neighbors(branch):
        length, previous, current = 1, branch, start
        while True:
            nxt = [v for v in g.neighbors(current) if v != previous]
            if not nxt:
                break
            length, previous, current = length + 1, current, nxt[0]
        legs.append(length)
    legs.sort()
    if legs[0] == 1 and legs[1] == 1:
        return WeylType('D', n)
    if legs[0] == 1 and legs[1] == 2 and legs[2] in (2, 3, 4):
        return WeylType('E', n)
    return None


def weyl_type_of(m: CoxeterMatrix) -> Optional[List[WeylType]]:
    """Irreducible Weyl types of the components, in component order.

    Returns None when some component is not of Weyl type.
    """
    types = []
    for comp in connected_components(m):
        t = _component_type(m.submatrix(comp))
        if t is None:
            return None
        types.append(t)
    return types


def type_name(m: CoxeterMatrix) -> str:
    """Name such as ``A3xA1``; ``-`` for the empty matrix, ``?`` when not Weyl."""
    if m.rank == 0:
        return '-'
    types = weyl_type_of(m)
    if types is None:
        return '?'
    return 'x'.join(t.name for t in types)


def nontrivial_components(m: CoxeterMatrix, J: ParabolicSubset) -> List[FrozenSet[int]]:
    """Components not contained in J; the others do not show up in W^J."""
    return [c for c in connected_components(m) if not c <= J.members]


def irreducible_weyl_types(max_rank: int) -> List[WeylType]:
    """All irreducible Weyl types of rank at most ``max_rank``."""
    found = []
    for family, (low, high) in _RANK_BOUNDS.items():
        top = max_rank if high is None else min(high, max_rank)
        found.extend(WeylType(family, n) for n in range(low, top + 1))
    return found


def weyl_matrix(types: Iterable[WeylType]) -> CoxeterMatrix:
    return product([build_weyl(t) for t in types])


def pair_name(J: ParabolicSubset) -> str:
    """Descriptor ``GROUP/J@{...}`` that parses back to the same pair."""
    group = type_name(J.matrix)
    if not J.members:
        return f'{group}/-'
    if len(J.members) == J.matrix.rank:
        return f'{group}/*'
    indices = ','.join(str(J.matrix.index(s) + 1) for s in J.sorted())
    return f'{group}/{type_name(J.submatrix())}@{{{indices}}}'


def all_parabolics(m: CoxeterMatrix) -> List[ParabolicSubset]:
    """Every subset J of S, by size then index."""
    gens = m.generators
    subsets = chain.from_iterable(combinations(gens, k) for k in range(len(gens) + 1))
    return [ParabolicSubset.of(m, s) for s in subsets]
