# app/oracle/brute_force.py
"""Brute-force ground truth for small Weyl groups.

Every element is an integer matrix of the reflection representation in the
simple-root basis, found by breadth-first multiplication on the right, and
keeps the first reduced word that reached it. Bruhat comparisons use the
subword property on that stored word. Nothing here depends on the orbit
engine except the Cartan matrix.
"""
import logging
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

import numpy as np

from ..coxeter.matrix import CoxeterMatrix, ParabolicSubset, pair_name
from ..engine.roots import cartan_of
from ..errors import EnumerationOverflow
from ..poset.pointed import PointedPoset, grade_abstract

logger = logging.getLogger(__name__)

DEFAULT_CAP = 10_000

Key = Tuple[int, ...]


@dataclass(frozen=True, eq=False)
class GroupElement:
    index: int
    matrix: np.ndarray
    word: Tuple[int, ...]

    @property
    def key(self) -> Key:
        return tuple(int(x) for x in self.matrix.flat)

    @property
    def length(self) -> int:
        return len(self.word)

    def __repr__(self) -> str:
        letters = ''.join(f's{s}' for s in self.word) or 'e'
        return f'<GroupElement {letters}>'


class OracleGroup:
    """The full group with a right-multiplication table over element indices."""

    def __init__(self, coxeter: CoxeterMatrix, elements: List[GroupElement], right: List[Dict[int, int]]):
        self.coxeter = coxeter
        self.elements = elements
        self.right = right

    @property
    def generators(self) -> Tuple[int, ...]:
        return self.coxeter.generators

    def multiply(self, index: int, s: int) -> int:
        return self.right[index][s]

    def element_of_word(self, word: Iterable[int]) -> int:
        index = 0
        for s in word:
            index = self.right[index][s]
        return index

    def right_descents(self, index: int) -> List[int]:
        length = self.elements[index].length
        return [s for s in self.generators if self.elements[self.right[index][s]].length < length]

    @cached_property
    def positive_roots(self) -> List[Key]:
        return oracle_positive_roots(self)

    @cached_property
    def longest(self) -> GroupElement:
        return max(self.elements, key=lambda e: e.length)

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        return f'<OracleGroup order={len(self)}>'


def simple_reflections(m: CoxeterMatrix) -> Dict[int, np.ndarray]:
    """s_i(alpha_j) = alpha_j - C[i][j] alpha_i, as matrices acting on columns."""
    c = cartan_of(m).entries
    n = m.rank
    mats = {}
    for i, s in enumerate(m.generators):
        mat = np.eye(n, dtype=np.int64)
        mat[i, :] -= c[i, :]
        mats[s] = mat
    return mats


def enumerate_group(m: CoxeterMatrix, cap: int = DEFAULT_CAP) -> OracleGroup:
    gens = simple_reflections(m)
    identity = np.eye(m.rank, dtype=np.int64)
    first = GroupElement(0, identity, ())
    elements = [first]
    by_key = {first.key: 0}
    queue = deque([0])
    while queue:
        index = queue.popleft()
        g = elements[index]
        for s, mat in gens.items():
            h = GroupElement(len(elements), g.matrix @ mat, g.word + (s,))
            if h.key in by_key:
                continue
            if len(elements) >= cap:
                raise EnumerationOverflow(f'group of {m!r}', cap)
            by_key[h.key] = h.index
            elements.append(h)
            queue.append(h.index)
    right = [{s: by_key[tuple(int(x) for x in (g.matrix @ mat).flat)] for s, mat in gens.items()} for g in elements]
    logger.debug('enumerated %d group elements', len(elements))
    return OracleGroup(m, elements, right)


def lower_interval(group: OracleGroup, v: int, word: Optional[Tuple[int, ...]] = None) -> FrozenSet[int]:
    """Elements given by subwords of a reduced word of v, taken reduced.

    ``word`` defaults to the stored word of v.
    """
    word = group.elements[v].word if word is None else word
    states: Set[Tuple[int, int]] = {(0, 0)}
    for s in word:
        states |= {(group.multiply(u, s), k + 1) for u, k in states}
    return frozenset(u for u, k in states if group.elements[u].length == k)


def bruhat_le(group: OracleGroup, u: int, v: int) -> bool:
    if group.elements[u].length > group.elements[v].length:
        return False
    return u in lower_interval(group, v)


def min_coset_reps(group: OracleGroup, J: ParabolicSubset) -> List[int]:
    """Elements without right descents in J, one per coset wW_J."""
    return [
        e.index
        for e in group.elements
        if not any(s in J for s in group.right_descents(e.index))
    ]


def oracle_poset(m: CoxeterMatrix, J: ParabolicSubset, cap: int = DEFAULT_CAP) -> Tuple[PointedPoset, OracleGroup]:
    """Subword order on the minimal representatives; labels are element indices."""
    group = enumerate_group(m, cap)
    reps = min_coset_reps(group, J)
    chosen = set(reps)
    relations = [(u, v) for v in reps for u in lower_interval(group, v) if u in chosen]
    poset = grade_abstract(reps, relations)
    logger.debug('oracle poset of %s: %d elements', pair_name(J), poset.size)
    return poset, group


def count_reduced_words(group: OracleGroup, w: int) -> int:
    """Reduced words of w, through the recursion over right descents."""
    counts: Dict[int, int] = {0: 1}
    order = sorted(range(len(group)), key=lambda i: group.elements[i].length)
    below = {w} | set(lower_interval(group, w))
    for i in order:
        if i == 0 or i not in below:
            continue
        counts[i] = sum(counts[group.multiply(i, s)] for s in group.right_descents(i))
    return counts[w]


def black_letters(word: Iterable[int], J: ParabolicSubset) -> Set[int]:
    return {s for s in word if s not in J}


def unique_below(group: OracleGroup, J: ParabolicSubset, w: int) -> bool:
    """Every v in W^J below w has a unique reduced word, and w uses one generator outside J."""
    if len(black_letters(group.elements[w].word, J)) != 1:
        return False
    reps = set(min_coset_reps(group, J))
    return all(count_reduced_words(group, v) == 1 for v in lower_interval(group, w) if v in reps)


def unique_expression_set(group: OracleGroup, J: ParabolicSubset) -> List[int]:
    return [w for w in min_coset_reps(group, J) if unique_below(group, J, w)]


def oracle_positive_roots(group: OracleGroup) -> List[Key]:
    """Images of the simple roots with non-negative coordinates."""
    n = group.coxeter.rank
    found = set()
    for g in group.elements:
        for i in range(n):
            beta = g.matrix[:, i]
            if (beta >= 0).all():
                found.add(tuple(int(x) for x in beta))
    return sorted(found)


def inversion_count(group: OracleGroup, w: int) -> int:
    """Positive roots sent to negative roots by w."""
    mat = group.elements[w].matrix
    return sum(1 for beta in group.positive_roots if (mat @ np.array(beta) < 0).any())
