# app/engine/quotient.py
"""Minimal coset representatives W^J as the orbit of the seed weight.

The seed lambda_J has coordinate 1 on S minus J and 0 on J, so its stabiliser
is exactly W_J and orbit points correspond to elements of W^J.
"""
import logging
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..coxeter.matrix import CoxeterMatrix, ParabolicSubset, pair_name, type_name
from ..errors import CoxeterError, EnumerationOverflow
from .roots import CartanMatrix, Root, cartan_of, longest_length, positive_roots

logger = logging.getLogger(__name__)

Weight = Tuple[int, ...]

UP = 'up'
DOWN = 'down'


@dataclass(frozen=True)
class OrbitElement:
    weight: Weight
    length: int

    def to_dict(self) -> Dict[str, object]:
        return {'weight': list(self.weight), 'length': self.length}


class QuotientTable:
    """Complete, deduplicated table of W^J, ordered by (length, weight)."""

    def __init__(self, matrix: CoxeterMatrix, parabolic: ParabolicSubset, cartan: CartanMatrix, elements: List[OrbitElement]):
        self.matrix = matrix
        self.parabolic = parabolic
        self.cartan = cartan
        self.elements = tuple(elements)
        self.by_weight: Dict[Weight, int] = {e.weight: i for i, e in enumerate(self.elements)}

    @cached_property
    def roots(self) -> List[Root]:
        if self.matrix.rank == 0:
            return []
        return positive_roots(self.cartan)

    @cached_property
    def root_weights(self) -> List[np.ndarray]:
        return [r.weight(self.cartan) for r in self.roots]

    @property
    def seed(self) -> OrbitElement:
        return self.elements[0]

    @property
    def max_length(self) -> int:
        return self.elements[-1].length

    def index_of(self, e: OrbitElement) -> int:
        return self.by_weight[e.weight]

    def inversions(self, e: OrbitElement) -> int:
        """Positive roots paired negatively with the weight; equals the length."""
        return sum(1 for r in self.roots if r.pairing(e.weight) < 0)

    def to_dict(self) -> Dict[str, object]:
        return {
            'pair': {
                'name': pair_name(self.parabolic),
                'group': type_name(self.matrix),
                'parabolic': [self.matrix.index(s) + 1 for s in self.parabolic.sorted()],
            },
            'elements': [e.to_dict() for e in self.elements],
        }

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        return f'<QuotientTable {pair_name(self.parabolic)} size={len(self)}>'


def seed_weight(J: ParabolicSubset) -> Weight:
    return tuple(0 if s in J else 1 for s in J.matrix.generators)


def reflect(cartan: CartanMatrix, i: int, weight: Sequence[int]) -> Weight:
    """s_i applied to a weight, i a position in the generator order."""
    v = np.array(weight, dtype=np.int64)
    v = v - v[i] * cartan.column(i)
    return tuple(int(x) for x in v)


def enumerate_quotient(m: CoxeterMatrix, J: ParabolicSubset, cap: Optional[int] = None) -> QuotientTable:
    """Breadth-first orbit of the seed, applying s_i only when v_i > 0.

    Such a step always raises the length by one, so BFS depth is the length.
    Raises EnumerationOverflow once more than ``cap`` elements are found.
    """
    if J.matrix != m:
        raise CoxeterError('parabolic subset belongs to another matrix')
    cartan = cartan_of(m)
    seed = seed_weight(J)
    depth: Dict[Weight, int] = {seed: 0}
    queue = deque([seed])
    while queue:
        v = queue.popleft()
        for i, coordinate in enumerate(v):
            if coordinate <= 0:
                continue
            w = reflect(cartan, i, v)
            if w in depth:
                continue
            depth[w] = depth[v] + 1
            if cap is not None and len(depth) > cap:
                raise EnumerationOverflow(f'quotient {pair_name(J)}', cap)
            queue.append(w)
    elements = sorted((OrbitElement(w, d) for w, d in depth.items()), key=lambda e: (e.length, e.weight))
    logger.debug('%s: %d elements, length %d', pair_name(J), len(elements), elements[-1].length)
    return QuotientTable(m, J, cartan, elements)


def quotient_length(m: CoxeterMatrix, J: ParabolicSubset) -> int:
    return longest_length(m) - longest_length(J.submatrix())


def reflection_images(q: QuotientTable, e: OrbitElement) -> List[Tuple[OrbitElement, str]]:
    """Orbit points t_beta(e) for every positive root beta not orthogonal to e.

    A positive pairing moves up in length, a negative one down. Distinct roots
    can give the same image; each image is reported once.
    """
    v = np.array(e.weight, dtype=np.int64)
    images: Dict[int, Tuple[OrbitElement, str]] = {}
    for root, beta in zip(q.roots, q.root_weights):
        p = root.pairing(e.weight)
        if p == 0:
            continue
        w = tuple(int(x) for x in v - p * beta)
        index = q.by_weight[w]
        if index not in images:
            images[index] = (q.elements[index], UP if p > 0 else DOWN)
    return [images[i] for i in sorted(images)]


def apply_word(cartan: CartanMatrix, word: Sequence[int], weight: Sequence[int]) -> Weight:
    """(s_{i1} ... s_{ik}) applied to ``weight``; the word lists generator ids."""
    position = {s: i for i, s in enumerate(cartan.generators)}
    v = tuple(int(x) for x in weight)
    for s in reversed(word):
        v = reflect(cartan, position[s], v)
    return v


def generator_elements(q: QuotientTable) -> Dict[int, int]:
    """Generator s outside J -> table index of the rank-1 element s."""
    seed = q.seed.weight
    return {
        s: q.by_weight[apply_word(q.cartan, [s], seed)]
        for s in q.matrix.generators
        if s not in q.parabolic
    }


def length_histogram(q: QuotientTable) -> List[int]:
    counts = [0] * (q.max_length + 1)
    for e in q.elements:
        counts[e.length] += 1
    return counts
