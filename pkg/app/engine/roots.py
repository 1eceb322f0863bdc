# app/engine/roots.py
"""Cartan matrices and positive roots, in exact integer arithmetic.

Convention: ``C[i][j] = <alpha_i^vee, alpha_j>``. For a bond 4 or 6 between
the i-th and j-th generators with i < j, ``C[i][j]`` is -2 (resp. -3) and
``C[j][i]`` is -1. The Weyl group does not depend on this choice; it only
fixes how weights are written down.

A weight is stored in fundamental-weight coordinates, so the simple root
alpha_j is column j of C and ``s_j(v) = v - v_j * C[:, j]``.
"""
import logging
import math
from collections import deque
from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

from ..coxeter.matrix import CoxeterMatrix, WeylType, weyl_type_of
from ..errors import CoxeterError, NonCrystallographicError

logger = logging.getLogger(__name__)

# off-diagonal pair (C[i][j], C[j][i]) for i < j, per bond
_CARTAN_ENTRIES = {2: (0, 0), 3: (-1, -1), 4: (-2, -1), 6: (-3, -1)}

# more roots than this means the matrix is not of finite type
ROOT_SAFETY_BOUND = 10_000


@dataclass(frozen=True, eq=False)
class CartanMatrix:
    generators: Tuple[int, ...]
    entries: np.ndarray

    @property
    def rank(self) -> int:
        return len(self.generators)

    def column(self, j: int) -> np.ndarray:
        return self.entries[:, j]

    def to_list(self) -> List[List[int]]:
        return self.entries.tolist()

    def __repr__(self) -> str:
        return f'<CartanMatrix {self.to_list()}>'


@dataclass(frozen=True)
class Root:
    """Positive root: coordinates over simple roots and over simple coroots."""

    coords: Tuple[int, ...]
    coroot_coords: Tuple[int, ...]

    @property
    def height(self) -> int:
        return sum(self.coords)

    def pairing(self, weight) -> int:
        """<weight, root^vee> for a weight in fundamental-weight coordinates."""
        return int(sum(c * v for c, v in zip(self.coroot_coords, weight)))

    def weight(self, cartan: CartanMatrix) -> np.ndarray:
        """The root itself, written in fundamental-weight coordinates."""
        return cartan.entries @ np.array(self.coords, dtype=np.int64)


def cartan_of(m: CoxeterMatrix) -> CartanMatrix:
    n = m.rank
    c = np.eye(n, dtype=np.int64) * 2
    for i in range(n):
        for j in range(i + 1, n):
            bond = m.bonds[i][j]
            if bond not in _CARTAN_ENTRIES:
                raise NonCrystallographicError(
                    f'bond {bond} between {m.generators[i]} and {m.generators[j]} '
                    f'has no crystallographic Cartan entry'
                )
            c[i, j], c[j, i] = _CARTAN_ENTRIES[bond]
    return CartanMatrix(m.generators, c)


def positive_roots(cartan: CartanMatrix) -> List[Root]:
    """All positive roots, generated from the simple ones by simple reflections.

    Roots and coroots are reflected together: roots with C, coroots with C^T.
    Returned by height, then coordinates.
    """
    n = cartan.rank
    c = cartan.entries
    simple = [tuple(int(x) for x in row) for row in np.eye(n, dtype=np.int64)]
    seen = {s: s for s in simple}
    queue = deque(simple)
    while queue:
        b = queue.popleft()
        b_vec = np.array(b, dtype=np.int64)
        co_vec = np.array(seen[b], dtype=np.int64)
        for j in range(n):
            if b == simple[j]:
                continue
            nb = b_vec.copy()
            nb[j] -= int(c[j] @ b_vec)
            if nb[j] < 0:
                continue
            key = tuple(int(x) for x in nb)
            if key in seen:
                continue
            nco = co_vec.copy()
            nco[j] -= int(c[:, j] @ co_vec)
            seen[key] = tuple(int(x) for x in nco)
            queue.append(key)
            if len(seen) > ROOT_SAFETY_BOUND:
                raise CoxeterError('root enumeration does not terminate: not of finite type')
    roots = [Root(b, co) for b, co in seen.items()]
    roots.sort(key=lambda r: (r.height, r.coords))
    logger.debug('rank %d: %d positive roots', n, len(roots))
    return roots


def longest_length(m: CoxeterMatrix) -> int:
    """l(w0) as the number of positive roots; 0 for the empty matrix."""
    if m.rank == 0:
        return 0
    return len(positive_roots(cartan_of(m)))


def group_order(t: WeylType) -> int:
    n = t.rank
    if t.family == 'A':
        return math.factorial(n + 1)
    if t.family == 'B':
        return 2**n * math.factorial(n)
    if t.family == 'D':
        return 2 ** (n - 1) * math.factorial(n)
    return {'E6': 51840, 'E7': 2903040, 'E8': 696729600, 'F4': 1152, 'G2': 12}[t.name]


def matrix_order(m: CoxeterMatrix) -> int:
    """|W| for a product of Weyl types (1 for the empty matrix)."""
    types = weyl_type_of(m)
    if types is None:
        raise NonCrystallographicError(f'{m!r} is not of Weyl type')
    return math.prod(group_order(t) for t in types)
