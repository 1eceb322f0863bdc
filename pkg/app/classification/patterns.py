# app/classification/patterns.py
"""Coxeter pairs to sweep, and the coincidences predicted among them.

Generators of a named type are numbered as in ``app.coxeter.matrix``.
"""
import logging
from dataclasses import dataclass
from itertools import chain, combinations, combinations_with_replacement
from typing import Dict, Iterable, List, Optional, Tuple

from ..coxeter.bw_graph import pairs_isomorphic
from ..coxeter.matrix import (
    CoxeterMatrix,
    ParabolicSubset,
    WeylType,
    all_parabolics,
    build_weyl,
    irreducible_weyl_types,
    pair_name,
    type_name,
    weyl_matrix,
    weyl_type_of,
)

logger = logging.getLogger(__name__)

BucketKey = Tuple[Tuple[str, ...], Tuple[str, ...]]


def make_pair(group: str, members: Iterable[int] = ()) -> ParabolicSubset:
    """Pair on an irreducible named type, J given by generator numbers."""
    return ParabolicSubset.of(build_weyl(WeylType.parse(group)), members)


def irreducible_pairs(max_rank: int) -> List[ParabolicSubset]:
    pairs = []
    for t in irreducible_weyl_types(max_rank):
        pairs.extend(all_parabolics(build_weyl(t)))
    return pairs


def weyl_products(max_rank: int, factors: Optional[int] = None) -> List[List[WeylType]]:
    """Multisets of irreducible types with total rank at most ``max_rank``.

    ``factors`` restricts the number of irreducible factors.
    """
    types = irreducible_weyl_types(max_rank)
    counts = range(1, max_rank + 1) if factors is None else [factors]
    found = []
    for k in counts:
        for combo in combinations_with_replacement(types, k):
            if sum(t.rank for t in combo) <= max_rank:
                found.append(list(combo))
    return found


def product_pairs(max_rank: int, factors: Optional[int] = None) -> List[ParabolicSubset]:
    pairs = []
    for types in weyl_products(max_rank, factors):
        pairs.extend(all_parabolics(weyl_matrix(types)))
    return pairs


def _type_key(m: CoxeterMatrix) -> Tuple[str, ...]:
    """Component types as a sorted multiset; A1xA2 and A2xA1 share a key."""
    types = weyl_type_of(m)
    if types is None:
        return (type_name(m),)
    return tuple(sorted(t.name for t in types))


def _bucket(J: ParabolicSubset) -> BucketKey:
    return _type_key(J.matrix), _type_key(J.submatrix())


def dedupe_pairs(pairs: Iterable[ParabolicSubset]) -> List[Tuple[ParabolicSubset, List[ParabolicSubset]]]:
    """One representative per Coxeter-pair isomorphism class, with its aliases."""
    buckets: Dict[BucketKey, List[Tuple[ParabolicSubset, List[ParabolicSubset]]]] = {}
    ordered = []
    for J in pairs:
        bucket = buckets.setdefault(_bucket(J), [])
        for rep, aliases in bucket:
            if pairs_isomorphic(rep, J):
                aliases.append(J)
                break
        else:
            entry = (J, [])
            bucket.append(entry)
            ordered.append(entry)
    return ordered


def _merge(classes: List[List[ParabolicSubset]]) -> List[List[ParabolicSubset]]:
    """Join classes sharing an isomorphic pair."""
    merged: List[List[ParabolicSubset]] = []
    for cls in classes:
        overlapping = [
            m for m in merged if any(pairs_isomorphic(a, b) for a in m for b in cls)
        ]
        combined = list(cls)
        for m in overlapping:
            merged.remove(m)
            for a in m:
                if not any(pairs_isomorphic(a, b) for b in combined):
                    combined.append(a)
        merged.append(combined)
    return merged


def expected_coincidences(rank_bound: int) -> List[List[ParabolicSubset]]:
    """Classes of non-isomorphic irreducible pairs with isomorphic posets.

    Covers the two infinite series, the two sporadic classes and the class of
    all full parabolics (W, W), which give the one-point poset.
    """
    classes: List[List[ParabolicSubset]] = []
    n = 2
    while n + 1 <= rank_bound:
        classes.append([make_pair(f'A{2 * n + 1}', range(1, 2 * n + 1)), make_pair(f'B{n + 1}', range(2, n + 2))])
        n += 1
    n = 3
    while n <= rank_bound:
        classes.append([make_pair(f'B{n}', range(1, n)), make_pair(f'D{n + 1}', range(1, n + 1))])
        n += 1
    classes.append([make_pair('A3', [1, 2]), make_pair('B2', [1])])
    classes.append([make_pair('A5', [1, 2, 3, 4]), make_pair('G2', [1]), make_pair('B3', [2, 3])])
    classes.append([ParabolicSubset.full(build_weyl(t)) for t in irreducible_weyl_types(rank_bound)])

    # merge first: a class can keep two members after its third drops out of range
    found = []
    for cls in _merge(classes):
        members = [J for J in cls if J.matrix.rank <= rank_bound]
        if len(members) >= 2:
            found.append(members)
    return found


@dataclass(frozen=True)
class FamilyInstance:
    family: str
    left: ParabolicSubset
    right: ParabolicSubset
    expected_difference: int
    m: Optional[int] = None
    n: Optional[int] = None
    # False where the G graphs of the two sides are known to differ
    graphs_match: bool = True

    @property
    def name(self) -> str:
        return f'{pair_name(self.left)} ~ {pair_name(self.right)}'


def _subsets(members: List[int]) -> List[Tuple[int, ...]]:
    return list(chain.from_iterable(combinations(members, k) for k in range(len(members) + 1)))


def family_instances(max_total: int) -> List[FamilyInstance]:
    """Pairs whose posets differ in length although a labelled edge meets J.

    The B/A family and the three fixed instances have isomorphic G graphs.
    The B/D family pairs B_{m+n} over P x A_{n-1} with D_{m+n+1} over
    P x A_n, once per fork leaf of D. Its G graphs differ: the white chain
    between the two black vertices of B gives copies of sizes n and n-1,
    while BU on the D side gives two copies of size n. For m = 2, n = 2 and
    empty P the B side matches F4 over {s2} instead.
    """
    found = [
        FamilyInstance('F4/D5', make_pair('F4', [3, 4]), make_pair('D5', [3, 4, 5]), 7),
        FamilyInstance('F4/E6', make_pair('F4', [2, 3, 4]), make_pair('E6', [2, 3, 4, 5, 6]), -1),
        FamilyInstance('B4/F4', make_pair('B4', [3]), make_pair('F4', [2]), -8),
    ]
    for total in range(3, max_total + 1):
        for n in range(2, total + 1):
            m = total - n
            if m < 1:
                continue
            for P in _subsets(list(range(1, m))):
                left = make_pair(f'B{total}', list(P) + list(range(m + 1, total)))
                for leaf in (total, total + 1):
                    right = make_pair(f'D{total + 1}', list(P) + list(range(m + 1, total)) + [leaf])
                    found.append(FamilyInstance('B/D', left, right, -m, m, n, graphs_match=False))
            for Q in _subsets(list(range(1, m + 1))):
                left = make_pair(f'B{total}', list(Q) + list(range(m + 2, total + 1)))
                right = make_pair(f'A{m + 2 * n - 1}', list(Q) + list(range(m + 2, m + 2 * n)))
                found.append(FamilyInstance('B/A', left, right, m * (m + 1) // 2, m, n))
    return found
