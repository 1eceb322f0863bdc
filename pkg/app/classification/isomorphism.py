# app/classification/isomorphism.py
import logging
from collections import Counter
from typing import Dict, List, Optional, Tuple

from networkx.algorithms.isomorphism import DiGraphMatcher

from ..poset.invariants import factor_posets
from ..poset.pointed import PointedPoset
from .fingerprint import refine_colours, refinement_rounds

logger = logging.getLogger(__name__)

Witness = Dict[int, int]


def is_order_isomorphism(p: PointedPoset, q: PointedPoset, f: Witness) -> bool:
    """f is a rank-preserving bijection carrying covers onto covers."""
    if len(f) != p.size or sorted(f.values()) != list(range(q.size)):
        return False
    if any(p.rank(x) != q.rank(f[x]) for x in range(p.size)):
        return False
    return set((f[a], f[b]) for a, b in p.covers) == set(q.covers)


def poset_isomorphic(p: PointedPoset, q: PointedPoset) -> Optional[Witness]:
    """Rank-preserving order isomorphism p -> q, or None.

    Both posets are refined with the same number of rounds. A discrete
    colouring fixes the only candidate bijection; otherwise VF2 searches the
    Hasse diagrams, matching equal colours only.
    """
    if p.size != q.size or p.rank_sizes() != q.rank_sizes() or len(p.covers) != len(q.covers):
        return None
    rounds = refinement_rounds(p.size)
    cp, _ = refine_colours(p, rounds)
    cq, _ = refine_colours(q, rounds)
    if Counter(cp) != Counter(cq):
        return None

    if len(set(cp)) == p.size:
        by_colour = {c: y for y, c in enumerate(cq)}
        f = {x: by_colour[cp[x]] for x in range(p.size)}
        return f if is_order_isomorphism(p, q, f) else None

    gp, gq = p.hasse(), q.hasse()
    for x in gp.nodes:
        gp.nodes[x]['colour'] = cp[x]
    for y in gq.nodes:
        gq.nodes[y]['colour'] = cq[y]
    matcher = DiGraphMatcher(gp, gq, node_match=lambda a, b: a['colour'] == b['colour'])
    if not matcher.is_isomorphic():
        return None
    f = dict(matcher.mapping)
    if not is_order_isomorphism(p, q, f):
        logger.warning('VF2 returned a mapping that is not an order isomorphism')
        return None
    return f


def matching_factors(p: PointedPoset, q: PointedPoset) -> Optional[List[Tuple[int, int, Witness]]]:
    """Pair the irreducible factors of p with those of q, isomorphic pair by pair.

    Returns (factor of p, factor of q, witness) triples, or None when no
    such pairing exists.
    """
    fp = [sub for sub, _ in factor_posets(p)]
    fq = [sub for sub, _ in factor_posets(q)]
    if len(fp) != len(fq):
        return None

    def search(i: int, used: frozenset) -> Optional[List[Tuple[int, int, Witness]]]:
        if i == len(fp):
            return []
        for j, candidate in enumerate(fq):
            if j in used:
                continue
            witness = poset_isomorphic(fp[i], candidate)
            if witness is None:
                continue
            rest = search(i + 1, used | {j})
            if rest is not None:
                return [(i, j, witness)] + rest
        return None

    return search(0, frozenset())
