# app/classification/fingerprint.py
"""Isomorphism invariants of pointed posets.

Equal fingerprints are necessary for isomorphism and never sufficient; they
only decide which pairs are worth a witness search.
"""
import hashlib
import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from ..poset.invariants import triple
from ..poset.pointed import PointedPoset


def refinement_rounds(size: int) -> int:
    return 3 * math.ceil(math.log2(max(size, 2))) + 2


def refine_colours(p: PointedPoset, rounds: Optional[int] = None) -> Tuple[List[int], str]:
    """Colour refinement on the Hasse diagram.

    A colour starts as (rank, up-degree, down-degree) and is refined by the
    sorted colours of upper and lower covers. Signatures are sorted before
    they are numbered, so the result does not depend on element order.
    Returns the colours and a digest of every round's signature list.
    """
    rounds = refinement_rounds(p.size) if rounds is None else rounds
    digest = hashlib.sha256()
    signatures = [(p.rank(x), len(p.upper_covers(x)), len(p.lower_covers(x))) for x in range(p.size)]
    ordinal = {s: i for i, s in enumerate(sorted(set(signatures)))}
    colours = [ordinal[s] for s in signatures]
    digest.update(repr(sorted(ordinal)).encode())

    for _ in range(rounds):
        signatures = [
            (
                colours[x],
                tuple(sorted(colours[y] for y in p.upper_covers(x))),
                tuple(sorted(colours[y] for y in p.lower_covers(x))),
            )
            for x in range(p.size)
        ]
        ordinal = {s: i for i, s in enumerate(sorted(set(signatures)))}
        refined = [ordinal[s] for s in signatures]
        digest.update(repr(sorted(ordinal)).encode())
        stable = len(set(refined)) == len(set(colours))
        colours = refined
        if stable:
            break
    return colours, digest.hexdigest()


@dataclass(frozen=True)
class Fingerprint:
    size: int
    rank_sizes: Tuple[int, ...]
    degrees: Tuple[Tuple[Tuple[int, int], ...], ...]
    refinement: str
    mu_values: Tuple[int, ...]
    nu_values: Tuple[int, ...]

    @property
    def digest(self) -> str:
        return hashlib.sha256(repr(self).encode()).hexdigest()

    def to_dict(self) -> Dict[str, object]:
        return {
            'size': self.size,
            'rank_sizes': list(self.rank_sizes),
            'refinement': self.refinement,
            'mu': list(self.mu_values),
            'nu': list(self.nu_values),
            'digest': self.digest,
        }


def fingerprint(p: PointedPoset) -> Fingerprint:
    degrees = tuple(
        tuple(sorted((len(p.upper_covers(x)), len(p.lower_covers(x))) for x in p.of_rank(k)))
        for k in range(p.length + 1)
    )
    _, refinement = refine_colours(p)
    t = triple(p)
    return Fingerprint(
        size=p.size,
        rank_sizes=tuple(p.rank_sizes()),
        degrees=degrees,
        refinement=refinement,
        mu_values=tuple(sorted(t.mu.values())),
        nu_values=tuple(sorted(t.nu.values())),
    )
