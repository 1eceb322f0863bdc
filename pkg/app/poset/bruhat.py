# app/poset/bruhat.py
import logging

from ..engine.quotient import UP, QuotientTable, reflection_images
from .pointed import PointedPoset

logger = logging.getLogger(__name__)


def bruhat_order(q: QuotientTable) -> PointedPoset:
    """Bruhat order on W^J, graded by length.

    u < v is generated by the reflection edges u -> t(u) that raise the
    length. The order on W^J is graded, so its covers are exactly the
    reflection edges that raise the length by one and no closure is needed.
    Element i of the poset is element i of the table, labelled by its weight.
    """
    lengths = [e.length for e in q.elements]
    covers = []
    for u, e in enumerate(q.elements):
        for image, direction in reflection_images(q, e):
            v = q.index_of(image)
            if direction == UP and lengths[v] == lengths[u] + 1:
                covers.append((u, v))
    logger.debug('Bruhat order of %r: %d covers', q, len(covers))
    return PointedPoset(lengths, covers, [e.weight for e in q.elements])
