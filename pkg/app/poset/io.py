# app/poset/io.py
"""JSON and DOT serialisation of pointed posets.

JSON layout: ``{"n": int, "ranks": [int], "covers": [[int, int]]}``.
"""
import json
from typing import Dict, Optional

from ..errors import BruhatError, PosetParseError
from .pointed import PointedPoset


def poset_to_dict(p: PointedPoset) -> Dict[str, object]:
    return {'n': p.size, 'ranks': list(p.ranks), 'covers': [list(c) for c in p.covers]}


def export_poset(p: PointedPoset) -> str:
    return json.dumps(poset_to_dict(p), sort_keys=True) + '\n'


def _line_of(text: str, needle: str) -> Optional[int]:
    offset = text.find(needle)
    if offset < 0:
        return None
    return text.count('\n', 0, offset) + 1


def import_poset(text: str) -> PointedPoset:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise PosetParseError(e.msg, e.lineno) from None
    if not isinstance(data, dict):
        raise PosetParseError('top level must be an object', 1)
    for key in ('n', 'ranks', 'covers'):
        if key not in data:
            raise PosetParseError(f'missing key "{key}"', 1)
    n, ranks, covers = data['n'], data['ranks'], data['covers']
    if not isinstance(n, int) or not isinstance(ranks, list) or len(ranks) != n:
        raise PosetParseError(f'"ranks" must list {n} integers', _line_of(text, '"ranks"'))
    if not all(isinstance(r, int) for r in ranks):
        raise PosetParseError('ranks must be integers', _line_of(text, '"ranks"'))
    pairs = []
    for c in covers:
        if not (isinstance(c, list) and len(c) == 2 and all(isinstance(x, int) for x in c)):
            raise PosetParseError(f'cover {c!r} is not a pair of integers', _line_of(text, '"covers"'))
        pairs.append((c[0], c[1]))
    try:
        return PointedPoset(ranks, pairs)
    except BruhatError as e:
        raise PosetParseError(str(e), _line_of(text, '"covers"')) from None


def poset_to_dot(p: PointedPoset, name: str = 'poset') -> str:
    """Hasse diagram, one layer per rank, least element at the bottom."""
    lines = [f'digraph "{name}" {{', '  rankdir=BT;', '  node [shape=circle];']
    for k in range(p.length + 1):
        members = ' '.join(f'{x};' for x in p.of_rank(k))
        lines.append(f'  {{ rank=same; {members} }}')
    for a, b in p.covers:
        lines.append(f'  {a} -> {b};')
    lines.append('}')
    return '\n'.join(lines) + '\n'
