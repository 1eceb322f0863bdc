# app/coxeter/bw_graph.py
"""bw-Coxeter graphs: Coxeter graphs whose vertices are black or white.

For a pair (W, W_J) the vertices in J are white and the others black.
Edge labels follow the Coxeter graph convention: no label means bond 3.
"""
import logging
from dataclasses import dataclass
from itertools import chain
from typing import Dict, Iterable, List, Optional, Tuple, Union

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from ..errors import BUPreconditionError, CoxeterError, NotInImage
from .matrix import INFINITY, CoxeterMatrix, ParabolicSubset

logger = logging.getLogger(__name__)

BLACK = 'black'
WHITE = 'white'

Label = Optional[Union[int, float]]
Edge = Tuple[int, int, Label]


def _normalise_label(label: Label) -> Label:
    if label is None or label == 3:
        return None
    if label != INFINITY and (int(label) != label or label < 4):
        raise CoxeterError(f'edge label {label} must be >= 4 (no label means 3)')
    return label


@dataclass(frozen=True)
class BWGraph:
    colours: Tuple[Tuple[int, str], ...]
    edges: Tuple[Edge, ...]

    @classmethod
    def build(cls, colours: Dict[int, str], edges: Iterable[Tuple[int, int, Label]] = ()) -> 'BWGraph':
        for v, c in colours.items():
            if c not in (BLACK, WHITE):
                raise CoxeterError(f'vertex {v} has colour {c!r}')
        seen: Dict[Tuple[int, int], Label] = {}
        for a, b, label in edges:
            if a == b:
                raise CoxeterError(f'self-loop on vertex {a}')
            if a not in colours or b not in colours:
                raise CoxeterError(f'edge ({a}, {b}) uses an unknown vertex')
            key = (min(a, b), max(a, b))
            if key in seen:
                raise CoxeterError(f'multiple edges between {a} and {b}')
            seen[key] = _normalise_label(label)
        return cls(
            tuple(sorted(colours.items())),
            tuple(sorted((a, b, label) for (a, b), label in seen.items())),
        )

    @property
    def vertices(self) -> List[int]:
        return [v for v, _ in self.colours]

    def colour_of(self) -> Dict[int, str]:
        return dict(self.colours)

    @property
    def black(self) -> List[int]:
        return [v for v, c in self.colours if c == BLACK]

    @property
    def white(self) -> List[int]:
        return [v for v, c in self.colours if c == WHITE]

    def label(self, a: int, b: int) -> Label:
        key = (min(a, b), max(a, b))
        for x, y, label in self.edges:
            if (x, y) == key:
                return label
        raise KeyError(key)

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        for v, c in self.colours:
            g.add_node(v, colour=c)
        for a, b, label in self.edges:
            g.add_edge(a, b, label=label)
        return g

    def to_dict(self) -> Dict[str, list]:
        """JSON form; a label is an int, or null for an unlabelled edge."""
        if any(label == INFINITY for _, _, label in self.edges):
            raise CoxeterError('an infinite label has no JSON form')
        return {
            'vertices': [{'id': v, 'color': c} for v, c in self.colours],
            'edges': [{'a': a, 'b': b, 'label': label} for a, b, label in self.edges],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, list]) -> 'BWGraph':
        colours = {int(v['id']): v['color'] for v in data['vertices']}
        edges = []
        for e in data['edges']:
            label = e.get('label')
            if label is not None and (isinstance(label, bool) or not isinstance(label, int)):
                raise CoxeterError(f'edge label {label!r} must be an integer or null')
            edges.append((int(e['a']), int(e['b']), label))
        return cls.build(colours, edges)

    def to_dot(self, name: str = 'bw') -> str:
        lines = [f'graph "{name}" {{', '  node [shape=circle, label=""];']
        for v, c in self.colours:
            if c == BLACK:
                lines.append(f'  {v} [style=filled, fillcolor=black];')
            else:
                lines.append(f'  {v};')
        for a, b, label in self.edges:
            if label is None:
                lines.append(f'  {a} -- {b};')
            else:
                text = '∞' if label == INFINITY else str(label)
                lines.append(f'  {a} -- {b} [label="{text}"];')
        lines.append('}')
        return '\n'.join(lines) + '\n'

    def __repr__(self) -> str:
        return f'<BWGraph black={len(self.black)} white={len(self.white)} edges={len(self.edges)}>'


def bw_graph(m: CoxeterMatrix, J: ParabolicSubset) -> BWGraph:
    """Colour the Coxeter graph of ``m``: white on J, black elsewhere."""
    if J.matrix != m:
        raise CoxeterError('parabolic subset belongs to another matrix')
    colours = {s: (WHITE if s in J else BLACK) for s in m.generators}
    return BWGraph.build(colours, m.edges())


def _check_white_edges_unlabelled(g: BWGraph) -> None:
    colour = g.colour_of()
    for a, b, label in g.edges:
        if label is not None and (colour[a] == WHITE or colour[b] == WHITE):
            raise BUPreconditionError(f'labelled edge ({a}, {b}) meets a white vertex')


def _is_forest(nxg: nx.Graph) -> bool:
    # networkx refuses the question on the empty graph
    return nxg.number_of_nodes() == 0 or nx.is_forest(nxg)


def _white_components(g: BWGraph, nxg: nx.Graph) -> List[List[int]]:
    whites = nxg.subgraph(g.white)
    return sorted((sorted(c) for c in nx.connected_components(whites)), key=lambda c: c[0])


def _black_neighbours(g: BWGraph, nxg: nx.Graph, component: List[int]) -> List[int]:
    colour = g.colour_of()
    return sorted({u for v in component for u in nxg.neighbors(v) if colour[u] == BLACK})


def bu_expand(g: BWGraph) -> BWGraph:
    """Replicate every white component once per neighbouring black vertex.

    Black vertices and the edges between them are kept as they are. A white
    component with n black neighbours appears n times, each copy attached to
    the black vertices exactly like the original; components without black
    neighbours are dropped.
    """
    _check_white_edges_unlabelled(g)
    nxg = g.to_networkx()
    if not _is_forest(nxg):
        raise BUPreconditionError('graph has a cycle')

    colour = g.colour_of()
    colours = {v: BLACK for v in g.black}
    edges = [(a, b, label) for a, b, label in g.edges if colour[a] == BLACK and colour[b] == BLACK]
    next_id = max(g.vertices, default=0) + 1

    for component in _white_components(g, nxg):
        anchors = _black_neighbours(g, nxg, component)
        if not anchors:
            logger.debug('dropping white component %s without black neighbours', component)
            continue
        members = set(component)
        for copy in range(len(anchors)):
            if copy == 0:
                rename = {v: v for v in component}
            else:
                rename = {v: next_id + k for k, v in enumerate(component)}
                next_id += len(component)
            for v in component:
                colours[rename[v]] = WHITE
            for a, b, label in g.edges:
                if a in members and b in members:
                    edges.append((rename[a], rename[b], label))
                elif a in members and colour[b] == BLACK:
                    edges.append((rename[a], b, label))
                elif b in members and colour[a] == BLACK:
                    edges.append((a, rename[b], label))
    return BWGraph.build(colours, edges)


def drop_unattached_white(g: BWGraph) -> BWGraph:
    """g without the white components that have no black neighbour.

    This is what reconstruction can recover: BU drops those components.
    """
    nxg = g.to_networkx()
    dropped = set()
    for component in _white_components(g, nxg):
        if not _black_neighbours(g, nxg, component):
            dropped.update(component)
    colours = {v: c for v, c in g.colours if v not in dropped}
    return BWGraph.build(colours, [(a, b, label) for a, b, label in g.edges if a not in dropped and b not in dropped])


def _attachment_graph(g: BWGraph, nxg: nx.Graph, component: List[int]) -> nx.Graph:
    """White component plus its black neighbours, blacks pinned by id."""
    colour = g.colour_of()
    h = nx.Graph()
    for v in component:
        h.add_node(v, anchor=None)
    for v in component:
        for u in nxg.neighbors(v):
            if colour[u] == BLACK:
                h.add_node(u, anchor=u)
            h.add_edge(v, u)
    return h


def invert_bu(g: BWGraph) -> BWGraph:
    """Graph h with ``bu_expand(h)`` isomorphic to ``g``.

    White components are grouped by shape and attachment; the size of every
    group must be a multiple of the number of black neighbours of its members.
    Raises NotInImage otherwise.
    """
    _check_white_edges_unlabelled(g)
    nxg = g.to_networkx()
    colour = g.colour_of()

    def same_anchor(x, y):
        return x['anchor'] == y['anchor']

    classes: List[Tuple[nx.Graph, List[List[int]]]] = []
    for component in _white_components(g, nxg):
        h = _attachment_graph(g, nxg, component)
        for rep, members in classes:
            if nx.is_isomorphic(rep, h, node_match=same_anchor):
                members.append(component)
                break
        else:
            classes.append((h, [component]))

    colours = {v: BLACK for v in g.black}
    edges = [(a, b, label) for a, b, label in g.edges if colour[a] == BLACK and colour[b] == BLACK]
    for rep, members in classes:
        n = sum(1 for _, data in rep.nodes(data=True) if data['anchor'] is not None)
        if n == 0 or len(members) % n:
            raise NotInImage(
                f'white component {members[0]} occurs {len(members)} times '
                f'but has {n} black neighbours'
            )
        # a component with one black neighbour may legitimately repeat
        keep = set(chain.from_iterable(members[: len(members) // n]))
        for v in keep:
            colours[v] = WHITE
        for a, b, label in g.edges:
            if a in keep or b in keep:
                edges.append((a, b, label))

    h = BWGraph.build(colours, edges)
    if not _is_forest(h.to_networkx()):
        raise NotInImage('collapsed graph has a cycle')
    return h


def _refined_keys(g: BWGraph) -> Dict[int, str]:
    nxg = g.to_networkx()
    for v in nxg.nodes:
        nxg.nodes[v]['key'] = nxg.nodes[v]['colour']
    for a, b in nxg.edges:
        nxg.edges[a, b]['key'] = str(nxg.edges[a, b]['label'])
    hashes = nx.weisfeiler_lehman_subgraph_hashes(nxg, node_attr='key', edge_attr='key', iterations=3)
    return {v: (h[-1] if h else nxg.nodes[v]['colour']) for v, h in hashes.items()}


def bwgraph_isomorphic(g: BWGraph, h: BWGraph) -> Optional[Dict[int, int]]:
    """Colour-, edge- and label-preserving bijection g -> h, or None."""
    if len(g.black) != len(h.black) or len(g.white) != len(h.white) or len(g.edges) != len(h.edges):
        return None
    if not g.colours:
        return {}
    ng, nh = g.to_networkx(), h.to_networkx()
    kg, kh = _refined_keys(g), _refined_keys(h)
    for v in ng.nodes:
        ng.nodes[v]['refined'] = (ng.nodes[v]['colour'], kg[v])
    for v in nh.nodes:
        nh.nodes[v]['refined'] = (nh.nodes[v]['colour'], kh[v])
    if sorted(nx.get_node_attributes(ng, 'refined').values()) != sorted(
        nx.get_node_attributes(nh, 'refined').values()
    ):
        return None
    matcher = GraphMatcher(
        ng,
        nh,
        node_match=lambda x, y: x['refined'] == y['refined'],
        edge_match=lambda x, y: x['label'] == y['label'],
    )
    if not matcher.is_isomorphic():
        return None
    return dict(matcher.mapping)


def pairs_isomorphic(J: ParabolicSubset, K: ParabolicSubset) -> bool:
    """Coxeter pairs are isomorphic iff their bw-Coxeter graphs are."""
    return bwgraph_isomorphic(bw_graph(J.matrix, J), bw_graph(K.matrix, K)) is not None
