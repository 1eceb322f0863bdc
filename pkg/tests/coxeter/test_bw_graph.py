# tests/coxeter/test_bw_graph.py
"""
Test suite for bw-Coxeter graphs and the BU expansion.
"""
import json

import pytest

from app.coxeter.bw_graph import (
    BLACK,
    WHITE,
    BWGraph,
    bu_expand,
    bw_graph,
    bwgraph_isomorphic,
    drop_unattached_white,
    invert_bu,
    pairs_isomorphic,
)
from app.coxeter.matrix import INFINITY, ParabolicSubset, WeylType, build_weyl, weyl_matrix
from app.errors import BUPreconditionError, CoxeterError, NotInImage


def pair(name, members=()):
    m = build_weyl(WeylType.parse(name))
    return ParabolicSubset.of(m, members)


def graph_of(name, members=()):
    J = pair(name, members)
    return bw_graph(J.matrix, J)


class TestBWGraph:
    """Construction, accessors and serialisation."""

    def test_colours_follow_j(self):
        """Vertices in J are white, the others black."""
        g = graph_of('A3', [2])
        assert g.black == [1, 3]
        assert g.white == [2]
        assert g.edges == ((1, 2, None), (2, 3, None))

    def test_label_three_is_dropped(self):
        """A label of 3 is stored as no label."""
        g = BWGraph.build({1: BLACK, 2: WHITE}, [(2, 1, 3)])
        assert g.edges == ((1, 2, None),)
        assert g.label(1, 2) is None

    def test_rejects_bad_label(self):
        """Labels below 4 other than 3 are not Coxeter labels."""
        with pytest.raises(CoxeterError):
            BWGraph.build({1: BLACK, 2: BLACK}, [(1, 2, 2)])

    def test_rejects_duplicate_edge(self):
        """At most one edge joins two vertices."""
        with pytest.raises(CoxeterError):
            BWGraph.build({1: BLACK, 2: BLACK}, [(1, 2, None), (2, 1, 4)])

    def test_to_dict(self):
        """JSON layout with colour names and integer labels."""
        assert graph_of('B2').to_dict() == {
            'vertices': [{'id': 1, 'color': 'black'}, {'id': 2, 'color': 'black'}],
            'edges': [{'a': 1, 'b': 2, 'label': 4}],
        }

    def test_labels_are_int_or_null(self):
        """Unlabelled edges are written as null and read back unlabelled."""
        g = graph_of('B3', [1])
        data = g.to_dict()
        assert [e['label'] for e in data['edges']] == [None, 4]
        assert BWGraph.from_dict(json.loads(json.dumps(data))) == g

    def test_infinite_label_has_no_json_form(self):
        g = BWGraph.build({1: BLACK, 2: WHITE}, [(1, 2, INFINITY)])
        with pytest.raises(CoxeterError):
            g.to_dict()

    def test_string_label_rejected(self):
        data = {'vertices': [{'id': 1, 'color': 'black'}, {'id': 2, 'color': 'white'}],
                'edges': [{'a': 1, 'b': 2, 'label': 'inf'}]}
        with pytest.raises(CoxeterError):
            BWGraph.from_dict(data)

    def test_to_dot(self):
        """Black vertices are filled and labels are drawn."""
        dot = graph_of('G2', [1]).to_dot('g2')
        assert dot.startswith('graph "g2" {')
        assert '2 [style=filled, fillcolor=black];' in dot
        assert '1 -- 2 [label="6"];' in dot


class TestBUExpansion:
    """BU and its inverse."""

    def test_expand_a3_middle(self):
        """One white vertex between two blacks becomes a 4-cycle."""
        g = bu_expand(graph_of('A3', [2]))
        assert g.black == [1, 3]
        assert g.white == [2, 4]
        assert g.edges == ((1, 2, None), (1, 4, None), (2, 3, None), (3, 4, None))

    def test_expand_keeps_black_edges(self):
        """Black-black edges and their labels pass through."""
        g = bu_expand(graph_of('B3', [1]))
        assert (2, 3, 4) in g.edges
        assert len(g.white) == 1

    def test_expand_drops_isolated_white(self):
        """A white component without black neighbours disappears."""
        m = weyl_matrix([WeylType('A', 1), WeylType('A', 1)])
        J = ParabolicSubset.of(m, [2])
        g = bu_expand(bw_graph(m, J))
        assert g.vertices == [1]
        assert g.edges == ()

    def test_expand_rejects_labelled_white_edge(self):
        """A labelled edge may not touch a white vertex."""
        with pytest.raises(BUPreconditionError):
            bu_expand(graph_of('B2', [1]))

    def test_expand_rejects_cycle(self):
        """The input must be a forest."""
        triangle = BWGraph.build({1: BLACK, 2: BLACK, 3: BLACK}, [(1, 2, None), (2, 3, None), (1, 3, None)])
        with pytest.raises(BUPreconditionError):
            bu_expand(triangle)

    def test_invert_recovers_graph(self):
        """invert_bu undoes bu_expand on a path."""
        original = graph_of('A3', [2])
        assert bwgraph_isomorphic(invert_bu(bu_expand(original)), original) is not None

    def test_empty_graph_passes_through(self):
        """With J = S every white component is dropped and nothing is left to invert."""
        empty = bu_expand(graph_of('A3', [1, 2, 3]))
        assert empty.vertices == []
        assert bu_expand(empty).vertices == []
        assert invert_bu(empty).vertices == []
        assert bwgraph_isomorphic(invert_bu(empty), empty) == {}

    def test_drop_unattached_white(self):
        """White components with no black neighbour are removed, the rest kept."""
        m = weyl_matrix([WeylType('A', 1), WeylType('A', 1)])
        assert drop_unattached_white(bw_graph(m, ParabolicSubset.of(m, [2]))).vertices == [1]
        assert drop_unattached_white(graph_of('A3', [1, 2, 3])).vertices == []
        kept = graph_of('A3', [2])
        assert drop_unattached_white(kept).vertices == kept.vertices

    @pytest.mark.parametrize('name, members', [
        ('A4', [2, 3]),
        ('D4', [2]),
        ('D4', [1, 3, 4]),
        ('E6', [2, 3, 5, 6]),
        ('A3', [1, 3]),
    ])
    def test_invert_after_expand(self, name, members):
        """Round trip through the expansion, repeated components included."""
        original = graph_of(name, members)
        assert bwgraph_isomorphic(invert_bu(bu_expand(original)), original) is not None

    def test_invert_rejects_non_image(self):
        """A white vertex shared by two blacks must occur twice."""
        g = BWGraph.build({1: BLACK, 2: WHITE, 3: BLACK}, [(1, 2, None), (2, 3, None)])
        with pytest.raises(NotInImage):
            invert_bu(g)

    def test_invert_rejects_floating_white(self):
        """White components need a black neighbour."""
        g = BWGraph.build({1: BLACK, 2: WHITE}, [])
        with pytest.raises(NotInImage):
            invert_bu(g)


class TestIsomorphism:
    """Colour- and label-preserving isomorphism of bw-graphs."""

    def test_segment_pairs_isomorphic(self):
        """Initial and final segments of A_n give isomorphic pairs."""
        assert pairs_isomorphic(pair('A4', [1, 2, 3]), pair('A4', [2, 3, 4]))
        assert pairs_isomorphic(pair('A4', [1, 2]), pair('A4', [3, 4]))

    def test_a4_a2_has_two_classes(self):
        """{1,2} and {2,3} in A4 are not isomorphic pairs."""
        assert not pairs_isomorphic(pair('A4', [1, 2]), pair('A4', [2, 3]))

    def test_colours_matter(self):
        """Swapping colours on a path changes the pair."""
        assert not pairs_isomorphic(pair('A3', [2]), pair('A3', [1, 3]))

    def test_labels_matter(self):
        """B3 and A3 with all-black vertices differ by the label."""
        assert bwgraph_isomorphic(graph_of('B3'), graph_of('A3')) is None

    def test_mapping_preserves_edges(self):
        """The returned bijection maps edges onto edges."""
        g, h = graph_of('D4', [1]), graph_of('D4', [4])
        f = bwgraph_isomorphic(g, h)
        assert f is not None
        assert {tuple(sorted((f[a], f[b]))) for a, b, _ in g.edges} == {(a, b) for a, b, _ in h.edges}
