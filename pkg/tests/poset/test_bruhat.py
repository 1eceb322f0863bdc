# tests/poset/test_bruhat.py
"""
Test suite for the Bruhat order on parabolic quotients.
"""
import pytest

from app.coxeter.matrix import ParabolicSubset, WeylType, build_weyl, weyl_matrix
from app.engine.quotient import UP, enumerate_quotient, reflection_images
from app.poset.bruhat import bruhat_order


def poset(name, members=()):
    J = ParabolicSubset.of(build_weyl(WeylType.parse(name)), members)
    return bruhat_order(enumerate_quotient(J.matrix, J))


def is_chain(p):
    return p.rank_sizes() == [1] * (p.length + 1)


class TestBruhatOrder:
    """Shapes of small Bruhat orders."""

    @pytest.mark.parametrize('name, members, size', [
        ('A3', [1, 2], 4),
        ('B2', [1], 4),
        ('G2', [1], 6),
        ('B3', [2, 3], 6),
        ('A5', [1, 2, 3, 4], 6),
    ])
    def test_chains(self, name, members, size):
        """Quotients whose Bruhat order is a chain."""
        p = poset(name, members)
        assert p.size == size
        assert is_chain(p)

    def test_s3(self):
        """S3 has rank sizes 1,2,2,1 and eight covers."""
        p = poset('A2')
        assert p.rank_sizes() == [1, 2, 2, 1]
        assert len(p.covers) == 8

    def test_b2_full_group(self):
        """The dihedral group of order 8: every element of rank k is below every one of rank k+1."""
        p = poset('B2')
        assert p.rank_sizes() == [1, 2, 2, 2, 1]
        assert len(p.covers) == 2 + 4 + 4 + 2

    def test_d4_spinor_middle(self):
        """D4/A3 is a chain except for two incomparable middle elements."""
        p = poset('D4', [1, 2, 3])
        assert p.rank_sizes() == [1, 1, 1, 2, 1, 1, 1]

    def test_product_is_product_order(self):
        """A1 x A1 with J empty is the diamond."""
        J = ParabolicSubset.of(weyl_matrix([WeylType('A', 1), WeylType('A', 1)]))
        p = bruhat_order(enumerate_quotient(J.matrix, J))
        assert p.ranks == (0, 1, 1, 2)
        assert p.covers == ((0, 1), (0, 2), (1, 3), (2, 3))

    def test_labels_are_weights(self):
        """Element i carries the weight of table element i."""
        J = ParabolicSubset.of(build_weyl(WeylType('A', 3)), [2])
        q = enumerate_quotient(J.matrix, J)
        p = bruhat_order(q)
        assert list(p.labels) == [e.weight for e in q.elements]

    def test_graded_by_length(self):
        """Every cover raises the length by one and 0 is the identity."""
        p = poset('B3', [1])
        assert p.least == 0
        assert all(p.rank(b) == p.rank(a) + 1 for a, b in p.covers)
        assert p.length == 9 - 1

    def test_unique_maximum(self):
        """Every quotient has a unique maximal element."""
        assert len(poset('F4', [1, 2]).maximal()) == 1

    @pytest.mark.parametrize('name, members', [('A3', []), ('B3', [2]), ('D4', [2]), ('G2', []), ('F4', [2, 3])])
    def test_covers_match_reflection_closure(self, name, members):
        """Covers equal the length-one steps of the closed reflection order."""
        J = ParabolicSubset.of(build_weyl(WeylType.parse(name)), members)
        q = enumerate_quotient(J.matrix, J)
        up = [
            [q.index_of(image) for image, direction in reflection_images(q, e) if direction == UP]
            for e in q.elements
        ]
        above = [0] * len(q)
        for u in range(len(q) - 1, -1, -1):
            bits = 1 << u
            for v in up[u]:
                bits |= above[v]
            above[u] = bits
        lengths = [e.length for e in q.elements]
        closed = {
            (u, v)
            for u in range(len(q))
            for v in range(len(q))
            if lengths[v] == lengths[u] + 1 and above[u] >> v & 1
        }
        assert set(bruhat_order(q).covers) == closed

    def test_order_not_materialised_up_front(self):
        """Down-sets are only built once a comparison asks for them."""
        p = poset('B3')
        assert p._below is None
        assert p.leq(0, p.size - 1)
        assert p._below is not None
