# tests/classification/test_fingerprint.py
"""
Test suite for poset fingerprints.
"""
from app.classification.fingerprint import fingerprint, refine_colours, refinement_rounds
from app.classification.patterns import make_pair
from app.engine.quotient import enumerate_quotient
from app.poset.bruhat import bruhat_order
from app.poset.pointed import PointedPoset


def poset(group, members=()):
    J = make_pair(group, members)
    return bruhat_order(enumerate_quotient(J.matrix, J))


class TestRefinement:
    """Colour refinement on the Hasse diagram."""

    def test_rounds_grow_with_size(self):
        assert refinement_rounds(1) == refinement_rounds(2) == 5
        assert refinement_rounds(1024) == 32

    def test_chain_is_discrete(self):
        """Every element of a chain gets its own colour."""
        colours, _ = refine_colours(poset('A3', [1, 2]))
        assert len(set(colours)) == 4

    def test_relabelling_keeps_digest(self):
        """Swapping two incomparable elements leaves the digest unchanged."""
        p = PointedPoset([0, 1, 1, 2, 2], [(0, 1), (0, 2), (1, 3), (2, 3), (2, 4)])
        q = PointedPoset([0, 1, 1, 2, 2], [(0, 1), (0, 2), (2, 3), (1, 3), (1, 4)])
        assert refine_colours(p)[1] == refine_colours(q)[1]


class TestFingerprint:
    """Necessary conditions for isomorphism."""

    def test_equal_for_coinciding_pairs(self):
        """A3 modulo A2 and B2 modulo A1 are both 4-chains."""
        assert fingerprint(poset('A3', [1, 2])) == fingerprint(poset('B2', [1]))

    def test_differs_with_same_rank_sizes(self):
        """A3 modulo s1 and modulo s2 share rank sizes but not mu and nu."""
        a, b = fingerprint(poset('A3', [1])), fingerprint(poset('A3', [2]))
        assert a.rank_sizes == b.rank_sizes
        assert a != b
        assert a.mu_values == (3,)
        assert b.mu_values == (2,)

    def test_digest(self):
        fp = fingerprint(poset('A2'))
        assert len(fp.digest) == 64
        assert fp.to_dict()['digest'] == fp.digest
        assert fp.to_dict()['rank_sizes'] == [1, 2, 2, 1]
