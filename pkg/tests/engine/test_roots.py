# tests/engine/test_roots.py
"""
Test suite for Cartan matrices and positive roots.
"""
import pytest

from app.coxeter.matrix import CoxeterMatrix, WeylType, build_weyl, weyl_matrix
from app.engine.roots import cartan_of, group_order, longest_length, matrix_order, positive_roots
from app.errors import NonCrystallographicError


def weyl(name):
    return build_weyl(WeylType.parse(name))


class TestCartanMatrix:
    """Integer Cartan matrices from Coxeter matrices."""

    def test_a2(self):
        """Simply laced bonds give -1 both ways."""
        assert cartan_of(weyl('A2')).to_list() == [[2, -1], [-1, 2]]

    def test_b2_orientation(self):
        """The larger entry sits above the diagonal."""
        assert cartan_of(weyl('B2')).to_list() == [[2, -2], [-1, 2]]

    def test_g2_orientation(self):
        """G2 carries -3 above the diagonal."""
        assert cartan_of(weyl('G2')).to_list() == [[2, -3], [-1, 2]]

    def test_commuting_generators(self):
        """m = 2 gives a zero entry."""
        c = cartan_of(weyl_matrix([WeylType('A', 1), WeylType('A', 1)]))
        assert c.to_list() == [[2, 0], [0, 2]]

    def test_non_crystallographic(self):
        """Bond 5 has no integer Cartan entry."""
        h2 = CoxeterMatrix.from_edges([1, 2], {(1, 2): 5})
        with pytest.raises(NonCrystallographicError):
            cartan_of(h2)


class TestPositiveRoots:
    """Root counts and the longest length."""

    @pytest.mark.parametrize('name, count', [
        ('A1', 1), ('A3', 6), ('B3', 9), ('D4', 12), ('G2', 6), ('F4', 24), ('E6', 36), ('E7', 63),
    ])
    def test_counts(self, name, count):
        """Number of positive roots per type."""
        assert len(positive_roots(cartan_of(weyl(name)))) == count

    def test_simple_roots_first(self):
        """Roots are ordered by height, simple roots first."""
        roots = positive_roots(cartan_of(weyl('A2')))
        assert [r.coords for r in roots] == [(0, 1), (1, 0), (1, 1)]
        assert roots[-1].height == 2

    def test_coroots_of_b2(self):
        """Short and long roots swap roles among the coroots."""
        roots = positive_roots(cartan_of(weyl('B2')))
        assert {r.coords: r.coroot_coords for r in roots} == {
            (1, 0): (1, 0),
            (0, 1): (0, 1),
            (1, 1): (1, 2),
            (2, 1): (1, 1),
        }

    def test_pairing(self):
        """The pairing with a simple coroot reads a weight coordinate."""
        alpha1 = positive_roots(cartan_of(weyl('A2')))[1]
        assert alpha1.pairing((3, 5)) == 3

    def test_longest_length_of_empty(self):
        """The trivial group has l(w0) = 0."""
        assert longest_length(CoxeterMatrix((), ())) == 0

    def test_longest_length(self):
        """l(w0) of E6 is 36."""
        assert longest_length(weyl('E6')) == 36


class TestGroupOrder:
    """Orders of irreducible and product groups."""

    @pytest.mark.parametrize('name, order', [
        ('A3', 24), ('B3', 48), ('D4', 192), ('E6', 51840), ('F4', 1152), ('G2', 12),
    ])
    def test_group_order(self, name, order):
        """Order formulas per type."""
        assert group_order(WeylType.parse(name)) == order

    def test_matrix_order_of_product(self):
        """Orders multiply over components."""
        assert matrix_order(weyl_matrix([WeylType('A', 1), WeylType('A', 2)])) == 12
