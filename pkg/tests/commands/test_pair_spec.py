# tests/commands/test_pair_spec.py
"""
Test suite for GROUP/PARABOLIC descriptors.
"""
import logging

import pytest

from app.commands.pair_spec import PairSpec, parse_pair
from app.errors import PairSpecError


class TestParse:
    """Accepted forms."""

    @pytest.mark.parametrize('text, members', [
        ('A3/-', ()),
        ('A3/*', (1, 2, 3)),
        ('A3/@{1,3}', (1, 3)),
        ('A3/@{}', ()),
        ('A3/A2', (1, 2)),
        ('A3/A1xA1', (1, 3)),
        ('B4/B2@{3,4}', (3, 4)),
        ('A3xB2/B2', (4, 5)),
        (' D4/A1@{ 2 } ', (2,)),
    ])
    def test_members(self, text, members):
        assert tuple(parse_pair(text).sorted()) == members

    def test_name_round_trip(self):
        """The canonical name parses back to the same pair."""
        spec = PairSpec.parse('B3/B2')
        assert spec.name == 'B3/B2@{2,3}'
        assert PairSpec.parse(spec.name).pair.sorted() == spec.pair.sorted()

    def test_product_matrix(self):
        spec = PairSpec.parse('A1xG2/-')
        assert spec.matrix.rank == 3
        assert spec.matrix.bond(2, 3) == 6
        assert spec.text == 'A1xG2/-'

    def test_symmetric_choice_is_quiet(self, caplog):
        """B2 modulo either generator gives isomorphic pairs."""
        with caplog.at_level(logging.WARNING):
            assert parse_pair('B2/A1').sorted() == [1]
        assert 'ambiguous' not in caplog.text

    def test_ambiguous_name_warns(self, caplog):
        """B3 modulo A1 has two classes; the first index set wins."""
        with caplog.at_level(logging.WARNING):
            assert parse_pair('B3/A1').sorted() == [1]
        assert 'ambiguous' in caplog.text


class TestErrors:
    """Rejected forms carry the offending position."""

    @pytest.mark.parametrize('text, position', [
        ('A3', 2),
        ('A3/', 3),
        ('Z3/-', 0),
        ('A3x/-', 3),
        ('A3/@{4}', 5),
        ('A3/@{1,1}', 7),
        ('A3/@{a}', 5),
        ('A3/@1', 4),
    ])
    def test_position(self, text, position):
        with pytest.raises(PairSpecError) as exc:
            parse_pair(text)
        assert exc.value.position == position

    def test_wrong_named_type(self):
        """Explicit indices must form the named subgroup."""
        with pytest.raises(PairSpecError) as exc:
            parse_pair('A3/A2@{1,3}')
        assert 'do not form a subgroup of type A2' in exc.value.reason

    def test_missing_subgroup(self):
        with pytest.raises(PairSpecError) as exc:
            parse_pair('A3/B2')
        assert 'no parabolic subgroup of type B2 in A3' in exc.value.reason

    def test_message_has_pointer(self):
        with pytest.raises(PairSpecError) as exc:
            parse_pair('A3/@{4}')
        assert str(exc.value).endswith('A3/@{4}\n       ^')
