# tests/classification/test_classify.py
"""
Test suite for the coincidence sweep.
"""
import pytest

from app.classification.classify import analyse_pair, classify
from app.classification.patterns import expected_coincidences, irreducible_pairs, make_pair


@pytest.fixture(scope='module')
def rank_three():
    return classify(irreducible_pairs(3), expected=expected_coincidences(3))


class TestClassify:
    """Sweeps over small ranks."""

    def test_rank_two_matches_prediction(self):
        report = classify(irreducible_pairs(2), expected=expected_coincidences(2))
        assert report.ok
        assert [c.members for c in report.classes] == [['A1/*', 'A2/*', 'B2/*', 'G2/*']]

    def test_rank_three_classes(self, rank_three):
        """Three classes, each with a witness per non-head member."""
        assert report_ok(rank_three)
        assert [c.members for c in rank_three.classes] == [
            ['A1/*', 'A2/*', 'A3/*', 'B2/*', 'B3/*', 'G2/*'],
            ['A3/A2@{1,2}', 'B2/A1@{1}'],
            ['B3/B2@{2,3}', 'G2/A1@{1}'],
        ]
        for c in rank_three.classes:
            assert sorted(c.witnesses) == c.members[1:]

    def test_aliases_are_merged(self, rank_three):
        """The flipped A3 pair is reported once."""
        by_name = {p.name: p for p in rank_three.pairs}
        assert by_name['A3/A1@{1}'].aliases == ['A3/A1@{3}']
        assert 'A3/A1@{3}' not in by_name

    def test_unexpected_class_is_a_discrepancy(self):
        """Without a prediction the full class is reported."""
        report = classify(irreducible_pairs(2), expected=[])
        assert not report.ok
        assert report.discrepancies == ["unexpected class ['A1/*', 'A2/*', 'B2/*', 'G2/*']"]
        assert report.to_table().endswith('MISMATCH\n')

    def test_size_cap_skips(self):
        """Quotients over the cap are skipped, not failed."""
        report = classify(irreducible_pairs(2), size_cap=6, expected=expected_coincidences(2))
        assert sorted(p.name for p in report.skipped) == ['B2/-', 'G2/-']
        assert report.ok
        assert report.to_dict()['skipped'] == ['B2/-', 'G2/-']

    def test_to_dict(self, rank_three):
        data = rank_three.to_dict()
        assert data['ok'] is True
        assert data['expected'] == [c.members for c in rank_three.classes]
        chain = next(p for p in data['pairs'] if p['name'] == 'G2/A1@{1}')
        assert (chain['size'], chain['length']) == (6, 5)


class TestClassifyLargerRanks:
    """Sweeps at the ranks where both series and the mirror pairs appear."""

    @pytest.fixture(scope='class')
    def rank_four(self):
        return classify(irreducible_pairs(4), expected=expected_coincidences(4))

    def test_rank_four_matches_prediction(self, rank_four):
        assert rank_four.discrepancies == []
        assert report_ok(rank_four)
        members = [c.members for c in rank_four.classes]
        assert len(members) == 4
        assert ['B3/A2@{1,2}', 'D4/A3@{1,2,3}'] in members
        assert ['B3/B2@{2,3}', 'G2/A1@{1}'] in members

    def test_rank_four_mirror_pairs_merged(self, rank_four):
        by_name = {p.name: p for p in rank_four.pairs}
        assert by_name['A4/A2xA1@{1,2,4}'].aliases == ['A4/A1xA2@{1,3,4}']
        assert by_name['F4/A2xA1@{1,2,4}'].aliases == ['F4/A1xA2@{1,3,4}']
        assert 'A4/A1xA2@{1,3,4}' not in by_name

    def test_rank_five_matches_prediction(self):
        """Five classes, the sporadic one with three members."""
        report = classify(irreducible_pairs(5), size_cap=10000, expected=expected_coincidences(5))
        assert report.discrepancies == []
        assert report_ok(report)
        members = [c.members for c in report.classes]
        assert len(members) == 5
        assert ['A5/A4@{1,2,3,4}', 'B3/B2@{2,3}', 'G2/A1@{1}'] in members
        assert ['B4/A3@{1,2,3}', 'D5/A4@{1,2,3,4}'] in members


class TestAnalysePair:
    def test_overflow(self):
        poset, fp, skipped = analyse_pair(make_pair('B3'), 10)
        assert poset is None and fp is None
        assert 'cap of 10' in skipped

    def test_ok(self):
        poset, fp, skipped = analyse_pair(make_pair('A3', [2]), None)
        assert poset.size == 12
        assert fp.size == 12
        assert skipped is None


def report_ok(report):
    return report.ok and not report.skipped
