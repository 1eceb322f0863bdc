# tests/models/test_classification_run.py
"""
Test suite for ClassificationRun model.

This file is divided into two parts:
1. TestClassificationRunBehavior: object behaviour, no database involved.
2. TestClassificationRunPersistence: schema constraints and mapping on an in-memory store.
"""
from datetime import datetime, timezone

import pytest
from sqlalchemy.exc import IntegrityError

from app.database.factories.database_manager import DatabaseManager
from app.models.classification_run import ClassificationRun
from app.models.pair_record import PairRecord


class TestClassificationRunBehavior:
    """
    Focuses on the logic contained within the ClassificationRun class methods.
    """

    def test_finish_sets_status_and_time(self):
        """finish() closes the run and returns it for chaining."""
        run = ClassificationRun(max_rank=3, status='running')
        returned = run.finish('OK', summary={'classes': []})

        assert returned is run
        assert run.status == 'ok'
        assert run.summary == {'classes': []}
        assert run.finished_at is not None
        assert run.message is None

    def test_finish_keeps_summary_when_omitted(self):
        run = ClassificationRun(max_rank=3, summary={'skipped': ['B3/-']})
        run.finish('mismatch', message='missing class')

        assert run.summary == {'skipped': ['B3/-']}
        assert run.message == 'missing class'

    def test_to_dict_format(self):
        """Dates are ISO strings."""
        now = datetime.now(timezone.utc)
        run = ClassificationRun(id=7, max_rank=4, max_elements=100, status='ok', created_at=now)

        data = run.to_dict()

        assert data['id'] == 7
        assert data['max_rank'] == 4
        assert data['max_elements'] == 100
        assert data['created_at'] == now.isoformat()
        assert data['finished_at'] is None

    def test_repr_format(self):
        run = ClassificationRun(id=1, max_rank=4, status='ok')
        assert str(run) == '<ClassificationRun 1: rank<=4 (ok)>'


class TestClassificationRunPersistence:
    """
    Focuses on the Database Schema and SQLAlchemy Mapping.
    """

    @classmethod
    def setup_class(cls):
        DatabaseManager.init_db(db_url='sqlite:///:memory:')
        cls.db = DatabaseManager.get_session()

    @classmethod
    def teardown_class(cls):
        cls.db.close()

    def teardown_method(self):
        self.db.rollback()
        self.db.expire_all()

    def test_persistence_happy_path(self):
        """Defaults come from the server side."""
        run = ClassificationRun(max_rank=3)
        self.db.add(run)
        self.db.flush()

        assert run.id is not None
        assert run.status == 'running'
        assert run.created_at is not None

    def test_invalid_status(self):
        self.db.add(ClassificationRun(max_rank=3, status='unknown'))

        with pytest.raises(IntegrityError):
            self.db.flush()

    def test_invalid_max_rank(self):
        self.db.add(ClassificationRun(max_rank=0))

        with pytest.raises(IntegrityError):
            self.db.flush()

    def test_pairs_are_ordered_by_name(self):
        run = ClassificationRun(max_rank=2)
        run.pairs.append(PairRecord(name='G2/-', size=12, length=6))
        run.pairs.append(PairRecord(name='A2/-', size=6, length=3))
        self.db.add(run)
        self.db.flush()
        self.db.expire(run)

        assert [p.name for p in run.pairs] == ['A2/-', 'G2/-']

    def test_cascade_delete_pairs(self):
        """Deleting a run deletes its pair records."""
        run = ClassificationRun(max_rank=2)
        run.pairs.append(PairRecord(name='A1/-', size=2, length=1))
        self.db.add(run)
        self.db.flush()
        pair_id = run.pairs[0].id

        self.db.delete(run)
        self.db.flush()
        self.db.expire_all()

        assert self.db.get(PairRecord, pair_id) is None
