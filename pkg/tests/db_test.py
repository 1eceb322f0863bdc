# tests/db_test.py
import unittest

from sqlalchemy import inspect, text

from app.classification.classify import classify
from app.classification.patterns import expected_coincidences, irreducible_pairs
from app.classification.verify import appendix_check
from app.commands.results_store import record_classification, record_verification
from app.database.factories.database_manager import DatabaseManager
from app.errors import StoreError


class TestDatabase(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        """Set up an in-memory results store."""
        DatabaseManager.init_db(db_url='sqlite:///:memory:')
        cls.session = DatabaseManager.get_session()

    def test_tables_created(self):
        """All three tables exist after init."""
        tables = set(inspect(self.session.get_bind()).get_table_names())
        self.assertEqual(tables, {'classification_runs', 'pair_records', 'verification_logs'})

    def test_rejects_other_backends(self):
        with self.assertRaises(StoreError):
            DatabaseManager.init_db(db_url='postgresql://localhost/bruhat')
        self.assertTrue(DatabaseManager.is_initialized())

    def test_record_classification(self):
        """A rank-2 sweep stores one run and one row per pair."""
        report = classify(irreducible_pairs(2), expected=expected_coincidences(2))
        run_id = record_classification(report, 2, 1000)

        with DatabaseManager.get_session() as session:
            run = session.execute(text("""
                                       SELECT status, max_rank, finished_at
                                       FROM classification_runs
                                       WHERE id = :id
                                       """), {'id': run_id}).fetchone()
            self.assertEqual(run.status, 'ok')
            self.assertEqual(run.max_rank, 2)
            self.assertIsNotNone(run.finished_at)

            rows = session.execute(text("""
                                        SELECT name, class_index
                                        FROM pair_records
                                        WHERE run_id = :id
                                        ORDER BY name
                                        """), {'id': run_id}).fetchall()
            self.assertEqual(len(rows), len(report.pairs))
            in_class = [row.name for row in rows if row.class_index == 1]
            self.assertEqual(in_class, ['A1/*', 'A2/*', 'B2/*', 'G2/*'])

    def test_record_verification(self):
        results = appendix_check()
        self.assertEqual(record_verification(results), len(results))

        with DatabaseManager.get_session() as session:
            count = session.execute(text("""
                                         SELECT COUNT(*)
                                         FROM verification_logs
                                         WHERE suite = 'appendix' AND status = 'pass'
                                         """)).scalar()
            self.assertEqual(count, len(results))

    @classmethod
    def tearDownClass(cls):
        """Clean up database connection."""
        if cls.session:
            cls.session.close()


if __name__ == '__main__':
    unittest.main(verbosity=2)
