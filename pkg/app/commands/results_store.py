# app/commands/results_store.py
import logging
from typing import List, Optional

from ..classification.classify import CoincidenceReport
from ..classification.verify import CheckResult
from ..database.factories.database_manager import DatabaseManager
from ..models.classification_run import ClassificationRun
from ..models.pair_record import PairRecord
from ..models.verification_log import VerificationLog

logger = logging.getLogger(__name__)


def record_classification(report: CoincidenceReport, max_rank: int, max_elements: Optional[int]) -> int:
    """Persist a classify sweep and its pairs; returns the run id."""
    class_of = {name: i for i, c in enumerate(report.classes, 1) for name in c.members}
    session = DatabaseManager.get_session()
    try:
        run = ClassificationRun(max_rank=max_rank, max_elements=max_elements)
        for r in report.pairs:
            run.pairs.append(PairRecord(
                name=r.name,
                size=r.poset.size if r.poset else None,
                length=r.poset.length if r.poset else None,
                fingerprint=r.fingerprint.digest if r.fingerprint else None,
                class_index=class_of.get(r.name),
                skipped=bool(r.skipped),
            ))
        run.finish(
            'ok' if report.ok else 'mismatch',
            '; '.join(report.discrepancies) or None,
            {'classes': [c.members for c in report.classes], 'skipped': [p.name for p in report.skipped]},
        )
        session.add(run)
        session.commit()
        logger.info('stored classification run %d with %d pairs', run.id, len(report.pairs))
        return run.id
    except Exception:
        session.rollback()
        raise
    finally:
        session.close()


def record_verification(results: List[CheckResult]) -> int:
    """Persist one log row per checked case; returns the number of rows."""
    session = DatabaseManager.get_session()
    try:
        for r in results:
            session.add(VerificationLog.create_log(
                suite=r.suite,
                case=r.case,
                status=r.status,
                message='; '.join(r.failures) or None,
                details=r.details or None,
            ))
        session.commit()
        logger.info('stored %d verification rows', len(results))
        return len(results)
    except Exception:
        session.rollback()
        raise
    finally:
        session.close()
