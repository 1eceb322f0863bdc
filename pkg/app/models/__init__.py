# app/models/__init__.py
from .classification_run import ClassificationRun
from .pair_record import PairRecord
from .verification_log import VerificationLog

__all__ = ['ClassificationRun', 'PairRecord', 'VerificationLog']
