# app/models/verification_log.py
from datetime import datetime
from typing import Any, Dict, Optional

from sqlalchemy import JSON, CheckConstraint, String, Text, func
from sqlalchemy.orm import Mapped, mapped_column

from ..database.database_config import Base


class VerificationLog(Base):
    __tablename__ = 'verification_logs'

    id: Mapped[int] = mapped_column(primary_key=True)
    suite: Mapped[str] = mapped_column(String(30), nullable=False)
    case: Mapped[str] = mapped_column(String(200), nullable=False)
    status: Mapped[str] = mapped_column(String(20), nullable=False)
    message: Mapped[Optional[str]] = mapped_column(Text)
    details: Mapped[Optional[Dict[str, Any]]] = mapped_column(JSON)
    created_at: Mapped[datetime] = mapped_column(
        server_default=func.now(),
        nullable=False
    )

    __table_args__ = (
        CheckConstraint(
            "status IN ('pass', 'fail', 'skipped')",
            name='valid_log_status'
        ),
    )

    def to_dict(self) -> Dict[str, Any]:
        """Convert the verification log to a dictionary."""
        return {
            'id': self.id,
            'suite': self.suite,
            'case': self.case,
            'status': self.status,
            'message': self.message,
            'details': self.details,
            'created_at': self.created_at.isoformat() if self.created_at else None,
        }

    @classmethod
    def create_log(
        cls,
        suite: str,
        case: str,
        status: str,
        message: Optional[str] = None,
        details: Optional[Dict[str, Any]] = None
    ) -> "VerificationLog":
        """ Helper method to create a new log entry.

           Args:
               suite: verification suite the case belongs to
               case: name of the checked case
               status: pass, fail or skipped
               message: optional failure summary
               details: optional JSON details

           Returns:
               Newly created VerificationLog instance
        """
        return cls(
            suite=suite,
            case=case,
            status=status,
            message=message,
            details=details
        )

    def __repr__(self) -> str:
        return f'<VerificationLog {self.id}: {self.suite}/{self.case} ({self.status})>'
