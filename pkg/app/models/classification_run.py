# app/models/classification_run.py
from datetime import datetime, timezone
from typing import Any, Dict, List, Optional, TYPE_CHECKING

from sqlalchemy import JSON, CheckConstraint, Integer, String, Text, func
from sqlalchemy.orm import Mapped, mapped_column, relationship

from ..database.database_config import Base

UTC = timezone.utc

if TYPE_CHECKING:
    from .pair_record import PairRecord


class ClassificationRun(Base):
    """One classify sweep over a family of Coxeter pairs."""
    __tablename__ = 'classification_runs'

    id: Mapped[int] = mapped_column(Integer, primary_key=True)
    max_rank: Mapped[int] = mapped_column(Integer, nullable=False)
    max_elements: Mapped[Optional[int]] = mapped_column(Integer, nullable=True)
    status: Mapped[str] = mapped_column(
        String(20),
        default='running',
        nullable=False,
        server_default='running'
    )
    message: Mapped[Optional[str]] = mapped_column(Text, nullable=True)
    summary: Mapped[Optional[Dict[str, Any]]] = mapped_column(JSON, nullable=True)
    created_at: Mapped[datetime] = mapped_column(
        server_default=func.now(),
        nullable=False
    )
    finished_at: Mapped[Optional[datetime]] = mapped_column(nullable=True)

    pairs: Mapped[List["PairRecord"]] = relationship(
        "PairRecord",
        back_populates="run",
        cascade="all, delete-orphan",
        passive_deletes=True,
        order_by="PairRecord.name"
    )

    __table_args__ = (
        CheckConstraint(
            "status IN ('running', 'ok', 'mismatch', 'failed')",
            name='valid_run_status'
        ),
        CheckConstraint("max_rank >= 1", name='valid_max_rank'),
    )

    def finish(self, status: str, message: Optional[str] = None,
               summary: Optional[Dict[str, Any]] = None) -> 'ClassificationRun':
        """Close the run with its final status.

        Args:
            status: one of ok, mismatch, failed
            message: optional status message
            summary: optional JSON summary of the report

        Returns:
            Self for method chaining
        """
        self.status = status.lower()
        self.message = message
        if summary is not None:
            self.summary = summary
        self.finished_at = datetime.now(UTC)
        return self

    def to_dict(self) -> Dict[str, Any]:
        def format_datetime(dt: Optional[datetime]) -> Optional[str]:
            return dt.isoformat() if dt else None

        return {
            'id': self.id,
            'max_rank': self.max_rank,
            'max_elements': self.max_elements,
            'status': self.status,
            'message': self.message,
            'summary': self.summary,
            'created_at': format_datetime(self.created_at),
            'finished_at': format_datetime(self.finished_at),
        }

    def __repr__(self) -> str:
        return f'<ClassificationRun {self.id}: rank<={self.max_rank} ({self.status})>'
