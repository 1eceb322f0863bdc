# app/models/pair_record.py
from typing import Any, Dict, Optional, TYPE_CHECKING

from sqlalchemy import Boolean, CheckConstraint, ForeignKey, Integer, String, UniqueConstraint
from sqlalchemy.orm import Mapped, mapped_column, relationship

from ..database.database_config import Base

if TYPE_CHECKING:
    from .classification_run import ClassificationRun


class PairRecord(Base):
    __tablename__ = 'pair_records'

    id: Mapped[int] = mapped_column(Integer, primary_key=True)
    run_id: Mapped[int] = mapped_column(
        Integer,
        ForeignKey('classification_runs.id', ondelete='CASCADE'),
        nullable=False
    )
    name: Mapped[str] = mapped_column(String(120), nullable=False)
    size: Mapped[Optional[int]] = mapped_column(Integer, nullable=True)
    length: Mapped[Optional[int]] = mapped_column(Integer, nullable=True)
    fingerprint: Mapped[Optional[str]] = mapped_column(String(64), nullable=True)
    # 1-based index into the run's coincidence classes, None for a singleton
    class_index: Mapped[Optional[int]] = mapped_column(Integer, nullable=True)
    skipped: Mapped[bool] = mapped_column(Boolean, default=False, nullable=False)

    run: Mapped["ClassificationRun"] = relationship("ClassificationRun", back_populates="pairs")

    __table_args__ = (
        UniqueConstraint('run_id', 'name', name='unique_pair_per_run'),
        CheckConstraint("size IS NULL OR size >= 1", name='valid_size'),
        CheckConstraint("length IS NULL OR length >= 0", name='valid_length'),
    )

    def to_dict(self) -> Dict[str, Any]:
        """Convert the record to a dictionary."""
        return {
            'id': self.id,
            'run_id': self.run_id,
            'name': self.name,
            'size': self.size,
            'length': self.length,
            'fingerprint': self.fingerprint,
            'class_index': self.class_index,
            'skipped': self.skipped,
        }

    def __repr__(self) -> str:
        return f'<PairRecord {self.id}: {self.name} (run {self.run_id})>'
