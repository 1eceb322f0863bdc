from sqlalchemy import create_engine, event
from sqlalchemy.pool import StaticPool

from ..database_config import DatabaseConfig


def _enable_foreign_keys(dbapi_connection, _record):
    cursor = dbapi_connection.cursor()
    cursor.execute("PRAGMA foreign_keys=ON")
    cursor.close()


class SQLiteConfig(DatabaseConfig):
    """SQLite results-store configuration"""

    def create_engine(self):
        options = dict(self.kwargs)
        if ":memory:" in self.db_url or self.db_url in ("sqlite://", "sqlite:///"):
            # one shared connection, or every session would see an empty database
            options.setdefault("poolclass", StaticPool)
        engine = create_engine(
            self.db_url,
            connect_args={"check_same_thread": False},
            **options
        )
        event.listen(engine, "connect", _enable_foreign_keys)
        return engine
