import logging

from sqlalchemy.exc import SQLAlchemyError
from sqlalchemy.orm import Session

from ...errors import StoreError
from ..adapters.sqlite_adapter import SQLiteConfig

logger = logging.getLogger(__name__)

DEFAULT_STORE_URL = 'sqlite:///bruhat.db'


class DatabaseManager:
    """Results-store factory class"""
    _instance = None
    _db_config = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
            cls._db_config = None
        return cls._instance

    @classmethod
    def init_db(cls, db_url: str = DEFAULT_STORE_URL, **kwargs) -> Session:
        """Initialize the store connection"""
        if not db_url.startswith('sqlite'):
            raise StoreError(f'unsupported store URL {db_url!r}: only sqlite URLs are accepted')
        config = SQLiteConfig(db_url=db_url, **kwargs)
        try:
            session = config.create_session()
        except SQLAlchemyError as e:
            raise StoreError(f'cannot open store {db_url!r}: {e}') from e
        cls._db_config = config
        logger.debug('results store at %s', db_url)
        return session

    @classmethod
    def is_initialized(cls) -> bool:
        return cls._db_config is not None

    @classmethod
    def get_session(cls) -> Session:
        """Get a new store session"""
        if cls._db_config is None:
            raise RuntimeError("Database not initialized. Call init_db() first.")
        return cls._db_config.create_session()

    @classmethod
    def close_session(cls, session: Session) -> None:
        """Close the store session"""
        if session:
            session.close()
