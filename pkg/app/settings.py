# app/settings.py
from typing import Any, Dict, Optional


class Settings:
    """Run settings, filled from command-line flags only."""

    DEFAULT_MAX_ELEMENTS = 5_000_000
    DEFAULT_ORACLE_CAP = 10_000

    def __init__(
        self,
        max_elements: int = DEFAULT_MAX_ELEMENTS,
        oracle_cap: int = DEFAULT_ORACLE_CAP,
        jobs: int = 1,
        store_url: Optional[str] = None,
        verbose: bool = False,
    ):
        if max_elements < 1:
            raise ValueError('max_elements must be positive')
        if jobs < 1:
            raise ValueError('jobs must be positive')
        self.max_elements = max_elements
        self.oracle_cap = oracle_cap
        self.jobs = jobs
        self.store_url = store_url
        self.verbose = verbose

    def to_dict(self) -> Dict[str, Any]:
        return {
            'max_elements': self.max_elements,
            'oracle_cap': self.oracle_cap,
            'jobs': self.jobs,
            'store_url': self.store_url,
            'verbose': self.verbose,
        }

    def __repr__(self) -> str:
        return f'<Settings max_elements={self.max_elements} jobs={self.jobs}>'
