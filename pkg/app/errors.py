# app/errors.py
from typing import Optional


class BruhatError(Exception):
    """Base class for every error raised by the engine."""


class CoxeterError(BruhatError, ValueError):
    """Invalid Coxeter matrix, Weyl type or parabolic subset."""


class NonCrystallographicError(CoxeterError):
    """A bond has no crystallographic Cartan entry (m not in {2,3,4,6})."""


class EnumerationOverflow(BruhatError):
    """An enumeration exceeded its element cap."""

    def __init__(self, what: str, cap: int):
        super().__init__(f'{what} exceeded the cap of {cap} elements')
        self.what = what
        self.cap = cap


class NotGradable(BruhatError):
    """The relation has no least element or is not graded."""


class PosetError(BruhatError, ValueError):
    """The input relation is not a partial order."""


class PosetParseError(BruhatError):
    """Malformed poset file."""

    def __init__(self, message: str, line: Optional[int] = None):
        where = f'line {line}: ' if line is not None else ''
        super().__init__(f'{where}{message}')
        self.line = line


class DomainError(BruhatError, ValueError):
    """An operator was called outside its domain."""


class BUPreconditionError(BruhatError):
    """Input graph does not satisfy the expansion preconditions."""


class NotInImage(BruhatError):
    """The graph is not the expansion of any bw-Coxeter graph."""


class PairSpecError(BruhatError):
    """A pair descriptor could not be parsed."""

    def __init__(self, spec: str, position: int, message: str):
        pointer = ' ' * position + '^'
        super().__init__(f'{message} at position {position}\n  {spec}\n  {pointer}')
        self.spec = spec
        self.position = position
        self.reason = message


class StoreError(BruhatError, ValueError):
    """The results store URL is unsupported or the store cannot be opened."""
