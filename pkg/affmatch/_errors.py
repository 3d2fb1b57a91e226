# coding:utf-8
from typing import Optional, Sequence


class AffmatchError(Exception):
    """Base class for every error raised by affmatch."""


class MarketError(AffmatchError):
    """A market failed validation.

    Attributes:
        pointer: JSON-pointer style location of the offending field in the
            instance document, e.g. ``/employer_prefs/e2``.
    """

    def __init__(self, message: str, pointer: str = '') -> None:
        self.message = message
        self.pointer = pointer
        super().__init__(message)

    def __str__(self) -> str:
        if self.pointer:
            return "%s: %s" % (self.pointer, self.message)
        return self.message


class SizeMismatch(MarketError):
    pass


class DuplicateAffiliation(MarketError):
    pass


class InvalidTuple(MarketError):
    def __init__(self, message: str, pointer: str = '',
                 employer: Optional[str] = None,
                 entry: Optional[Sequence[str]] = None) -> None:
        self.employer = employer
        self.entry = tuple(entry) if entry is not None else None
        super().__init__(message, pointer)


class IncompleteProfile(MarketError):
    def __init__(self, message: str, pointer: str = '',
                 employer: Optional[str] = None) -> None:
        self.employer = employer
        super().__init__(message, pointer)


class IncompleteApplicantOrder(MarketError):
    pass


class UnknownAgent(MarketError):
    pass


class InstanceSyntaxError(AffmatchError):
    """The instance document is not well-formed."""

    def __init__(self, message: str, line: int = 0, column: int = 0) -> None:
        self.line = line
        self.column = column
        super().__init__(message)

    def __str__(self) -> str:
        if self.line:
            return "line %d column %d: %s" % (
                self.line, self.column, self.args[0])
        return self.args[0]


class InvalidMatching(AffmatchError):
    """Not a perfect matching of the market."""


class InstanceTooLarge(AffmatchError):
    def __init__(self, n: int, max_n: int) -> None:
        self.n = n
        self.max_n = max_n
        super().__init__(
            "market size %d exceeds the exhaustive-search bound %d "
            "(raise it with max_n or AFFMATCH_MAX_N)" % (n, max_n))


class InconsistentProfiles(AffmatchError):
    def __init__(self, employers: Sequence[str]) -> None:
        self.employers = tuple(employers)
        super().__init__(
            "employer profiles are not consistent: %s"
            % ", ".join(self.employers))


class InvalidConfig(AffmatchError):
    pass


class InvalidSpec(AffmatchError):
    pass


class BoundExceeded(AffmatchError):
    """Node budget exhausted before the search finished."""

    def __init__(self, node_budget: int, result=None) -> None:
        self.node_budget = node_budget
        self.result = result
        super().__init__("node budget %d exhausted" % node_budget)


class InvalidReport(AffmatchError):
    """A document passed to ``render_text`` is not a machine report."""
