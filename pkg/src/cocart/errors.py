"""Exception hierarchy shared by every module."""


class CocartError(Exception):
    """Base class for all toolkit errors."""


class CompositionError(CocartError, KeyError):
    """Lookup of a composite that is not composable or missing from the table."""

    def __str__(self):
        return Exception.__str__(self)


class SizeLimitExceeded(CocartError):
    """An exhaustive search would exceed the configured candidate bound."""

    def __init__(self, what, size, limit):
        self.what = what
        self.size = size
        self.limit = limit
        super().__init__(f"{what}: {size} candidates exceeds limit {limit}")


class InvariantViolated(CocartError):
    """A construction produced data that fails its own re-validation."""

    def __init__(self, message, report=None):
        self.report = report
        super().__init__(message)


class NotInvertible(CocartError):
    """A morphism required to be invertible has no two-sided inverse."""


class MissingStructure(CocartError):
    """A bundle lacks a block that the requested operation needs."""


class BundleError(CocartError):
    """Base class for bundle parsing failures."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(f"{message}{where}")


class ParseError(BundleError):
    """Malformed bundle text."""


class ResolveError(BundleError):
    """A bundle references a name that is not declared."""


class LawError(BundleError):
    """Bundle tables violate category or magmal laws."""

    def __init__(self, message, report=None, line=None, column=None):
        self.report = report
        super().__init__(message, line, column)


class PreconditionFailed(CocartError, ValueError):
    """An operation was called on data that does not meet its stated precondition."""
