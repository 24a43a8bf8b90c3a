"""Exception types shared across the package."""


class IfhvError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(IfhvError, ValueError):
    """A value violates its domain constraints (bad fuzzy pair, bad reference point, ...)."""


class MismatchError(IfhvError, ValueError):
    """Lengths or dimensions that must agree do not."""


class DegenerateError(IfhvError, ArithmeticError):
    """The input is degenerate for the requested computation (all-zero weights,
    indistinguishable alternatives) and no meaningful result exists."""


class ParseError(IfhvError, ValueError):
    """A problem or point-set file could not be parsed."""


class ValidationError(ParseError):
    """A parsed file has inconsistent shape or invalid values."""


class VersionError(ParseError):
    """A problem file declares an unsupported schema version."""
