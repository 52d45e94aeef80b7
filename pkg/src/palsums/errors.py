"""Exception types shared across the package."""


class ParseError(ValueError):
    """Malformed decimal text: empty, non-digit characters, or a leading zero."""


class DomainError(ValueError):
    """An operation was called outside its domain (underflow, no precursor, ...)."""


class BudgetError(DomainError):
    """A brute-force operation was asked to exceed its configured budget."""
