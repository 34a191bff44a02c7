"""Exception types shared across the package.

Two families matter to callers: input problems (bad syntax, invalid
theories) and resource guards (the deliberate caps on brute-force
search).  The CLI maps the first family to exit code 2 and the second
to exit code 3.
"""

from __future__ import annotations


class InputError(ValueError):
    """A problem with user-supplied input (syntax, ill-formed theory)."""


class FormulaSyntaxError(InputError):
    """Raised by the formula parser; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class TheoryFormatError(InputError):
    """Raised by the theory/ATMS file readers; carries the line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class InvalidTheoryError(InputError):
    """An operation was asked to run on a theory that fails validation."""


class CapExceeded(RuntimeError):
    """Base class for the resource guards on exhaustive search."""


class AtomCapExceeded(CapExceeded):
    """Too many atoms for exhaustive interpretation enumeration."""


class ExtensionCapExceeded(CapExceeded):
    """Too many linear extensions to enumerate."""


class SubsetBudgetExceeded(CapExceeded):
    """Too many premises for subset-lattice search (MUS, minimal supports)."""


class SearchBudgetExceeded(CapExceeded):
    """Too many arguments for the stable-extension search."""
