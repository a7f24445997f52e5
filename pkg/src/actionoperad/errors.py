"""Exception hierarchy shared by every module of the package."""


class ActionOperadError(Exception):
    """Base class for all errors raised by this package."""


class ArityError(ActionOperadError, ValueError):
    """Sizes, arities or list lengths do not match."""


class ParseError(ActionOperadError, ValueError):
    """Malformed textual input.

    ``line`` and ``column`` are filled in by parsers that read multi-line
    files; single-token parsers leave them as ``None``.
    """

    def __init__(self, message, line=None, column=None):
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)
        self.line = line
        self.column = column


class InvariantError(ActionOperadError, ValueError):
    """Input data violates a structural invariant (not a bijection, not a group, ...)."""


class BudgetError(ActionOperadError, RuntimeError):
    """A computation would exceed its size or search budget."""


class CompositionError(ActionOperadError, ValueError):
    """Morphisms are not composable."""


class TermTypeError(ActionOperadError, TypeError):
    """A term is ill typed; ``subterm`` is the offending piece."""

    def __init__(self, message, subterm=None):
        super().__init__(message)
        self.subterm = subterm
