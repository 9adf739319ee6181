from __future__ import annotations


class AdfError(Exception):
    """Base class for errors raised by this package."""


class CapExceeded(AdfError):
    """A configured size cap would be exceeded; work is refused, never truncated."""


class NotAModel(AdfError):
    """The reduct was requested for an interpretation that is not a two-valued model."""


class ValidationError(AdfError):
    """An ADF or input text is ill-formed; ``diagnostics`` lists every problem found."""

    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        super().__init__("\n".join(str(d) for d in self.diagnostics))


class ParseError(ValidationError):
    pass
