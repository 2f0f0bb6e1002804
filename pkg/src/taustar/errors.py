"""Exception hierarchy for the taustar package.

Everything raised deliberately by this package derives from
:class:`TauStarError`, so callers (notably the CLI) can distinguish
"bad data / bad request" from genuine bugs with a single except clause.
"""


class TauStarError(Exception):
    """Base class for all errors raised by taustar."""


class SampleSizeError(TauStarError, ValueError):
    """The sample is too small for the requested estimator."""


class TieRoutingError(TauStarError, ValueError):
    """A ties-forbidden code path received data containing ties."""


class IngestError(TauStarError, ValueError):
    """A data file could not be parsed into a paired sample."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
