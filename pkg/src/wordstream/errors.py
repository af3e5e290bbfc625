"""Exception types shared across the package."""


class WordstreamError(Exception):
    """Base class for all errors raised by this package."""


class AlphabetError(WordstreamError):
    """A letter does not belong to the expected alphabet."""


class StreamOverflowError(WordstreamError):
    """More letters were fed to a machine than its length bound allows."""


class ConstructionError(WordstreamError):
    """A group, recipe or machine could not be built from the given data."""


class VerificationError(ConstructionError):
    """Loaded data failed its oracle consistency check."""


class ResourceLimitError(WordstreamError):
    """A computation exceeded its configured memory or size cap."""


class GenerationError(WordstreamError):
    """Random generation failed to produce a requested object in time."""


class FormatError(WordstreamError):
    """A data file does not conform to its documented format."""


class DslError(WordstreamError):
    """A group expression failed to parse or elaborate.

    line and col are 1-based positions of the offending token.
    """

    def __init__(self, message, line=None, col=None):
        self.line = line
        self.col = col
        if line is not None:
            message = "line %d, col %d: %s" % (line, col, message)
        super().__init__(message)
