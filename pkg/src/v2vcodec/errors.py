"""Exception hierarchy shared by every codec and the table loader."""


class CodecError(ValueError):
    """Base class for all encode/decode failures."""


class TruncatedStreamError(CodecError):
    """The bit stream ended before a complete symbol or code could be read."""


class MalformedFrameError(CodecError):
    """A frame header or layout is invalid."""


class AlphabetError(CodecError):
    """A character outside the coding alphabet was supplied."""

    def __init__(self, char, position):
        self.char = char
        self.position = position
        super().__init__(f"character {char!r} at position {position} is not in the alphabet")


class UnknownMessageError(CodecError):
    pass


class UnknownAbbreviationError(CodecError):
    pass


class UnknownCodewordError(CodecError):
    pass


class UnknownCodecError(CodecError):
    pass


class CodecFaultError(CodecError):
    """A codec failed to reproduce its input on decode."""


class TableError(ValueError):
    """A message table document failed validation.

    ``row`` is the 1-based line number in the source document, or None
    when the problem is not tied to a single line.
    """

    def __init__(self, message, row=None):
        self.row = row
        if row is not None:
            message = f"line {row}: {message}"
        super().__init__(message)


class SchemaError(TableError):
    pass


class PriorityTokenError(TableError):
    pass


class DuplicateMessageError(TableError):
    pass


class DuplicateAbbreviationError(TableError):
    pass


class DuplicateCodewordError(TableError):
    pass


class PrefixConflictError(TableError):
    pass


class UndefinedRatioError(CodecError, ZeroDivisionError):
    """Compression ratio requested for a zero-bit compressed size."""
