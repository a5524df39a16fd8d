"""Exception types raised across the toolkit.

Everything derives from :class:`CWIError` so the CLI can map any data or
model problem to exit code 1 with a single ``except`` clause.
"""


class CWIError(Exception):
    """Base class for all toolkit errors."""


class DataError(CWIError, ValueError):
    """Input data violates a format or content rule."""

    def __init__(self, message, path=None, lineno=None):
        self.path = path
        self.lineno = lineno
        self.detail = message
        super().__init__(self._format())

    def _format(self):
        where = ""
        if self.path is not None and self.lineno is not None:
            where = f"{self.path}:{self.lineno}: "
        elif self.path is not None:
            where = f"{self.path}: "
        elif self.lineno is not None:
            where = f"line {self.lineno}: "
        return where + self.detail

    def at(self, path=None, lineno=None):
        """Return a copy of this error annotated with a file location."""
        err = type(self)(self.detail, path=path, lineno=lineno)
        return err


# corpus_io
class MalformedLine(DataError):
    pass


BadFieldCount = MalformedLine


class OffsetOutOfRange(DataError):
    pass


class TokenMismatch(DataError):
    pass


class BadLabel(DataError):
    pass


class EmptyDataset(DataError):
    pass


# lexical resources
class MalformedCount(DataError):
    pass


class MissingFile(DataError):
    pass


class MalformedIndexLine(DataError):
    pass


class MalformedDataLine(DataError):
    pass


class ShortLine(DataError):
    pass


class MalformedLexiconLine(DataError):
    pass


class EmptySentence(DataError):
    pass


# features
class EmptyWord(DataError):
    pass


class BadFeatureMask(DataError):
    pass


# classifiers
class EmptyCounts(DataError):
    pass


class UnlabeledData(DataError):
    pass


class SingleClassData(DataError):
    pass


class MissingFeature(DataError):
    pass


class BadThreshold(DataError):
    pass


class BadConfig(DataError):
    pass


class SchemaVersionMismatch(DataError):
    pass


class CorruptModel(DataError):
    pass


# evaluation
class LengthMismatch(DataError):
    pass


class EmptyMatrix(DataError):
    pass


class TooFewPerClass(DataError):
    pass


class BadK(DataError):
    pass
