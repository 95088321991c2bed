from enum import IntEnum


class ExitCode(IntEnum):
    OK = 0
    IO = 1
    CONFIGURATION = 2
    DOMAIN = 3


class ErrorCode(IntEnum):
    CONFIGURATION = 200
    STORE_MISSING = 210
    STORE_FORMAT = 211
    INDEX_VERSION = 212
    EMPTY_CORPUS = 300
    OVERLAPPING_SEEDS = 301
    UNDEFINED_RATIO = 302
    NO_REPRESENTATION = 310
    DEGENERATE_VECTOR = 311
    DIMENSION_MISMATCH = 312
    VOCABULARY_TOO_SMALL = 313
    EMPTY_COOCCURRENCE = 314
    POLARITY_DOMAIN = 320
    EMPTY_QUERY = 330
    UNKNOWN_REVIEW = 331
    METRIC_INPUT = 340


class RevrankError(Exception):
    code: ErrorCode
    exit_code: ExitCode = ExitCode.DOMAIN

    def __init__(self, message: str) -> None:
        super().__init__(message)
        self.message = message


class ConfigurationError(RevrankError):
    code = ErrorCode.CONFIGURATION
    exit_code = ExitCode.CONFIGURATION


class StoreMissingError(RevrankError):
    code = ErrorCode.STORE_MISSING
    exit_code = ExitCode.IO


class StoreFormatError(RevrankError):
    """A file exists but does not parse in the expected format."""

    code = ErrorCode.STORE_FORMAT
    exit_code = ExitCode.IO


class IndexVersionError(StoreFormatError):
    code = ErrorCode.INDEX_VERSION


class EmptyCorpusError(RevrankError):
    code = ErrorCode.EMPTY_CORPUS


class OverlappingSeedsError(RevrankError):
    code = ErrorCode.OVERLAPPING_SEEDS


class UndefinedRatioError(RevrankError):
    code = ErrorCode.UNDEFINED_RATIO


class NoRepresentationError(RevrankError):
    """None of the tokens has a vector in the embedding table."""

    code = ErrorCode.NO_REPRESENTATION


class DegenerateVectorError(RevrankError):
    code = ErrorCode.DEGENERATE_VECTOR


class DimensionMismatchError(RevrankError):
    code = ErrorCode.DIMENSION_MISMATCH


class VocabularyTooSmallError(RevrankError):
    code = ErrorCode.VOCABULARY_TOO_SMALL


class EmptyCooccurrenceError(RevrankError):
    code = ErrorCode.EMPTY_COOCCURRENCE


class PolarityDomainError(RevrankError):
    code = ErrorCode.POLARITY_DOMAIN


class EmptyQueryError(RevrankError):
    code = ErrorCode.EMPTY_QUERY


class UnknownReviewError(RevrankError):
    code = ErrorCode.UNKNOWN_REVIEW


class MetricInputError(RevrankError):
    code = ErrorCode.METRIC_INPUT


def format_error(*, code: ErrorCode, message: str) -> dict[str, str]:
    """Formatter for JSON bodies of error codes."""
    return {"code": str(code), "message": message}
