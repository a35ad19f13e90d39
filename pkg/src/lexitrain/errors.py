"""Exception hierarchy shared across the package.

Every domain error raised by the library derives from :class:`LexitrainError`
so callers (CLI, HTTP layer) can map failures to stable error codes in one
place.
"""

from __future__ import annotations


class LexitrainError(Exception):
    """Base class for all domain errors."""

    code = "INTERNAL"


# --- content packs ---------------------------------------------------------

class PackSyntaxError(LexitrainError):
    """The pack document is not well-formed (bad JSON)."""

    code = "PACK_SYNTAX"

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)


class PackSchemaError(LexitrainError):
    """The pack document is well-formed but violates the pack schema."""

    code = "PACK_SCHEMA"

    def __init__(self, message: str, location: str = "$"):
        self.location = location
        super().__init__(f"{location}: {message}")


# --- feedback --------------------------------------------------------------

class InvalidModalityError(LexitrainError):
    """The (type, level, timing) feedback configuration is not allowed."""

    code = "INVALID_MODALITY"


class InsufficientDistractorsError(LexitrainError):
    """The pack holds fewer than four distinct translations, so a
    four-option question cannot be seated."""

    code = "INSUFFICIENT_DISTRACTORS"


class NothingDeferredError(LexitrainError):
    """Delayed-feedback flush was requested but no feedback is buffered."""

    code = "NOTHING_DEFERRED"


# --- session engine --------------------------------------------------------

class LevelLockedError(LexitrainError):
    """The requested level is gated behind an incomplete prerequisite."""

    code = "LEVEL_LOCKED"

    def __init__(self, message: str, prerequisite: tuple[str, str] | None = None):
        self.prerequisite = prerequisite
        super().__init__(message)


class UnknownCategoryError(LexitrainError):
    code = "UNKNOWN_CATEGORY"


class SessionCompleteError(LexitrainError):
    """A step was requested from a session that has already finished."""

    code = "SESSION_COMPLETE"


class SessionNotCompleteError(LexitrainError):
    """A completion report was requested before the category finished."""

    code = "SESSION_NOT_COMPLETE"


class OutOfOrderAnswerError(LexitrainError):
    """The answered question is not the one currently awaiting an answer."""

    code = "OUT_OF_ORDER_ANSWER"


class UnknownQuestionError(LexitrainError):
    """The question id was never issued by this session."""

    code = "UNKNOWN_QUESTION"


# --- persistence -----------------------------------------------------------

class OrderingViolationError(LexitrainError):
    """The appended event breaks the per-learner stream ordering rules."""

    code = "ORDERING_VIOLATION"


class StorageFailureError(LexitrainError):
    """The underlying log file could not be written."""

    code = "STORAGE_FAILURE"


class CorruptStreamError(LexitrainError):
    """An event log line is undecodable, checksum-broken, or out of sequence."""

    code = "CORRUPT_STREAM"

    def __init__(self, message: str, offset: int | None = None):
        self.offset = offset
        if offset is not None:
            message = f"offset {offset}: {message}"
        super().__init__(message)


# --- statistics ------------------------------------------------------------

class EmptyInputError(LexitrainError):
    code = "EMPTY_INPUT"


class OutOfRangeRatingError(LexitrainError):
    """A survey rating fell outside the 1..5 scale."""

    code = "OUT_OF_RANGE_RATING"


class OutOfRangeError(LexitrainError):
    """A mean fell outside the [1.0, 5.0] banding range."""

    code = "OUT_OF_RANGE"


class DegenerateInputError(LexitrainError):
    """Fewer than two groups, or a group with fewer than two observations."""

    code = "DEGENERATE_INPUT"


class ZeroWithinVarianceError(LexitrainError):
    """All groups are constant with equal means; the F ratio is undefined."""

    code = "ZERO_WITHIN_VARIANCE"


class NonConvergenceError(LexitrainError):
    """An iterative numeric routine hit its iteration cap.

    This signals a numerics bug rather than bad input.
    """

    code = "NON_CONVERGENCE"
