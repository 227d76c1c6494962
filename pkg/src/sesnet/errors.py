"""Error taxonomy shared by the library and the command line.

Every error carries the process exit status the CLI reports for it, so the
mapping lives in one place.
"""

from __future__ import annotations

import enum


class ExitCode(enum.IntEnum):
    OK = 0
    ERROR = 1
    USAGE = 2
    PARSE = 3
    VALIDATION = 4
    RANGE = 5
    DISJOINT = 6
    EMPTY_UNIVERSE = 7
    UNKNOWN_VERTEX = 8
    DUPLICATE_VERTEX = 9
    SIZE_GUARD = 10
    UNIVERSE_MISMATCH = 11
    DIMENSION = 12
    EMPTY_SIMPLEX = 13


class SenError(Exception):
    """Base class. ``line`` is set when the error comes from a parsed document."""

    exit_code = ExitCode.ERROR

    def __init__(self, message: str, *, line: int | None = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ParseError(SenError):
    exit_code = ExitCode.PARSE


class ValidationError(SenError):
    exit_code = ExitCode.VALIDATION


class RangeError(SenError, ValueError):
    exit_code = ExitCode.RANGE


class DisjointnessError(SenError):
    exit_code = ExitCode.DISJOINT


class EmptyUniverseError(SenError):
    exit_code = ExitCode.EMPTY_UNIVERSE


class UnknownVertexError(SenError, KeyError):
    exit_code = ExitCode.UNKNOWN_VERTEX

    def __str__(self) -> str:
        # KeyError would repr() the message
        return Exception.__str__(self)


class DuplicateVertexError(SenError):
    exit_code = ExitCode.DUPLICATE_VERTEX


class SizeGuardError(SenError):
    exit_code = ExitCode.SIZE_GUARD


class UniverseMismatchError(SenError):
    exit_code = ExitCode.UNIVERSE_MISMATCH


class DimensionError(SenError):
    exit_code = ExitCode.DIMENSION


class EmptySimplexError(SenError, ValueError):
    exit_code = ExitCode.EMPTY_SIMPLEX
