"""Error types with machine-readable kinds.

The CLI maps ParseError to exit code 2 and MathError to exit code 1;
`kind` is a stable identifier emitted in JSON error output.
"""

from __future__ import annotations


class HypermultError(Exception):
    kind = "error"

    def __init__(self, message: str, kind: str | None = None):
        super().__init__(message)
        if kind is not None:
            self.kind = kind


class ParseError(HypermultError):
    kind = "parse"


class MathError(HypermultError):
    """Domain violations: wrong field, zero polynomial, unsupported shape..."""

    kind = "math"
