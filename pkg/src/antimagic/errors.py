"""Exception types shared across the package.

Every error carries a short machine-readable ``code`` (``"NOT_CONNECTED"``,
``"PIN_CONFLICT"``, ...) so callers and the CLI can branch on it without
parsing messages.
"""

from __future__ import annotations


class AntimagicError(Exception):
    def __init__(self, code: str, message: str = ""):
        self.code = code
        self.message = message or code
        super().__init__(f"{code}: {self.message}")


class GraphFormatError(AntimagicError):
    """A ``.bgl`` / ``.lbl`` document could not be parsed."""

    def __init__(self, code: str, message: str = "", line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(code, message)


class ValidationFailed(AntimagicError):
    def __init__(self, report):
        self.report = report
        detail = "; ".join(f"{c} {m}" for c, m in report.violations)
        super().__init__("VALIDATION_FAILED", detail)


class InternalInvariantError(AntimagicError):
    """Raised when construction state contradicts what the algorithm guarantees."""

    def __init__(self, message: str):
        super().__init__("INTERNAL_INVARIANT", message)
