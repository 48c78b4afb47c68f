from typing import Optional


class LocalChiError(Exception):
    """Base class for errors raised by this package."""


class GraphParseError(LocalChiError, ValueError):
    def __init__(self, reason: str, line_no: int = 0, line: Optional[str] = None):
        self.reason = reason
        self.line_no = line_no
        self.line = line
        where = f"line {line_no}" if line_no else "input"
        shown = f": {line.strip()!r}" if line is not None else ""
        super().__init__(f"{where}: {reason}{shown}")


class InvalidGraphError(LocalChiError, ValueError):
    pass


class BoundDomainError(LocalChiError, ValueError):
    pass


class LocalChromaticExceeded(LocalChiError):
    """A carved part is not c-colorable, so some radius-r ball needs more than c colors."""

    def __init__(self, center: int, level: int, c: int):
        self.center = center
        self.level = level
        self.c = c
        super().__init__(
            f"local chromatic number exceeds {c} at center {center} (level {level})"
        )
