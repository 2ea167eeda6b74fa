"""Exception hierarchy shared by every service."""
from typing import Any, Dict, Optional


class CoxeterError(Exception):
    """Base error carrying a stable machine-readable code."""

    code = "error"

    def __init__(self, message: str, location: Optional[Dict[str, Any]] = None):
        self.message = message
        self.location = location
        super().__init__(self.message)

    def to_dict(self) -> Dict[str, Any]:
        """Error object printed by the CLI."""
        return {"code": self.code, "message": self.message, "location": self.location}


class DiagramSyntaxError(CoxeterError):
    code = "diagram_syntax"

    def __init__(self, message: str, line: int, column: int):
        super().__init__(
            f"{message} (line {line}, column {column})",
            location={"line": line, "column": column},
        )
        self.line = line
        self.column = column


class DiagramValidationError(CoxeterError):
    code = "diagram_invalid"


class FieldError(CoxeterError):
    code = "field"


class NotAReflection(CoxeterError):
    code = "not_a_reflection"


class PreconditionError(CoxeterError):
    code = "precondition"


class BraidIndexError(CoxeterError):
    code = "braid_index"

    def __init__(self, message: str, position: int):
        super().__init__(message, location={"position": position})
        self.position = position


class ProductMismatch(CoxeterError):
    code = "product_mismatch"


class ParityError(CoxeterError):
    code = "parity"


class LengthError(CoxeterError):
    code = "length"


class NotConnected(CoxeterError):
    code = "not_connected"


class CapExceeded(CoxeterError):
    code = "cap_exceeded"


class JobError(CoxeterError):
    code = "invalid_job"


class InternalError(CoxeterError):
    """Raised when a guaranteed property fails; points at a bug, not bad input."""

    code = "internal"
