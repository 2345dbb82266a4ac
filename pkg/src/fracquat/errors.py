"""Exception types shared across the package."""


class ValidationError(ValueError):
    """A precondition on orders, intervals or geometry was violated."""


class OrderGateError(ValidationError):
    """A fractional order left the admissible strip 0 < Re < 1."""


class GeometryError(ValidationError):
    """Degenerate rectangle, bad normal, or an out-of-domain point."""


class PoleError(ValidationError):
    """Gamma evaluated at (numerically) a nonpositive integer."""


class EvaluationError(RuntimeError):
    """A field evaluator failed; carries the offending location."""

    def __init__(self, message: str, where=None):
        super().__init__(message if where is None else f"{message} at {where}")
        self.where = where


class SingularSegmentError(RuntimeError):
    """A fractional-derivative path passed too close to a kernel singularity."""
