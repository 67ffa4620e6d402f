"""Exceptions shared across the package."""


class EdgeListError(ValueError):
    """Raised when an edge-list stream cannot be parsed.

    Carries the 1-based line number of the offending line.
    """

    def __init__(self, message, line_no):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class ConvergenceError(RuntimeError):
    """Raised when an iterative computation exhausts its iteration budget.

    ``backend`` names the computation, ``residual`` is the last measured
    max-norm change between successive iterates.
    """

    def __init__(self, backend, residual, max_iter):
        super().__init__(
            f"{backend} did not converge within {max_iter} iterations "
            f"(residual {residual:.3e})"
        )
        self.backend = backend
        self.residual = residual
        self.max_iter = max_iter
