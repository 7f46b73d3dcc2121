"""Exception types shared by the solvers."""


class PreconditionError(ValueError):
    """Input outside the class a solver handles (wrong degree, cyclic, ...)."""


class InvariantViolation(AssertionError):
    """A step that the correctness argument guarantees did not hold."""
