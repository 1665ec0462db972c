"""Exception types shared across the package.

The CLI maps these onto process exit codes, so library code should raise
the most specific class that applies rather than a bare ValueError.
"""


class DomainError(ValueError):
    """Input lies outside the domain a routine supports.

    Examples: taking the star of a series with a nonzero constant term,
    rewriting a series with fractional star exponents, or evaluating at a
    point off the allowed region of the complex plane.
    """


class NonElementaryConstantError(DomainError):
    """A basepoint limit exists but is not an elementary constant.

    Raised when an antiderivative has a finite limit at the basepoint that
    lies outside the field generated by rationals, logs and powers (a zeta
    value, say), and the caller did not ask for a numeric fallback.
    """

    def __init__(self, message: str = "non-elementary basepoint constant"):
        super().__init__(message)


class ConvergenceError(ArithmeticError):
    """A numeric series evaluation failed to meet the tolerance."""
