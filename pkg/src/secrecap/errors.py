"""Exception types that callers may want to tell apart."""


class ChannelFormatError(ValueError):
    """Channel file or channel JSON object violates the schema."""


class InconsistencyError(ArithmeticError):
    """Internal cross-check failed; the computed solution is not trustworthy.

    Raised when the reconstructed covariance does not reproduce the capacity
    value predicted by the root analysis, or when no admissible root exists
    for a channel that passed the positivity test. Carries enough context to
    file the offending channel as a regression case.
    """
