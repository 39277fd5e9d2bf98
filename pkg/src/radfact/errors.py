"""Shared exception types."""


class ResourceLimitError(Exception):
    """An enumeration or factorization exceeded a configured resource bound.

    `bound` names the limit that was hit (e.g. "max-ideals"), `value` is the
    configured limit.  The CLI maps this exception to exit status 3.
    """

    def __init__(self, message, bound, value):
        super().__init__(message)
        self.bound = bound
        self.value = value
