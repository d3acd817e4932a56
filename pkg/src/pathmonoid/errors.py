"""Shared exception types."""


class ResourceRefused(Exception):
    """Raised when a request exceeds a configured resource bound.

    The bound is enforced up front (or during saturation) and the work is
    refused outright rather than degraded; the CLI maps this to exit code 3.
    """
