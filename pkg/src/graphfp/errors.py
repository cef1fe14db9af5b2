"""Exception taxonomy shared across the package."""


class GraphFPError(Exception):
    """Base class for every error raised by this package."""


class FormatError(GraphFPError):
    """Malformed input: bad JSON shape, bad rational literal, bad word syntax."""


class DomainError(GraphFPError):
    """Well-formed input that violates a domain contract (unknown vertex,
    inadmissible path, order bound exceeded, ...)."""
