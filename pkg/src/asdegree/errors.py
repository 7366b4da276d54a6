"""Exception types raised across the package."""


class DomainError(ValueError):
    """Argument outside the mathematical domain of an operation."""


class ParseError(ValueError):
    """Malformed edge-list input."""

    def __init__(self, message, lineno=None, source=None):
        self.lineno = lineno
        self.source = source
        where = ""
        if source is not None:
            where += f"{source}:"
        if lineno is not None:
            where += f"{lineno}: "
        elif where:
            where += " "
        super().__init__(where + message)


class ConsistencyError(ValueError):
    """Degree data and edge count disagree."""


class UnidentifiableError(ValueError):
    """The exponent cannot be estimated from the supplied degrees."""


class NoBracketError(ValueError):
    """Likelihood maximum lies on or beyond the search bracket."""


class NoValidPairError(ValueError):
    """No cutoff pair leaves enough degrees to fit."""


class InfeasibleError(ValueError):
    """A degree sequence that cannot be realized as a simple graph."""
