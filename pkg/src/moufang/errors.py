"""Exception types shared across the library."""


class LoopError(Exception):
    """Base class for all errors raised by this library."""


class NotLatinSquare(LoopError):
    """A row or column of the multiplication table repeats an entry."""


class NoIdentity(LoopError):
    """The table has no two-sided identity element."""


class NoTwoSidedInverse(LoopError):
    """Left and right inverses of an element differ (non-IP loop)."""


class NotPowerAssociative(LoopError):
    """Some one-generated subloop fails associativity, so powers are ambiguous."""


class OrderTooLarge(LoopError):
    """Input exceeds the desk-scale guard of the requested operation."""


class ParamTooSmall(LoopError):
    """Construction parameter below the smallest non-degenerate value."""


class BaseNotGroup(LoopError):
    """Chein doubling requires an associative base."""


class NotCentral(LoopError):
    """The doubling element must be central (and square to the identity)."""


class NoDecomposition(LoopError):
    """No index-2 group/element pair reproduces the doubled multiplication."""


class ClosureOverflow(LoopError):
    """Numeric closure kept growing; tolerance too small or arithmetic drifted."""


class MatchAmbiguous(LoopError):
    """A numeric product matched two distinct stored elements; tolerance too large."""


class PreconditionFailed(LoopError):
    """Input does not satisfy the stated hypotheses of the check."""


class NotPrimePowerPattern(LoopError):
    """Graph of 2-power order whose clique number fits no known family."""


class NotInCorpus(LoopError):
    """No corpus loop has a matching undirected power graph."""


class BadRecipe(LoopError):
    """Unparseable construction recipe string."""


class ParseError(LoopError):
    """Malformed input file."""

    def __init__(self, message, path=None, line=None):
        loc = ""
        if path is not None:
            loc = f"{path}:"
        if line is not None:
            loc += f"{line}: "
        elif loc:
            loc += " "
        super().__init__(loc + message)
        self.path = path
        self.line = line
