class DomainError(ValueError):
    """Raised when an input is outside an operation's mathematical domain.

    Subclasses ValueError so callers that only care about "bad input" can
    catch the usual thing; the command line maps it to exit code 2.
    """
