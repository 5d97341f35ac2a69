class AtomkitError(ValueError):
    """Base class for domain errors raised by atomkit."""


class ParseError(AtomkitError):
    pass


class RankMismatch(AtomkitError):
    pass


class NotAnInvolution(AtomkitError):
    pass


class NotAnInverseAtom(AtomkitError):
    pass


class BoundExceeded(AtomkitError):
    pass
