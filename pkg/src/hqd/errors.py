"""Exception types shared across the package."""


class InvalidArgument(ValueError):
    """An input violates an operation's precondition."""


class InvalidRecolor(ValueError):
    """A cycle combination was requested on a square that does not admit it."""


class UnsupportedInstance(RuntimeError):
    """A construction has no supported route for this instance.

    Raised instead of ever returning an unverified answer.
    """


class CertificateParseError(ValueError):
    """A certificate file is malformed."""
