"""Exception types shared by every module."""


class InputError(ValueError):
    """Malformed input: unknown identifiers, invalid relations, bad descriptors."""


class SizeError(InputError):
    """An exhaustive enumeration would exceed the configured size cap."""


class PreconditionError(InputError):
    """A construction was asked for on a space that does not meet its hypotheses."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
