"""Exception hierarchy shared by every module of the toolkit."""


class SoftRoughError(Exception):
    """Base class for all errors raised by this package."""


class UniverseMismatch(SoftRoughError):
    """Two values bound to different universes were combined."""


class UnknownElement(SoftRoughError):
    """An element name does not belong to the universe."""


class UniverseTooLarge(SoftRoughError):
    """An exhaustive ``2**n`` enumeration was refused at the configured limit."""


class NotAPartition(SoftRoughError):
    """A partition soft set was required."""


class NotACovering(SoftRoughError):
    """A covering soft set was required."""


class NotATopology(SoftRoughError):
    """An operation required a family satisfying the topology axioms."""


class UnknownProperty(SoftRoughError):
    """A property identifier is not in the verification catalog."""


class ParseError(SoftRoughError):
    """A space document is structurally malformed."""


class ValidationError(SoftRoughError):
    """A space document is well-formed but semantically invalid."""
