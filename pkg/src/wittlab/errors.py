"""Exception types shared across the library."""


class WittlabError(Exception):
    """Base class for all library-specific errors."""


class ParamsMismatch(WittlabError):
    """Witt vectors with different (p, k, base ring) were combined."""


class LengthTooShort(WittlabError):
    """An operator that shortens a Witt vector was applied at length 1."""


class LengthMismatch(WittlabError):
    """A Witt vector of the wrong length was supplied."""


class InternalIntegralityFailure(WittlabError):
    """An exact division by a power of p failed while solving a ghost
    system.  Integrality of these solutions is a theorem, so this always
    signals an implementation bug, never bad user input."""


class GroupMismatch(WittlabError):
    """Two functors over different cyclic groups were combined."""


class NotASubgroup(WittlabError):
    """A divisor argument does not define a subgroup in context."""


class ActionOrderInvalid(WittlabError):
    """A group action whose order does not divide the group order."""


class UnsupportedInput(WittlabError):
    """A Tambara functor outside the supported norm classes."""


class PrimeDividesN(WittlabError):
    """The prime p must be coprime to the order n of the base group."""


class NotApplicable(WittlabError):
    """An operation restricted to n = 1 was called with n > 1."""


class EvenPrime(WittlabError):
    """Witt complex machinery requires an odd prime."""


class MalformedData(WittlabError):
    """Structurally invalid input to the Witt complex checker."""
