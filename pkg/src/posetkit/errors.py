"""Exception types shared across the package."""


class PosetKitError(Exception):
    """Base class for all errors raised by posetkit."""


class EmptyCarrier(PosetKitError):
    """A poset carrier (or restriction target) was empty."""


class CycleDetected(PosetKitError):
    """The closure of the input edges relates two distinct elements both ways."""


class ElementNotInCarrier(PosetKitError):
    """An element argument is not part of the poset's carrier."""


class NotASubset(PosetKitError):
    """A set argument is not contained in the carrier."""


class NotASubsetOfLeft(PosetKitError):
    """A vertex-set argument is not contained in the left part of the graph."""


class InstanceTooLarge(PosetKitError):
    """The instance exceeds the cap of an exhaustive-search operation."""


class NotASmallestCover(PosetKitError):
    """Disjointification requires a minimum-size chain cover and got a larger one."""


class WrongCardinality(PosetKitError):
    """The carrier size does not match the r*s+1 shape the operation requires."""


class EmptyInput(PosetKitError):
    """A sequence constructor received no values."""


class DuplicateValue(PosetKitError):
    """A sequence constructor received repeated values."""


class ValidationError(PosetKitError):
    """An instance violates a structural invariant (duplicate id, dangling
    edge endpoint, overlapping vertex parts, bad field shape, ...)."""


class ParseError(PosetKitError):
    """The input is not well-formed UTF-8 JSON of the expected shape."""
