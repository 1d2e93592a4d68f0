"""Exception types shared by all multilat modules."""


class MultilatError(ValueError):
    """Base class for domain errors (bad inputs, structural violations)."""


class CapExceeded(MultilatError):
    """An enumeration or materialization would exceed its configured cap."""


class NotALattice(MultilatError):
    """A cover relation does not describe a lattice."""


class InternalInconsistency(MultilatError):
    """A structural guarantee failed; indicates a bug, not a bad input."""
