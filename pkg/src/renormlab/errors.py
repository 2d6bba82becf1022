"""Typed errors raised by the dynamics, geometry and verification layers.

Dynamical obstructions (no return, not renormalizable, ...) are data for the
pipeline: callers catch ``DynamicsError`` and record it in the report.
"""


class RenormLabError(Exception):
    """Base class for every error raised by renormlab."""


class DynamicsError(RenormLabError):
    """A parameter or interval does not support the requested construction."""


class NoRealFixedPoints(DynamicsError):
    pass


class NoReturnWithinBudget(DynamicsError):
    pass


class NoPreimage(DynamicsError):
    pass


class CriticalValueOutside(DynamicsError):
    pass


class CriticalPoint(DynamicsError):
    pass


class AlphaAttracting(DynamicsError):
    pass


class NotRenormalizable(DynamicsError):
    pass


class NoPreimageInInterval(DynamicsError):
    pass


class WrongCascadeKind(DynamicsError):
    pass


class NoRootInBracket(DynamicsError):
    pass


class DegeneratePosition(RenormLabError):
    pass


class InvalidNesting(RenormLabError):
    pass


class BranchCutAmbiguity(RenormLabError):
    def __init__(self, message, step=None):
        super().__init__(message if step is None else f"{message} (step {step})")
        self.step = step


class SamplingFailure(RenormLabError):
    pass


class InsufficientData(RenormLabError):
    pass
