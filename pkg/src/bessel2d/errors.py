"""Exception and warning types shared across the package."""

from __future__ import annotations


class Bessel2dError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(Bessel2dError, ValueError):
    """An argument lies outside the supported range of an operation."""


class RegimeError(Bessel2dError):
    """The requested asymptotic regime does not apply to these arguments."""


class DivergenceZoneError(RegimeError):
    """The point is too close to a bifurcation set / turning point, where the
    primitive asymptotic formula diverges."""


class UnsupportedRegimeError(RegimeError):
    """No formula is available for this parameter combination."""


class ToleranceNotMetError(Bessel2dError):
    """A truncated series could not certify the requested tolerance.

    Carries the achieved a-posteriori tail bound in ``tail_bound``.
    """

    def __init__(self, message: str, tail_bound: float):
        super().__init__(message)
        self.tail_bound = tail_bound


class BranchAmbiguityWarning(UserWarning):
    """A half-integer-power prefactor base passed close to the origin, where
    its argument (and hence the branch) is ill-conditioned."""
