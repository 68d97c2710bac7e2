#!/usr/bin/env python3
"""
Exception hierarchy for heislift.

Every failure raised by the library derives from HeisliftError so that the
command layer can translate it into a result dictionary and an exit code.
"""


class HeisliftError(Exception):
    """Base class for all heislift errors."""


class InvalidPoint(HeisliftError):
    """A point violates its type invariant (non-finite coordinates, or z = 0 on the star group)."""


class NonFiniteDerivative(HeisliftError):
    """A difference quotient overflowed or the function was not finite on the stencil."""


class SingularDenominator(HeisliftError):
    """The SU(1,1) denominator ic*zeta + d vanished."""


class TooFewSamples(HeisliftError):
    """A curve has fewer nodes than the derivative stencil needs."""


class NotHorizontal(HeisliftError):
    """The horizontality defect of a curve exceeds the tolerance."""


class LeftHalfPlaneViolation(InvalidPoint):
    """A point expected in the left half-plane has Re >= 0."""


class NotClosed(HeisliftError):
    """A curve expected to be closed has mismatched endpoints."""


class ZeroImage(HeisliftError):
    """The first component of a map vanished at the evaluation point."""


class OrientationReversed(HeisliftError):
    """A contact multiplier or Jacobian that should be positive is not."""


class DegenerateMap(HeisliftError):
    """The map is not quasiconformal at the point (lambda_2 <= 0 or Z f_I = 0)."""


class QuadratureNonConvergence(HeisliftError):
    """Adaptive quadrature reached its maximum depth without meeting the tolerance."""


class NotSymplectic(HeisliftError):
    """A planar map failed the symplectic gate."""


class DeterminantViolation(HeisliftError):
    """SU(1,1) parameters do not satisfy ad + bc = 1."""


class DomainViolation(HeisliftError):
    """A catalog map was evaluated outside its domain."""


class MalformedCurveFile(HeisliftError):
    """A curve file could not be parsed."""


class UnknownCatalogEntry(HeisliftError):
    """A map specification names an entry the catalog does not know."""
