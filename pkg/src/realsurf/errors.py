"""Exception hierarchy.

Every rejection of user input raises a specific subclass so that callers
(and the CLI exit-code mapping) can distinguish invalid surface data,
invalid involutions, numerical failures, and internal consistency bugs.
"""

from __future__ import annotations


class RealSurfError(Exception):
    """Base class for all errors raised by this package."""


# --- surface validation ------------------------------------------------

class SurfaceValidationError(RealSurfError):
    """Raw surface description violates a structural invariant."""


class NotBipartite(SurfaceValidationError):
    pass


class NonPositiveRhoRealPart(SurfaceValidationError):
    pass


class NotStronglyRegular(SurfaceValidationError):
    pass


class FaceCycleNotAlternating(SurfaceValidationError):
    pass


class Disconnected(SurfaceValidationError):
    pass


class NonManifoldEdge(SurfaceValidationError):
    pass


# --- homology ----------------------------------------------------------

class InternalRankDeficient(RealSurfError):
    """Cycle basis construction produced a degenerate intersection form (bug)."""


class CyclesFromDifferentSurfaces(RealSurfError):
    pass


class InputNotGenerating(RealSurfError):
    """Cycles handed to symplectic reduction do not generate H_1."""


class NotInvolution(RealSurfError):
    """Integer matrix expected to square to the identity does not."""


class FixedRankNotG(RealSurfError):
    pass


class AdaptationFailed(RealSurfError):
    """Adapted-basis postconditions could not be established."""


# --- involution --------------------------------------------------------

class InvolutionError(RealSurfError):
    """Vertex map is not a valid antiholomorphic involution."""


class NotInvolutive(InvolutionError):
    pass


class NotFacePreserving(InvolutionError):
    pass


class OrientationNotReversed(InvolutionError):
    pass


class MixedColorAction(InvolutionError):
    pass


class RhoConditionViolated(InvolutionError):
    pass


class InternalComponentCount(RealSurfError):
    """Cut complex has neither one nor two components (bug)."""


# --- linear solver -----------------------------------------------------

class SolveFailed(RealSurfError):
    """Singular linear system; the surface data is inconsistent."""


class ResidualTooLarge(RealSurfError):
    pass


# --- Z2 forms ----------------------------------------------------------

class SingularP(RealSurfError):
    pass


class DimensionMismatch(RealSurfError):
    pass


class NotSymmetric(RealSurfError):
    pass


# --- generators --------------------------------------------------------

class GeneratorError(RealSurfError):
    pass


class ParameterParityInvalid(GeneratorError):
    pass


class RhoIncompatibleWithKind(GeneratorError):
    pass


class ParameterInvalid(GeneratorError):
    pass


class BoundaryNotPlanar(GeneratorError):
    pass


class PatchIntersectsMirror(GeneratorError):
    pass


class DelaunayViolated(GeneratorError):
    """Circumcenter duals requested but an edge fails the angle condition."""

    def __init__(self, message: str, edges: list | None = None):
        super().__init__(message)
        self.edges = edges or []


class DegenerateTriangle(GeneratorError):
    pass


class BoundaryNotOnCoordinatePlanes(GeneratorError):
    pass


class OriginOnSurface(GeneratorError):
    pass


# --- file parsing ------------------------------------------------------

class SurfaceFileError(RealSurfError):
    """Surface file is malformed (missing fields, wrong types)."""
