"""Exception and warning types shared across the package."""

from __future__ import annotations


class GahLabError(Exception):
    """Base class for all library errors."""


class DegenerateParameter(GahLabError):
    """A parameter value makes the requested operation undefined (e.g. b = 0)."""


class OrbitDiverged(GahLabError):
    """An orbit left the configured escape radius.

    Attributes
    ----------
    step : int
        1-based iterate index at which escape was detected.
    point : tuple
        The escaping iterate.
    """

    def __init__(self, step, point):
        self.step = int(step)
        self.point = tuple(float(c) for c in point)
        super().__init__(f"orbit escaped at iterate {self.step}: {self.point}")


class SingularLocus(GahLabError):
    """The map is not differentiable at the requested point."""


class OnSingularLocus(SingularLocus):
    """A fixed point lies on the non-smooth locus and cannot be classified."""


class GeometryError(GahLabError):
    """A geometric construction cannot be carried out (e.g. the folded image
    does not fit inside the target rectangle)."""


class OutsideImage(GahLabError):
    """A partial inverse was queried outside the image of the map."""


class InconclusiveAtDepth(GahLabError):
    """Subdivision reached max depth with undecided cells and no witness.

    Distinct from a failed verdict: no point of the region was proven to
    escape, but containment could not be certified either.
    """

    def __init__(self, message, undecided=0, cells_checked=0, max_depth=0):
        self.undecided = int(undecided)
        self.cells_checked = int(cells_checked)
        self.max_depth = int(max_depth)
        super().__init__(message)


class MissingArchBox(GahLabError):
    """The region has no arch box S, required by this check."""


class DegenerateCloud(GahLabError):
    """A point cloud is too close to a line to fit an enclosing quadrilateral."""


class NotASaddle(GahLabError):
    """Manifold growth requires a saddle fixed point."""


class NoInverseAvailable(GahLabError):
    """The map has no registered inverse, required by this operation."""


class InsufficientPoints(GahLabError):
    """Too few points for a meaningful estimate."""


class DegenerateScales(GahLabError):
    """The requested scale range cannot support a log-log fit."""


class DimensionMismatch(GahLabError):
    """Two point clouds have different ambient dimensions."""


class ConfigError(GahLabError):
    """A run configuration is malformed or references missing files."""


class BudgetExhaustedBeforeClosure(UserWarning):
    """Informational: manifold growth hit its arc budget (or the domain
    boundary) before the curve stopped producing new geometry."""
