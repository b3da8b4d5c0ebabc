"""Exception hierarchy shared across the package."""


class RadialDltError(Exception):
    """Base class for all errors raised by this package."""


class NonPositiveDepth(RadialDltError):
    """A point with z <= 0 was passed to a pinhole projection."""


class ObjectBehindCamera(RadialDltError):
    """A mesh vertex landed at or behind the camera plane."""


class DegenerateMesh(RadialDltError):
    """Mesh vertices are collinear or coplanar; no 3D bounding box exists."""


class MeshFormatError(RadialDltError):
    """A mesh file line could not be parsed.

    Carries the offending path and 1-based line number in the message.
    """

    def __init__(self, path, line_no, reason):
        super().__init__(f"{path}:{line_no}: {reason}")
        self.path = str(path)
        self.line_no = line_no
        self.reason = reason


class DimensionMismatch(RadialDltError):
    """Pixel-aligned inputs disagree in shape or channel count."""


class NegativeSigma(RadialDltError):
    """Noise standard deviation must be >= 0."""


class TooFewKeypoints(RadialDltError):
    """The radial-distance linear system needs at least 4 keypoints."""


class CoplanarKeypoints(RadialDltError):
    """Keypoints span only a plane; the sphere-intersection solve is ambiguous."""


class DegenerateScale(RadialDltError):
    """Homogeneous solution has a vanishing scale slot (point at infinity)."""


class InconsistentSolution(RadialDltError):
    """Recovered squared-norm slot disagrees with the recovered coordinates."""


class EmptyMask(RadialDltError):
    """Operation requires at least one in-mask pixel."""


class DegenerateConfiguration(RadialDltError):
    """Source points are coincident or collinear; rigid fit is not unique."""


class InsufficientCorrespondences(RadialDltError):
    """Fewer correspondences than the minimal sample size."""


class NoConsensus(RadialDltError):
    """RANSAC found no model reaching the minimum inlier fraction."""


class EmptyCloud(RadialDltError):
    """ICP requires nonempty source and destination clouds."""


class ShapeMismatch(RadialDltError):
    """Prediction and ground truth maps disagree in shape or mask."""


class EmptySymmetrySet(RadialDltError):
    """Symmetry-aware loss needs at least one transform."""


class EmptyInput(RadialDltError):
    """Metric requires at least one value."""


class EmptyEstimate(RadialDltError):
    """Surface-error analysis requires a nonempty estimate."""
