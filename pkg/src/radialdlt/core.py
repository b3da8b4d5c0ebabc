"""Core domain types: rigid poses, camera model, meshes, masks, RNG.

Conventions used throughout the package:
  * meshes, poses, depths and surface points are in meters;
  * radial maps are in decimeters (see the oracle and dlt modules for the
    only two places where the x10 conversion happens);
  * image coordinates are (u, v) with u along width and v along height,
    and integer pixel (u, v) sits exactly at continuous coordinate (u, v).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.spatial import ConvexHull
from scipy.spatial.qhull import QhullError

from .errors import NonPositiveDepth

_ORTHO_TOL = 1e-9


def _as_array(x, shape, name):
    a = np.asarray(x, dtype=np.float64)
    if a.shape != shape:
        raise ValueError(f"{name} must have shape {shape}, got {a.shape}")
    return a


@dataclass(frozen=True)
class RigidPose:
    """Rigid transform p_cam = rotation @ p_obj + translation."""

    rotation: np.ndarray
    translation: np.ndarray

    def __post_init__(self):
        r = _as_array(self.rotation, (3, 3), "rotation")
        t = _as_array(self.translation, (3,), "translation")
        err = np.abs(r.T @ r - np.eye(3)).max()
        if err > _ORTHO_TOL:
            raise ValueError(f"rotation is not orthonormal (max |R^T R - I| = {err:.3e})")
        det = np.linalg.det(r)
        if abs(det - 1.0) > _ORTHO_TOL:
            raise ValueError(f"rotation must have det +1, got {det!r}")
        r.setflags(write=False)
        t.setflags(write=False)
        object.__setattr__(self, "rotation", r)
        object.__setattr__(self, "translation", t)

    @classmethod
    def identity(cls) -> "RigidPose":
        return cls(np.eye(3), np.zeros(3))

    def apply(self, points: np.ndarray) -> np.ndarray:
        """Transform one (3,) point or an (..., 3) array of points."""
        p = np.asarray(points, dtype=np.float64)
        return p @ self.rotation.T + self.translation

    def inverse(self) -> "RigidPose":
        rt = self.rotation.T
        return RigidPose(rt, -rt @ self.translation)

    def compose(self, other: "RigidPose") -> "RigidPose":
        """self after other: (self.compose(other)).apply(p) == self.apply(other.apply(p))."""
        return RigidPose(self.rotation @ other.rotation,
                         self.rotation @ other.translation + self.translation)

    def matrix(self) -> np.ndarray:
        """4x4 homogeneous form."""
        m = np.eye(4)
        m[:3, :3] = self.rotation
        m[:3, 3] = self.translation
        return m


def transform_point(pose: RigidPose, p) -> np.ndarray:
    """rotation @ p + translation for one point or a batch."""
    return pose.apply(p)


def rotation_about_axis(axis, angle: float) -> np.ndarray:
    """Rodrigues rotation matrix for a (not necessarily unit) axis."""
    a = np.asarray(axis, dtype=np.float64)
    n = np.linalg.norm(a)
    if n == 0.0:
        raise ValueError("axis must be nonzero")
    x, y, z = a / n
    k = np.array([[0.0, -z, y], [z, 0.0, -x], [-y, x, 0.0]])
    return np.eye(3) + np.sin(angle) * k + (1.0 - np.cos(angle)) * (k @ k)


def random_rotation(rng: np.random.Generator) -> np.ndarray:
    """Uniform rotation via a normalized 4D Gaussian quaternion."""
    q = rng.standard_normal(4)
    q /= np.linalg.norm(q)
    w, x, y, z = q
    return np.array([
        [1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)],
        [2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)],
        [2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)],
    ])


def rotation_angle(r_a: np.ndarray, r_b: np.ndarray | None = None) -> float:
    """Geodesic angle (radians) between two rotations (or from identity)."""
    r = r_a if r_b is None else r_a.T @ r_b
    c = np.clip((np.trace(r) - 1.0) / 2.0, -1.0, 1.0)
    return float(np.arccos(c))


@dataclass(frozen=True)
class CameraIntrinsics:
    """Pinhole model: u = fx*x/z + cx, v = fy*y/z + cy."""

    fx: float
    fy: float
    cx: float
    cy: float
    width: int
    height: int

    def __post_init__(self):
        if self.fx <= 0 or self.fy <= 0:
            raise ValueError("focal lengths must be positive")
        if not (0 <= self.cx < self.width) or not (0 <= self.cy < self.height):
            raise ValueError("principal point must lie inside the image")


def project(intr: CameraIntrinsics, p_cam) -> tuple:
    """Project camera-frame point(s) to pixel coordinates (u, v).

    Raises NonPositiveDepth if any z <= 0.
    """
    p = np.asarray(p_cam, dtype=np.float64)
    z = p[..., 2]
    if np.any(z <= 0.0):
        raise NonPositiveDepth("projection needs z > 0")
    u = intr.fx * p[..., 0] / z + intr.cx
    v = intr.fy * p[..., 1] / z + intr.cy
    if p.ndim == 1:
        return float(u), float(v)
    return u, v


def back_project(intr: CameraIntrinsics, u, v, depth) -> np.ndarray:
    """Invert project(): pixel (u, v) at depth z back to a camera-frame point."""
    u = np.asarray(u, dtype=np.float64)
    v = np.asarray(v, dtype=np.float64)
    z = np.asarray(depth, dtype=np.float64)
    x = (u - intr.cx) * z / intr.fx
    y = (v - intr.cy) * z / intr.fy
    return np.stack([x, y, np.broadcast_to(z, x.shape)], axis=-1)


@dataclass(frozen=True)
class SegMask:
    """Boolean foreground mask, shape (height, width)."""

    width: int
    height: int
    bits: np.ndarray

    def __post_init__(self):
        b = np.asarray(self.bits, dtype=bool)
        if b.shape != (self.height, self.width):
            raise ValueError(f"mask bits must be (H, W) = ({self.height}, {self.width}), got {b.shape}")
        b.setflags(write=False)
        object.__setattr__(self, "bits", b)

    @classmethod
    def from_bits(cls, bits: np.ndarray) -> "SegMask":
        bits = np.asarray(bits, dtype=bool)
        return cls(width=bits.shape[1], height=bits.shape[0], bits=bits)

    def count(self) -> int:
        return int(self.bits.sum())


@dataclass(frozen=True)
class SymmetrySet:
    """Discrete pose symmetries: pure rotations, identity always first."""

    transforms: tuple

    def __post_init__(self):
        ts = tuple(self.transforms)
        if not ts:
            raise ValueError("symmetry set must contain at least the identity")
        for i, t in enumerate(ts):
            if not isinstance(t, RigidPose):
                raise TypeError("symmetry transforms must be RigidPose instances")
            if np.abs(t.translation).max() > _ORTHO_TOL:
                raise ValueError(f"symmetry transform {i} must have zero translation")
        if np.abs(ts[0].rotation - np.eye(3)).max() > _ORTHO_TOL:
            raise ValueError("symmetry transform 0 must be the identity")
        object.__setattr__(self, "transforms", ts)

    @classmethod
    def identity_only(cls) -> "SymmetrySet":
        return cls((RigidPose.identity(),))

    @classmethod
    def from_rotations(cls, rotations) -> "SymmetrySet":
        """Build from extra rotation matrices; identity is prepended."""
        ts = [RigidPose.identity()]
        ts += [RigidPose(np.asarray(r, dtype=np.float64), np.zeros(3)) for r in rotations]
        return cls(tuple(ts))

    def __iter__(self):
        return iter(self.transforms)

    def __len__(self):
        return len(self.transforms)


def _max_pairwise_distance(points: np.ndarray, block: int = 512) -> float:
    best = 0.0
    n = len(points)
    for i in range(0, n, block):
        chunk = points[i:i + block]
        d2 = ((chunk[:, None, :] - points[None, :, :]) ** 2).sum(axis=2)
        m = d2.max()
        if m > best:
            best = m
    return float(np.sqrt(best))


@dataclass(frozen=True)
class TriangleMesh:
    """Triangle mesh in meters. `diameter` is the max pairwise vertex distance.

    For meshes with at most 5000 vertices the diameter is exact; above that
    it is computed from the convex hull (still exact when the hull exists)
    or from a strided vertex subset as a fallback.
    """

    vertices: np.ndarray
    triangles: np.ndarray
    diameter: float = field(default=0.0)

    def __post_init__(self):
        v = np.asarray(self.vertices, dtype=np.float64)
        t = np.asarray(self.triangles, dtype=np.int64)
        if v.ndim != 2 or v.shape[1] != 3:
            raise ValueError(f"vertices must be (N, 3), got {v.shape}")
        if not np.isfinite(v).all():
            raise ValueError("vertices must be finite")
        if t.size and (t.ndim != 2 or t.shape[1] != 3):
            raise ValueError(f"triangles must be (M, 3), got {t.shape}")
        if t.size == 0:
            t = t.reshape(0, 3)
        if t.size and (t.min() < 0 or t.max() >= len(v)):
            raise ValueError("triangle index out of range")
        v.setflags(write=False)
        t.setflags(write=False)
        object.__setattr__(self, "vertices", v)
        object.__setattr__(self, "triangles", t)
        if self.diameter == 0.0:
            object.__setattr__(self, "diameter", _mesh_diameter(v))

    def aabb(self) -> tuple:
        return self.vertices.min(axis=0), self.vertices.max(axis=0)


def _mesh_diameter(vertices: np.ndarray) -> float:
    n = len(vertices)
    if n < 2:
        return 0.0
    try:
        hull = ConvexHull(vertices)
        pts = vertices[hull.vertices]
    except QhullError:
        # flat or collinear vertex set; fall back to direct pairs
        pts = vertices if n <= 5000 else vertices[:: max(1, n // 5000)]
    return _max_pairwise_distance(pts)


def seeded_rng(seed: int, stream: int = 0) -> np.random.Generator:
    """Deterministic generator: counter-based Philox keyed by (seed, stream).

    Same (seed, stream) yields the same draw sequence on every platform and
    run for a given numpy version. Separate streams are independent.
    """
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(seed, spawn_key=(stream,))))
