"""Bidirectional codec between continuous end-effector controls and the
7-integer discrete actions exchanged with the LLM.

Translation uses uniform voxel binning over an axis-aligned workspace box
(floor-binned on encode, cell centers on decode). Rotation uses fixed-width
Euler-angle bins on a [-180, 180) degree grid: encoding snaps to the nearest
grid point, decoding returns the grid point itself, so the round-trip error is
at most half a bin away from the wrap boundary. Euler angles are extrinsic
rotations about the fixed x, then y, then z axes (roll, pitch, yaw).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import IndexOutOfRange, NonUnitQuaternion

Vec3 = tuple[float, float, float]
Quat = tuple[float, float, float, float]  # (w, x, y, z)

EULER_CONVENTION = "extrinsic-xyz"


@dataclass(frozen=True)
class WorkspaceBounds:
    b_min: Vec3
    b_max: Vec3

    def __post_init__(self):
        if not all(lo < hi for lo, hi in zip(self.b_min, self.b_max)):
            raise ValueError(f"bounds must satisfy b_min < b_max: {self}")


DEFAULT_BOUNDS = WorkspaceBounds((-0.5, -0.5, 0.0), (0.5, 0.5, 1.0))


@dataclass(frozen=True)
class CodecConfig:
    bins_per_axis: int = 100
    angle_resolution_deg: float = 5.0
    bounds: WorkspaceBounds = DEFAULT_BOUNDS
    euler_convention: str = EULER_CONVENTION

    def __post_init__(self):
        if self.bins_per_axis < 2:
            raise ValueError("bins_per_axis must be >= 2")
        if 360.0 % self.angle_resolution_deg != 0.0:
            raise ValueError("angle_resolution_deg must divide 360 evenly")

    @property
    def rotation_bins(self) -> int:
        return int(360.0 // self.angle_resolution_deg)

    @property
    def resolution(self) -> Vec3:
        v = self.bins_per_axis
        return tuple(
            (hi - lo) / v for lo, hi in zip(self.bounds.b_min, self.bounds.b_max)
        )

    def to_dict(self) -> dict:
        return {
            "bins_per_axis": self.bins_per_axis,
            "angle_resolution_deg": self.angle_resolution_deg,
            "bounds": {"min": list(self.bounds.b_min), "max": list(self.bounds.b_max)},
            "euler_convention": self.euler_convention,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "CodecConfig":
        bounds = DEFAULT_BOUNDS
        if "bounds" in d:
            bounds = WorkspaceBounds(tuple(d["bounds"]["min"]), tuple(d["bounds"]["max"]))
        return cls(
            bins_per_axis=int(d.get("bins_per_axis", 100)),
            angle_resolution_deg=float(d.get("angle_resolution_deg", 5.0)),
            bounds=bounds,
            euler_convention=d.get("euler_convention", EULER_CONVENTION),
        )


@dataclass(frozen=True)
class ContinuousControl:
    p: Vec3
    q: Quat
    g: int


@dataclass(frozen=True)
class DiscreteAction:
    i: tuple[int, int, int]
    k: tuple[int, int, int]
    g: int

    def as_list(self) -> list[int]:
        return [*self.i, *self.k, self.g]

    def text(self) -> str:
        """LLM-facing form: ``[ix, iy, iz, ir, ip, iyaw, g]``."""
        return "[" + ", ".join(str(v) for v in self.as_list()) + "]"

    @classmethod
    def from_list(cls, values) -> "DiscreteAction":
        values = [int(v) for v in values]
        if len(values) != 7:
            raise ValueError(f"need 7 integers, got {len(values)}")
        return cls(tuple(values[0:3]), tuple(values[3:6]), values[6])


def _clip(v: int, lo: int, hi: int) -> int:
    return lo if v < lo else hi if v > hi else v


def wrap_degrees(theta: float) -> float:
    """Wrap an angle into [-180, 180)."""
    return (theta + 180.0) % 360.0 - 180.0


def encode_translation(p: Vec3, cfg: CodecConfig) -> tuple[int, int, int]:
    """Floor-bin a position into per-axis voxel indices, clipped in range."""
    r = cfg.resolution
    lo = cfg.bounds.b_min
    return tuple(
        _clip(math.floor((p[a] - lo[a]) / r[a]), 0, cfg.bins_per_axis - 1)
        for a in range(3)
    )


def decode_translation(i, cfg: CodecConfig) -> Vec3:
    """Map voxel indices to cell centers (strictly inside the bounds)."""
    for a in range(3):
        if not 0 <= i[a] <= cfg.bins_per_axis - 1:
            raise IndexOutOfRange(f"translation index {i[a]} on axis {a}")
    r = cfg.resolution
    lo = cfg.bounds.b_min
    return tuple(lo[a] + r[a] * i[a] + r[a] / 2.0 for a in range(3))


def encode_rotation(theta, cfg: CodecConfig) -> tuple[int, int, int]:
    """Snap wrapped Euler angles (degrees) to the nearest rotation bin."""
    d = cfg.angle_resolution_deg
    n = cfg.rotation_bins
    return tuple(
        _clip(math.floor((wrap_degrees(theta[a]) + 180.0) / d + 0.5), 0, n - 1)
        for a in range(3)
    )


def decode_rotation(k, cfg: CodecConfig) -> Vec3:
    """Bin index to its grid angle: theta = delta * k - 180 degrees."""
    n = cfg.rotation_bins
    for a in range(3):
        if not 0 <= k[a] <= n - 1:
            raise IndexOutOfRange(f"rotation bin {k[a]} on axis {a}")
    d = cfg.angle_resolution_deg
    return tuple(d * k[a] - 180.0 for a in range(3))


def quat_to_euler(q: Quat) -> Vec3:
    """Unit quaternion (w,x,y,z) to extrinsic-xyz Euler angles in degrees.

    At |pitch| = 90 the decomposition is degenerate; roll is fixed to 0 and
    yaw absorbs the remaining rotation.
    """
    norm = math.sqrt(sum(c * c for c in q))
    if abs(norm - 1.0) > 1e-6:
        raise NonUnitQuaternion(f"|q| = {norm}")
    w, x, y, z = (c / norm for c in q)

    sinp = 2.0 * (w * y - z * x)
    if abs(sinp) >= 1.0 - 1e-12:
        pitch = math.copysign(90.0, sinp)
        roll = 0.0
        yaw = wrap_degrees(math.degrees(2.0 * math.atan2(z, w)))
        return (roll, pitch, yaw)

    roll = math.atan2(2.0 * (w * x + y * z), 1.0 - 2.0 * (x * x + y * y))
    pitch = math.asin(sinp)
    yaw = math.atan2(2.0 * (w * z + x * y), 1.0 - 2.0 * (y * y + z * z))
    return tuple(wrap_degrees(math.degrees(a)) for a in (roll, pitch, yaw))


def euler_to_quat(theta) -> Quat:
    """Extrinsic-xyz Euler angles (degrees) to a unit quaternion (w,x,y,z)."""
    hr, hp, hy = (math.radians(a) / 2.0 for a in theta)
    cr, sr = math.cos(hr), math.sin(hr)
    cp, sp = math.cos(hp), math.sin(hp)
    cy, sy = math.cos(hy), math.sin(hy)
    q = (
        cr * cp * cy + sr * sp * sy,
        sr * cp * cy - cr * sp * sy,
        cr * sp * cy + sr * cp * sy,
        cr * cp * sy - sr * sp * cy,
    )
    norm = math.sqrt(sum(c * c for c in q))
    return tuple(c / norm for c in q)


def encode_action(u: ContinuousControl, cfg: CodecConfig) -> DiscreteAction:
    return DiscreteAction(
        i=encode_translation(u.p, cfg),
        k=encode_rotation(quat_to_euler(u.q), cfg),
        g=int(u.g),
    )


def decode_action(a: DiscreteAction, cfg: CodecConfig) -> ContinuousControl:
    return ContinuousControl(
        p=decode_translation(a.i, cfg),
        q=euler_to_quat(decode_rotation(a.k, cfg)),
        g=int(a.g),
    )
