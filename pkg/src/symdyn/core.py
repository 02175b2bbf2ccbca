"""Canonical forms for 2x2 trace-zero symmetric and orthogonal matrices.

Every trace-zero symmetric 2x2 matrix is [[l cos t, l sin t], [l sin t, -l cos t]]
for a scale l and a matrix angle t, i.e. a scaled reflection of the plane.
Orthogonal 2x2 matrices split into rotations (det +1) and reflections (det -1).
This module constructs, decomposes and classifies both families.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

TAU = 2.0 * math.pi


class NotSymmetricError(ValueError):
    """Input matrix differs from its transpose beyond tolerance."""


class NotTraceZeroError(ValueError):
    """Input matrix has a trace that is not zero within tolerance."""


class NotOrthogonalError(ValueError):
    """Input matrix columns are not orthonormal within tolerance."""


@dataclass(frozen=True)
class Tolerance:
    """Scale-aware comparison threshold.

    x and y count as equal when |x - y| <= eps * (1 + max(|x|, |y|)),
    which behaves absolutely near zero and relatively for large values.
    """

    eps: float = 1e-9

    def __post_init__(self) -> None:
        if not (math.isfinite(self.eps) and self.eps > 0.0):
            raise ValueError("eps must be a positive finite real")

    def close(self, x: float, y: float) -> bool:
        return abs(x - y) <= self.eps * (1.0 + max(abs(x), abs(y)))


DEFAULT_TOL = Tolerance()


def mod_2pi(x: float) -> float:
    """Reduce an angle to [0, 2*pi). Idempotent on values already in range."""
    r = math.fmod(x, TAU)
    if r < 0.0:
        r += TAU
    if r >= TAU:  # the += above can round up to exactly TAU
        r = 0.0
    return r


def _canonical_params(lam: float, theta: float) -> tuple[float, float]:
    # Nonnegative scale with the sign absorbed into the angle; the zero
    # matrix pins theta = 0 so decomposition stays a function.
    if lam < 0.0:
        lam, theta = -lam, theta + math.pi
    theta = mod_2pi(theta)
    if lam == 0.0:
        theta = 0.0
    return lam, theta


@dataclass(frozen=True)
class Point2:
    """A point of the plane."""

    x: float
    y: float

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def distance_to(self, other: "Point2") -> float:
        return math.hypot(self.x - other.x, self.y - other.y)

    def as_tuple(self) -> tuple[float, float]:
        return (self.x, self.y)


ORIGIN = Point2(0.0, 0.0)


@dataclass(frozen=True)
class TraceZeroSym2:
    """Canonical (lam, theta) coordinates of a trace-zero symmetric matrix.

    lam is the nonnegative scale (the eigenvalues are +lam and -lam) and
    theta in [0, 2*pi) is the matrix angle. The fixed line of the underlying
    reflection sits at theta / 2. Construction canonicalizes: a negative
    scale flips theta by pi, and lam == 0 forces theta = 0.
    """

    lam: float
    theta: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.lam) and math.isfinite(self.theta)):
            raise ValueError("lam and theta must be finite")
        lam, theta = _canonical_params(self.lam, self.theta)
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "theta", theta)

    @property
    def axis_angle(self) -> float:
        return self.theta / 2.0

    def matrix(self) -> np.ndarray:
        return matrix_from_params(self.lam, self.theta)


class OrthogonalVariant(Enum):
    ROTATION = "Rotation"
    REFLECTION = "Reflection"


@dataclass(frozen=True)
class Orthogonal2:
    """A classified 2x2 orthogonal matrix: rotation or reflection plus angle."""

    variant: OrthogonalVariant
    angle: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.angle):
            raise ValueError("angle must be finite")
        object.__setattr__(self, "angle", mod_2pi(self.angle))

    def matrix(self) -> np.ndarray:
        c, s = math.cos(self.angle), math.sin(self.angle)
        if self.variant is OrthogonalVariant.ROTATION:
            return np.array([[c, s], [-s, c]])
        return np.array([[c, s], [s, -c]])


def matrix_from_params(lam: float, theta: float) -> np.ndarray:
    """Build [[l cos t, l sin t], [l sin t, -l cos t]] from scale and angle.

    Signs are absorbed canonically, so matrix_from_params(-l, t) returns
    bit for bit the same matrix as matrix_from_params(l, (t + pi) mod 2pi).
    The result is symmetric with trace exactly zero.
    """
    if not (math.isfinite(lam) and math.isfinite(theta)):
        raise ValueError("lam and theta must be finite")
    lam, theta = _canonical_params(lam, theta)
    a = lam * math.cos(theta)
    b = lam * math.sin(theta)
    d = -a if a != 0.0 else 0.0
    return np.array([[a, b], [b, d]])


def _as_matrix2(m) -> np.ndarray:
    arr = np.asarray(m, dtype=float)
    if arr.shape != (2, 2):
        raise ValueError("expected a 2x2 matrix")
    if not np.all(np.isfinite(arr)):
        raise ValueError("matrix entries must be finite")
    return arr


def decompose(m, tol: Tolerance = DEFAULT_TOL) -> TraceZeroSym2:
    """Recover canonical (lam, theta) from a symmetric trace-zero matrix.

    Raises NotSymmetricError / NotTraceZeroError when the input violates a
    precondition beyond tol. Matrices whose scale falls at or below tol.eps
    collapse to the canonical zero element (0, 0).
    """
    arr = _as_matrix2(m)
    if not tol.close(arr[0, 1], arr[1, 0]):
        raise NotSymmetricError(
            f"not symmetric: off-diagonal entries {arr[0, 1]} and {arr[1, 0]} differ"
        )
    trace = arr[0, 0] + arr[1, 1]
    if not tol.close(trace, 0.0):
        raise NotTraceZeroError(f"not trace zero: trace is {trace}")
    a = 0.5 * (arr[0, 0] - arr[1, 1])
    b = 0.5 * (arr[0, 1] + arr[1, 0])
    lam = math.hypot(a, b)
    if lam <= tol.eps:
        return TraceZeroSym2(0.0, 0.0)
    return TraceZeroSym2(lam, mod_2pi(math.atan2(b, a)))


def classify_orthogonal(m, tol: Tolerance = DEFAULT_TOL) -> Orthogonal2:
    """Classify an orthogonal 2x2 matrix as a rotation or a reflection.

    Rotation(a) matches [[cos a, sin a], [-sin a, cos a]] and Reflection(b)
    matches [[cos b, sin b], [sin b, -cos b]], angle in [0, 2*pi). A matrix
    whose determinant is near neither +1 nor -1 is rejected, never guessed.
    """
    arr = _as_matrix2(m)
    g = arr.T @ arr
    ok = (
        tol.close(g[0, 0], 1.0)
        and tol.close(g[1, 1], 1.0)
        and tol.close(g[0, 1], 0.0)
        and tol.close(g[1, 0], 0.0)
    )
    if not ok:
        raise NotOrthogonalError("columns are not orthonormal within tolerance")
    det = arr[0, 0] * arr[1, 1] - arr[0, 1] * arr[1, 0]
    if tol.close(det, 1.0):
        c = 0.5 * (arr[0, 0] + arr[1, 1])
        s = 0.5 * (arr[0, 1] - arr[1, 0])
        return Orthogonal2(OrthogonalVariant.ROTATION, mod_2pi(math.atan2(s, c)))
    if tol.close(det, -1.0):
        c = 0.5 * (arr[0, 0] - arr[1, 1])
        s = 0.5 * (arr[0, 1] + arr[1, 0])
        return Orthogonal2(OrthogonalVariant.REFLECTION, mod_2pi(math.atan2(s, c)))
    raise NotOrthogonalError("determinant is near neither +1 nor -1")


def corollary_witness(a: TraceZeroSym2) -> tuple[Orthogonal2, float]:
    """Factor a trace-zero symmetric matrix as scale times a det -1 orthogonal.

    The witness has eigenvalues +1 and -1 and satisfies
    a.matrix() == lam * witness.matrix() entrywise. The zero matrix gets
    the conventional witness Reflection(0), i.e. [[1, 0], [0, -1]].
    """
    if a.lam == 0.0:
        return Orthogonal2(OrthogonalVariant.REFLECTION, 0.0), 0.0
    return Orthogonal2(OrthogonalVariant.REFLECTION, a.theta), a.lam
