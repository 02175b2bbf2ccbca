"""Orbits, powers, convergence, and stable sets of the reflect-then-scale map.

Everything here rides on two exact facts: the square of a reflection is the
identity, so the n-th power of the map is lam**n times either the identity
(n even) or the reflection itself (n odd); and the map scales every pairwise
distance by |lam| per step. The classifiers below are closed-form consequences,
and the orbit iterator cross-checks them empirically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from itertools import chain

import numpy as np

from .core import DEFAULT_TOL, Point2, Tolerance
from .geometry import ReflectScale, apply_T, point_on_line, point_on_perpendicular


@dataclass(frozen=True)
class Finite:
    """An orbit with exactly `size` distinct points."""

    size: int


@dataclass(frozen=True)
class Infinite:
    """An orbit with infinitely many distinct points."""


class Topology(Enum):
    DISCRETE = "Discrete"
    USUAL = "Usual"


@dataclass(frozen=True)
class ConvergesTo:
    limit: Point2


@dataclass(frozen=True)
class NotConvergent:
    pass


@dataclass(frozen=True)
class DivergesToInfinity:
    pass


@dataclass(frozen=True)
class ConvergenceVerdict:
    topology: Topology
    verdict: ConvergesTo | NotConvergent | DivergesToInfinity


class StableSet(Enum):
    WHOLE_PLANE = "WholePlane"
    SINGLETON_SELF = "SingletonSelf"


@dataclass(frozen=True)
class OrbitRecord:
    """Trace of iterating a reflect-then-scale map from a start point.

    points[0] is the start and points[n + 1] = apply_T(map, points[n]).
    cardinality is the empirical distinct-point count when a revisit was
    observed, otherwise the closed-form classification.
    """

    start: Point2
    map: ReflectScale
    points: tuple[Point2, ...]
    cardinality: Finite | Infinite
    truncated_at: int


def _is_origin(p: Point2, tol: Tolerance) -> bool:
    return tol.close(p.norm(), 0.0)


def power_T(m: ReflectScale, n: int) -> np.ndarray:
    """n-th power of the map as a matrix, in closed form.

    lam**n times the identity for even n, lam**n times the unit reflection
    for odd n.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    scale = m.lam ** n
    if n % 2 == 0:
        return scale * np.eye(2)
    t = 2.0 * m.axis.phi
    c, s = math.cos(t), math.sin(t)
    return scale * np.array([[c, s], [s, -c]])


def is_power_identity(lam: float, n: int, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Whether the n-th power of the map with scale lam is the identity.

    Holds exactly when n is even and lam is 1 or -1 (within tol); an odd
    power is never the identity because the reflection itself is not.
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    return n % 2 == 0 and (tol.close(lam, 1.0) or tol.close(lam, -1.0))


def classify_orbit_cardinality(
    p: Point2, m: ReflectScale, tol: Tolerance = DEFAULT_TOL
) -> Finite | Infinite:
    """Closed-form orbit size: Finite(1), Finite(2), or Infinite.

    The origin is always a fixed point. For lam = 0 everything collapses to
    the origin after one step. For lam = 1 points on the axis are fixed and
    everything else alternates between two points. lam = -1 is itself a
    reflection across the perpendicular axis, so points on that line are
    fixed and everything else alternates. Any other nonzero scale gives
    pairwise-distinct iterates. All membership tests are within tol.
    """
    if _is_origin(p, tol):
        return Finite(1)
    lam = m.lam
    if tol.close(lam, 0.0):
        return Finite(2)
    if tol.close(lam, 1.0):
        return Finite(1) if point_on_line(p, m.axis, tol) else Finite(2)
    if tol.close(lam, -1.0):
        return Finite(1) if point_on_perpendicular(p, m.axis, tol) else Finite(2)
    return Infinite()


_SCAN_WINDOW = 64


def orbit(
    p: Point2, m: ReflectScale, max_iter: int, tol: Tolerance = DEFAULT_TOL
) -> OrbitRecord:
    """Iterate the map max_iter times from p, recording every point.

    A revisit is a new point within eps * max(|new|, |old|) of an earlier
    one; the radius scales with the points themselves so that contracting
    or expanding orbits never alias. With a revisit observed the empirical
    distinct count is reported; otherwise the closed-form classification
    is authoritative.

    Short traces are scanned against the full history; long ones against
    the first and the most recent window of points, which keeps million
    step traces linear while still catching any cycle far shorter than the
    window (true cycles here have period at most 2).
    """
    if max_iter < 1:
        raise ValueError("max_iter must be a positive integer")
    eps = tol.eps
    xs = [p.x]
    ys = [p.y]
    norms = [p.norm()]
    distinct = 1
    revisit = False
    cur = p
    for _ in range(max_iter):
        cur = apply_T(m, cur)
        cx, cy = cur.x, cur.y
        nrm = math.hypot(cx, cy)
        count = len(xs)
        if count <= 2 * _SCAN_WINDOW:
            candidates = range(count)
        else:
            candidates = chain(range(_SCAN_WINDOW), range(count - _SCAN_WINDOW, count))
        hit = False
        for j in candidates:
            dx = cx - xs[j]
            dy = cy - ys[j]
            rad = eps * (norms[j] if norms[j] > nrm else nrm)
            if dx * dx + dy * dy <= rad * rad:
                hit = True
                break
        if hit:
            revisit = True
        else:
            distinct += 1
        xs.append(cx)
        ys.append(cy)
        norms.append(nrm)
    points = tuple(Point2(x, y) for x, y in zip(xs, ys))
    card: Finite | Infinite
    if revisit:
        card = Finite(distinct)
    else:
        card = classify_orbit_cardinality(p, m, tol)
    return OrbitRecord(start=p, map=m, points=points, cardinality=card, truncated_at=max_iter)


def classify_convergence(
    p: Point2, m: ReflectScale, topology: Topology, tol: Tolerance = DEFAULT_TOL
) -> ConvergenceVerdict:
    """Convergence verdict for the iterate sequence starting at p.

    In the discrete topology only eventually constant sequences converge:
    the origin, any point when lam = 0, points on the axis when lam = 1,
    and points on the perpendicular axis when lam = -1 (that map is itself
    a reflection fixing that line). In the usual topology those cases are
    joined by |lam| < 1, which contracts everything to the origin; |lam| = 1
    otherwise oscillates on a circle, and |lam| > 1 blows up. Membership
    and scale comparisons are within tol.
    """
    origin = Point2(0.0, 0.0)
    lam = m.lam
    verdict: ConvergesTo | NotConvergent | DivergesToInfinity
    if _is_origin(p, tol):
        verdict = ConvergesTo(origin)
    elif tol.close(lam, 0.0):
        verdict = ConvergesTo(origin)
    elif tol.close(lam, 1.0) and point_on_line(p, m.axis, tol):
        verdict = ConvergesTo(p)
    elif tol.close(lam, -1.0) and point_on_perpendicular(p, m.axis, tol):
        verdict = ConvergesTo(p)
    elif topology is Topology.DISCRETE:
        verdict = NotConvergent()
    elif tol.close(abs(lam), 1.0):
        verdict = NotConvergent()
    elif abs(lam) < 1.0:
        verdict = ConvergesTo(origin)
    else:
        verdict = DivergesToInfinity()
    return ConvergenceVerdict(topology=topology, verdict=verdict)


def distance_after_n(p: Point2, q: Point2, lam: float, n: int) -> float:
    """Distance between the n-th images of p and q: |lam|**n * d(p, q).

    Exact for any reflection axis, since each step is an isometry followed
    by scaling.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return abs(lam) ** n * p.distance_to(q)


def is_forward_asymptotic(
    p: Point2, q: Point2, lam: float, tol: Tolerance = DEFAULT_TOL
) -> bool:
    """Whether the iterates of p and q approach each other.

    The distance after n steps is |lam|**n * d(p, q), so this holds exactly
    when |lam| < 1 or the points coincide within tol.
    """
    if abs(lam) < 1.0:
        return True
    return p.distance_to(q) <= tol.eps * (1.0 + max(p.norm(), q.norm()))


def stable_set(p: Point2, lam: float) -> StableSet:
    """Which points are forward asymptotic to p: the whole plane or only p.

    Decided by |lam| alone, independent of p and of the reflection axis.
    """
    return StableSet.WHOLE_PLANE if abs(lam) < 1.0 else StableSet.SINGLETON_SELF


def cauchy_bound(p: Point2, lam: float, n: int, m: int) -> float:
    """Upper bound (|lam|**n + |lam|**m) * |p| on d(image_n, image_m).

    Comes from the triangle inequality through the origin together with the
    exact iterate norm |lam|**k * |p|.
    """
    if n < 0 or m < 0:
        raise ValueError("n and m must be nonnegative")
    a = abs(lam)
    return (a ** n + a ** m) * p.norm()


def distance_to_origin_after_n(p: Point2, lam: float, n: int) -> float:
    """Norm of the n-th image of p: |lam|**n * |p|, for any axis."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return abs(lam) ** n * p.norm()
