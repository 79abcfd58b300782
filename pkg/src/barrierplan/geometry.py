"""Line geometry in the plane and in (alpha, p) representation space.

A line is stored as a point ``(alpha, p)`` with ``alpha`` in ``[0, pi)`` and
``p`` signed, such that the line is the solution set of

    x * cos(alpha) + y * sin(alpha) = p

All distances are kilometres, angles radians.  The normal form above is used
for every distance/membership computation because slope-based formulas blow
up for vertical and horizontal lines.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class Position:
    """Planar point: easting/northing in km."""

    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"non-finite position ({self.x}, {self.y})")


@dataclass(frozen=True)
class ReprPoint:
    """A line, encoded as normal angle ``alpha`` [rad] and signed offset ``p`` [km]."""

    alpha: float
    p: float

    def __post_init__(self):
        if not (math.isfinite(self.alpha) and math.isfinite(self.p)):
            raise ValueError(f"non-finite line parameters ({self.alpha}, {self.p})")


@dataclass(frozen=True)
class Disc:
    """Closed disc region; the convex set that target trajectories cross."""

    center: Position
    radius: float

    def __post_init__(self):
        if not (math.isfinite(self.radius) and self.radius > 0):
            raise ValueError(f"disc radius must be positive, got {self.radius}")

    def contains(self, pos: Position) -> bool:
        return math.hypot(pos.x - self.center.x, pos.y - self.center.y) <= self.radius


@dataclass(frozen=True)
class ReprWindow:
    """Axis-aligned box in representation space holding every line of interest.

    ``alpha_range`` is always the half-open ``[0, pi)``; ``p_range`` is the
    closed symmetric interval ``[-p_max, p_max]``.
    """

    p_max: float

    def __post_init__(self):
        if not (math.isfinite(self.p_max) and self.p_max > 0):
            raise ValueError(f"p_max must be positive, got {self.p_max}")

    @property
    def alpha_range(self) -> tuple[float, float]:
        return (0.0, math.pi)

    @property
    def p_range(self) -> tuple[float, float]:
        return (-self.p_max, self.p_max)

    def contains(self, line: ReprPoint) -> bool:
        return 0.0 <= line.alpha < math.pi and -self.p_max <= line.p <= self.p_max


def canonicalize(alpha: float, p: float) -> ReprPoint:
    """Reduce (alpha, p) to the canonical representative with alpha in [0, pi).

    Shifting alpha by pi flips the normal vector, so p changes sign once per
    pi-reduction; the returned point describes the same solution set.
    """
    if not (math.isfinite(alpha) and math.isfinite(p)):
        raise ValueError(f"non-finite line parameters ({alpha}, {p})")
    k = math.floor(alpha / math.pi)
    a = alpha - k * math.pi
    # Rounding guards: keep the result strictly inside [0, pi).
    if a >= math.pi:
        a -= math.pi
        k += 1
    if a < 0.0:
        a += math.pi
        k -= 1
    if a == math.pi:  # can only happen through the += above when a was -0.0
        a = 0.0
        k += 1
    return ReprPoint(a, p if k % 2 == 0 else -p)


def line_from_slope_intercept(m: float, b: float) -> ReprPoint:
    """Map a non-vertical line y = m*x + b to representation space."""
    if not (math.isfinite(m) and math.isfinite(b)):
        raise ValueError(f"non-finite slope/intercept ({m}, {b})")
    # arctan lands in (-pi/2, pi/2), so alpha is already inside (0, pi).
    return ReprPoint(0.5 * math.pi + math.atan(m), b / math.sqrt(1.0 + m * m))


def vertical_line(x0: float) -> ReprPoint:
    """Map the vertical line x = x0; p is signed by which half-plane it sits in."""
    if not math.isfinite(x0):
        raise ValueError(f"non-finite abscissa {x0}")
    return ReprPoint(0.0, x0)


def to_slope_intercept(line: ReprPoint) -> tuple[float, float]:
    """Invert to (slope, intercept); raises for vertical lines (alpha == 0)."""
    if line.alpha == 0.0:
        raise ValueError("vertical line has no slope/intercept form")
    m = math.tan(line.alpha - 0.5 * math.pi)
    # sin(alpha) > 0 on (0, pi), so sqrt(1 + m^2) == 1 / sin(alpha).
    return m, line.p * math.sqrt(1.0 + m * m)


def point_line_distance(a: Position, line: ReprPoint) -> float:
    """Shortest distance from point ``a`` to the line, in km."""
    return abs(line.p - (a.x * math.cos(line.alpha) + a.y * math.sin(line.alpha)))


def foot_of_perpendicular(a: Position, line: ReprPoint) -> Position:
    """The point on the line closest to ``a``."""
    c, s = math.cos(line.alpha), math.sin(line.alpha)
    t = line.p - (a.x * c + a.y * s)
    return Position(a.x + t * c, a.y + t * s)


def line_from_two_points(p1: Position, p2: Position) -> ReprPoint:
    """Canonical line through two distinct points."""
    dx, dy = p2.x - p1.x, p2.y - p1.y
    norm = math.hypot(dx, dy)
    if norm == 0.0:
        raise ValueError(f"coincident points ({p1.x}, {p1.y})")
    # Normal is the direction rotated by +90 degrees.
    nx, ny = -dy / norm, dx / norm
    return canonicalize(math.atan2(ny, nx), p1.x * nx + p1.y * ny)


def line_intersects_disc(line: ReprPoint, disc: Disc) -> bool:
    """True when the line meets the closed disc (tangency counts as crossing)."""
    return point_line_distance(disc.center, line) <= disc.radius


def repr_window_for_disc(disc: Disc) -> ReprWindow:
    """Representation-space window containing every line that crosses the disc.

    The disc must be centred at the origin (translate coordinates first);
    the image of its crossing lines is then exactly [0, pi) x [-r, r].
    """
    if disc.center.x != 0.0 or disc.center.y != 0.0:
        raise ValueError(
            f"disc must be origin-centred, got centre ({disc.center.x}, {disc.center.y})"
        )
    return ReprWindow(p_max=disc.radius)
