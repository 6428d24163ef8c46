"""Branch-point configurations on the unit sphere, stereographic charts, and
the rotation-group bookkeeping around them.

Conventions fixed here and relied on everywhere else:

* A chart at p projects from -p; z(p) = 0 and the pulled-back round metric is
  4|dz|^2 / (1+|z|^2)^2.
* The chart frame at p is the north-pole standard frame (e1, e2) = (x, y)
  parallel-transported along the great circle from the north pole to p; for p
  within 1e-6 of the south pole the transport runs along the meridian through
  (1, 0, 0).
* Tangents to configuration space are per-point complex chart velocities:
  a point moving with ambient velocity w has chart velocity
  (w.e1 + i w.e2) / 2.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import AntipodalPair, AntipodalPoint, InputError, SeparationViolation

NORTH = np.array([0.0, 0.0, 1.0])
_UNIT_TOL = 1e-12
_AXIS_TOL = 1e-6

DEFAULT_SEPARATION_FLOOR = 1e-3  # radians


def _unit(v: np.ndarray) -> np.ndarray:
    return v / np.linalg.norm(v)


def geodesic_distance(x, y) -> float:
    """Angle between unit vectors, stable near 0 and pi."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    return float(2.0 * np.arcsin(min(1.0, np.linalg.norm(x - y) / 2.0)))


def rotation_about(axis: np.ndarray, angle: float) -> np.ndarray:
    """Rodrigues rotation matrix about a unit axis."""
    a = _unit(np.asarray(axis, dtype=float))
    c, s = np.cos(angle), np.sin(angle)
    K = np.array([[0, -a[2], a[1]], [a[2], 0, -a[0]], [-a[1], a[0], 0]])
    return c * np.eye(3) + s * K + (1 - c) * np.outer(a, a)


def rotation_between(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Minimal rotation taking unit vector x to unit vector y."""
    x = _unit(np.asarray(x, dtype=float))
    y = _unit(np.asarray(y, dtype=float))
    axis = np.cross(x, y)
    n = np.linalg.norm(axis)
    if n < _AXIS_TOL:
        if np.dot(x, y) > 0:
            return np.eye(3)
        # antipodal: rotate by pi about a deterministic perpendicular
        trial = np.array([0.0, 1.0, 0.0])
        if abs(np.dot(trial, x)) > 0.9:
            trial = np.array([1.0, 0.0, 0.0])
        axis = _unit(np.cross(x, trial))
        return rotation_about(axis, np.pi)
    return rotation_about(axis / n, np.arctan2(n, np.dot(x, y)))


def check_rotation(R: np.ndarray, tol: float = 1e-12) -> None:
    R = np.asarray(R, dtype=float)
    if R.shape != (3, 3):
        raise InputError("rotation must be a 3x3 matrix")
    if np.max(np.abs(R.T @ R - np.eye(3))) > tol * 100:
        raise InputError("matrix is not orthogonal")
    if abs(np.linalg.det(R) - 1.0) > tol * 100:
        raise InputError("matrix is not special orthogonal")


@dataclass(frozen=True)
class Configuration:
    """An ordered tuple of 2n distinct unit vectors (the branch points).

    Invariants are enforced at construction: unit norms to 1e-12, an even
    count >= 4 (two points allowed only for the calibration model), and all
    pairwise geodesic distances above the separation floor.
    """

    points: np.ndarray
    separation_floor: float = DEFAULT_SEPARATION_FLOOR

    def __post_init__(self):
        pts = np.ascontiguousarray(np.asarray(self.points, dtype=float))
        if pts.ndim != 2 or pts.shape[1] != 3:
            raise InputError("configuration points must be an (m, 3) array")
        m = pts.shape[0]
        if m % 2 != 0 or m < 2:
            raise InputError(f"configuration needs an even number >= 2 of points, got {m}")
        norms = np.linalg.norm(pts, axis=1)
        if np.max(np.abs(norms - 1.0)) > _UNIT_TOL:
            raise InputError("configuration points must be unit vectors (|1 - |p|| <= 1e-12)")
        for i in range(m):
            for j in range(i + 1, m):
                d = geodesic_distance(pts[i], pts[j])
                if d <= self.separation_floor:
                    raise SeparationViolation(
                        f"points {i} and {j} are {d:.3e} rad apart "
                        f"(floor {self.separation_floor:.3e})"
                    )
        pts.setflags(write=False)
        object.__setattr__(self, "points", pts)

    @classmethod
    def from_points(cls, points, separation_floor: float = DEFAULT_SEPARATION_FLOOR,
                    normalize: bool = True) -> "Configuration":
        pts = np.asarray(points, dtype=float).copy()
        if normalize:
            n = np.linalg.norm(pts, axis=1, keepdims=True)
            if np.any(n == 0):
                raise InputError("zero vector cannot be normalized to the sphere")
            pts = pts / n
        return cls(pts, separation_floor)

    @property
    def count(self) -> int:
        return self.points.shape[0]

    @property
    def n(self) -> int:
        return self.count // 2

    def rotated(self, R: np.ndarray) -> "Configuration":
        return Configuration(self.points @ np.asarray(R, dtype=float).T, self.separation_floor)

    def min_pairwise_distance(self) -> float:
        m = self.count
        return min(
            geodesic_distance(self.points[i], self.points[j])
            for i in range(m) for j in range(i + 1, m)
        )


@dataclass(frozen=True)
class StereoChart:
    """Stereographic chart: center p, projection from -p, frame (e1, e2) fixing
    the phase of z. The frame satisfies e1 x e2 = p."""

    center: np.ndarray
    e1: np.ndarray
    e2: np.ndarray

    @classmethod
    def at_point(cls, p) -> "StereoChart":
        p = _unit(np.asarray(p, dtype=float))
        cross = np.cross(NORTH, p)
        n = np.linalg.norm(cross)
        if n >= _AXIS_TOL:
            axis = cross / n
        else:
            axis = np.array([0.0, 1.0, 0.0])  # meridian through (1,0,0)
        angle = np.arctan2(n, np.dot(NORTH, p))
        R = rotation_about(axis, angle)
        e1 = R @ np.array([1.0, 0.0, 0.0])
        e2 = R @ np.array([0.0, 1.0, 0.0])
        # snap exactly onto the tangent plane to kill transport round-off
        e1 = _unit(e1 - np.dot(e1, p) * p)
        e2 = _unit(e2 - np.dot(e2, p) * p - np.dot(e2, e1) * e1)
        for arr in (p, e1, e2):
            arr.setflags(write=False)
        return cls(p, e1, e2)

    def rotated_frame(self, alpha: float) -> "StereoChart":
        """Same center, frame rotated by alpha in the tangent plane."""
        c, s = np.cos(alpha), np.sin(alpha)
        return StereoChart(self.center, c * self.e1 + s * self.e2,
                           -s * self.e1 + c * self.e2)


def chart_project(chart: StereoChart, x) -> complex:
    """Chart coordinate of x; raises AntipodalPoint at the projection point."""
    x = np.asarray(x, dtype=float)
    denom = 1.0 + np.dot(x, chart.center)
    if denom < 1e-12:
        raise AntipodalPoint("point is antipodal to the chart center")
    return complex(np.dot(x, chart.e1) / denom, np.dot(x, chart.e2) / denom)


def chart_project_many(chart: StereoChart, xs: np.ndarray) -> np.ndarray:
    xs = np.asarray(xs, dtype=float)
    denom = 1.0 + xs @ chart.center
    if np.any(denom < 1e-12):
        raise AntipodalPoint("a point is antipodal to the chart center")
    return (xs @ chart.e1 + 1j * (xs @ chart.e2)) / denom


def chart_unproject(chart: StereoChart, z: complex) -> np.ndarray:
    """Inverse chart map; |z| -> infinity approaches -center."""
    z = complex(z)
    r2 = z.real * z.real + z.imag * z.imag
    return (2 * z.real * chart.e1 + 2 * z.imag * chart.e2
            + (1.0 - r2) * chart.center) / (1.0 + r2)


def chart_point_distance(chart: StereoChart, r_chart: float) -> float:
    """Geodesic distance from the chart center at chart radius r."""
    return 2.0 * np.arctan(r_chart)


def geodesic_to_chart_radius(d: float) -> float:
    return np.tan(d / 2.0)


def charts_of(p: Configuration) -> list[StereoChart]:
    return [StereoChart.at_point(q) for q in p.points]


def tangent_to_ambient(p: Configuration, v: np.ndarray) -> np.ndarray:
    """Complex chart velocities -> (2n, 3) ambient tangent vectors."""
    v = np.asarray(v, dtype=complex)
    if v.shape != (p.count,):
        raise InputError(f"tangent must have length {p.count}")
    out = np.empty((p.count, 3))
    for j, chart in enumerate(charts_of(p)):
        out[j] = 2.0 * (v[j].real * chart.e1 + v[j].imag * chart.e2)
    return out


def tangent_from_ambient(p: Configuration, w: np.ndarray) -> np.ndarray:
    """(2n, 3) ambient tangent vectors -> complex chart velocities."""
    w = np.asarray(w, dtype=float)
    out = np.empty(p.count, dtype=complex)
    for j, chart in enumerate(charts_of(p)):
        out[j] = complex(np.dot(w[j], chart.e1), np.dot(w[j], chart.e2)) / 2.0
    return out


def gauge_fix(p: Configuration) -> tuple[np.ndarray, Configuration]:
    """Unique rotation R with R p1 = north pole and R p2 in {y=0, x>0}."""
    p1, p2 = p.points[0], p.points[1]
    if geodesic_distance(p1, -p2) < 1e-10:
        raise AntipodalPair("first two points are antipodal; azimuth is undefined")
    R1 = rotation_between(p1, NORTH)
    q2 = R1 @ p2
    az = np.arctan2(q2[1], q2[0])
    R = rotation_about(NORTH, -az) @ R1
    return R, p.rotated(R)


def rotation_generators(p: Configuration) -> np.ndarray:
    """Chart velocities of the three coordinate-axis rotations, shape (3, 2n)."""
    gens = np.empty((3, p.count), dtype=complex)
    axes = np.eye(3)
    charts = charts_of(p)
    for i in range(3):
        for j in range(p.count):
            w = np.cross(axes[i], p.points[j])
            gens[i, j] = complex(np.dot(w, charts[j].e1), np.dot(w, charts[j].e2)) / 2.0
    return gens


def exp_step(p: Configuration, v: np.ndarray, t: float) -> Configuration:
    """Move every point along its great-circle geodesic with chart velocity v_j.

    Raises SeparationViolation if the result crowds below the floor.
    """
    w = tangent_to_ambient(p, v)
    pts = np.empty_like(p.points)
    for j in range(p.count):
        speed = np.linalg.norm(w[j])
        if speed * abs(t) < 1e-300:
            pts[j] = p.points[j]
            continue
        direction = w[j] / speed
        ang = speed * t
        pts[j] = np.cos(ang) * p.points[j] + np.sin(ang) * direction
        pts[j] /= np.linalg.norm(pts[j])
    return Configuration(pts, p.separation_floor)


def frame_transport_phase(R: np.ndarray, p_point: np.ndarray) -> complex:
    """Unit complex number relating R applied to the frame at p to the
    conventional frame at R p. Multiplying chart quantities at p by this phase
    expresses them in the chart at R p."""
    chart_p = StereoChart.at_point(p_point)
    chart_q = StereoChart.at_point(np.asarray(R, dtype=float) @ p_point)
    moved_e1 = np.asarray(R, dtype=float) @ chart_p.e1
    return complex(np.dot(moved_e1, chart_q.e1), np.dot(moved_e1, chart_q.e2))


def read_points(path, separation_floor: float = DEFAULT_SEPARATION_FLOOR) -> Configuration:
    """Read a configuration text file: one point per line, three floats,
    '#' comments. Points are normalized to unit length."""
    rows = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.replace(",", " ").split()
            if len(parts) != 3:
                raise InputError(f"{path}:{lineno}: expected three floats, got {raw.strip()!r}")
            try:
                rows.append([float(x) for x in parts])
            except ValueError as exc:
                raise InputError(f"{path}:{lineno}: {exc}") from exc
    if not rows:
        raise InputError(f"{path}: no points found")
    return Configuration.from_points(np.array(rows), separation_floor, normalize=True)


def write_points(path, p: Configuration) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("# one unit vector per line\n")
        for q in p.points:
            fh.write(f"{q[0]:.17g} {q[1]:.17g} {q[2]:.17g}\n")


# Reference configurations -------------------------------------------------

def tetrahedron() -> Configuration:
    """Regular tetrahedron, first vertex at the north pole, second on the
    x > 0 meridian (already gauge fixed)."""
    c = -1.0 / 3.0
    s = np.sqrt(1.0 - c * c)
    pts = [[0.0, 0.0, 1.0]]
    for k in range(3):
        az = 2.0 * np.pi * k / 3.0
        pts.append([s * np.cos(az), s * np.sin(az), c])
    return Configuration.from_points(np.array(pts))


def antipodal_pair() -> Configuration:
    return Configuration.from_points(np.array([[0.0, 0.0, 1.0], [0.0, 0.0, -1.0]]))


def two_points(separation: float) -> Configuration:
    """Two points on the x-z meridian at the given geodesic separation."""
    half = separation / 2.0
    pts = np.array([
        [np.sin(half), 0.0, np.cos(half)],
        [-np.sin(half), 0.0, np.cos(half)],
    ])
    return Configuration.from_points(pts)


def random_configuration(count: int, rng: np.random.Generator,
                         min_separation: float = 0.35) -> Configuration:
    """Uniform points resampled until the pairwise floor holds."""
    for _ in range(500):
        pts = rng.standard_normal((count, 3))
        pts /= np.linalg.norm(pts, axis=1, keepdims=True)
        try:
            return Configuration(pts, min_separation)
        except SeparationViolation:
            continue
    raise SeparationViolation("could not draw a well-separated configuration")
