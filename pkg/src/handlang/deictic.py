"""Pointing-ray resolution: object distances, target selection, table points."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .handstream import HandFrame

#: distance shaping scale for target probabilities (m)
DEFAULT_SIGMA = 0.05
#: objects farther than this from the ray are never selected (m)
DEFAULT_CUTOFF = 0.30

INDEX_FINGER = 1
DISTAL_BONE = 3


@dataclass(frozen=True, eq=False)
class Ray:
    """A pointing line through p1 and p2 (two distinct points, meters)."""

    p1: np.ndarray
    p2: np.ndarray
    source: str = "palm"  # palm | finger

    def __post_init__(self):
        object.__setattr__(self, "p1", np.asarray(self.p1, dtype=float))
        object.__setattr__(self, "p2", np.asarray(self.p2, dtype=float))
        if float(np.linalg.norm(self.p2 - self.p1)) <= 1e-9:
            raise ValueError("degenerate ray: p1 == p2")


@dataclass(frozen=True)
class TargetDistances:
    """Perpendicular ray distance and shaped probability per object."""

    distances: dict[str, float]
    probabilities: dict[str, float]
    cutoff: float = DEFAULT_CUTOFF


def ray_from_hand(frame: HandFrame, mode: str = "palm") -> Ray:
    """Pointing ray from a visible frame.

    Palm mode (default; the finger ray is high-variance on real hands) uses
    the palm position and direction; finger mode the index distal bone.
    """
    if not frame.visible:
        raise ValueError("cannot build a ray from an invisible frame")
    if mode == "palm":
        return Ray(p1=frame.palm_position,
                   p2=frame.palm_position + frame.palm_direction, source="palm")
    if mode == "finger":
        bone = frame.fingers[INDEX_FINGER, DISTAL_BONE]
        return Ray(p1=bone[0], p2=bone[1], source="finger")
    raise ValueError(f"unknown ray mode {mode!r}")


def point_line_distance(ray: Ray, point: np.ndarray) -> float:
    """Perpendicular distance from a point to the ray's infinite line.

    d^2 = |(p2 - p1) x (p1 - s)|^2 / |p2 - p1|^2
    """
    u = ray.p2 - ray.p1
    c = np.cross(u, ray.p1 - np.asarray(point, dtype=float))
    return float(math.sqrt(float(np.dot(c, c)) / float(np.dot(u, u))))


def object_distances(ray: Ray, world, *, sigma: float = DEFAULT_SIGMA,
                     cutoff: float = DEFAULT_CUTOFF) -> TargetDistances:
    """Per-object line distances with exp(-d/sigma) probability shaping.

    Objects beyond the cutoff get probability 0; when at least one object is
    in range the probabilities sum to 1. An empty world yields empty maps.
    """
    distances = {oid: point_line_distance(ray, obj.pose[:3])
                 for oid, obj in world.objects.items()}
    weights = {oid: math.exp(-d / sigma) if d <= cutoff else 0.0
               for oid, d in distances.items()}
    total = sum(weights.values())
    if total > 0.0:
        probabilities = {oid: w / total for oid, w in weights.items()}
    else:
        probabilities = {oid: 0.0 for oid in distances}
    return TargetDistances(distances=distances, probabilities=probabilities, cutoff=cutoff)


def target_object(dists: TargetDistances) -> str | None:
    """Minimal-distance object within the cutoff; ties break to the lowest id."""
    in_range = [(d, oid) for oid, d in dists.distances.items() if d <= dists.cutoff]
    if not in_range:
        return None
    return min(in_range)[1]


def table_point(ray: Ray, world) -> np.ndarray | None:
    """Ray intersection with the table plane, clipped to the workspace.

    None for rays parallel to the plane, intersections behind p1, or points
    outside the workspace rectangle.
    """
    u = ray.p2 - ray.p1
    dz = float(u[2])
    if abs(dz) < 1e-12:
        return None
    t = (world.table_height - float(ray.p1[2])) / dz
    if t < 0.0:
        return None
    hit = ray.p1 + t * u
    xmin, xmax, ymin, ymax = world.workspace
    if not (xmin <= hit[0] <= xmax and ymin <= hit[1] <= ymax):
        return None
    return hit[:2].copy()
