"""Geographic points and the small-area planar projection used everywhere.

City-scale distances are computed on an equirectangular projection:
one degree of latitude is 111320 m, one degree of longitude shrinks
by the cosine of the latitude.  Good to well under 0.1% at the size
of a metropolitan road network, which is far below the noise in the
road lengths themselves.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import CoordinateOutOfRange

METERS_PER_DEGREE = 111320.0


@dataclass(frozen=True)
class GeoPoint:
    """A WGS84 coordinate in decimal degrees."""

    lat: float
    lon: float

    def __post_init__(self):
        if not (-90.0 <= self.lat <= 90.0 and -180.0 <= self.lon <= 180.0):
            raise CoordinateOutOfRange(self.lat, self.lon)


def projected_distance(a: GeoPoint, b: GeoPoint) -> float:
    """Meters between two points, using the mean latitude of the pair."""
    dy = (a.lat - b.lat) * METERS_PER_DEGREE
    mean_lat = math.radians((a.lat + b.lat) / 2.0)
    dx = (a.lon - b.lon) * METERS_PER_DEGREE * math.cos(mean_lat)
    return math.hypot(dx, dy)


def project_xy(lat: float, lon: float, ref_lat: float) -> tuple[float, float]:
    """Planar (x, y) meters for a point, with a fixed reference latitude.

    A fixed reference keeps the projected plane a true metric space, so
    straight-line distances in it obey the triangle inequality exactly.
    """
    scale = math.cos(math.radians(ref_lat))
    return lon * METERS_PER_DEGREE * scale, lat * METERS_PER_DEGREE
