"""Parsing and emitting Google Maps directions URLs.

Accepted input is any URL whose path has a `dir` segment followed by
`lat,lon` waypoints, e.g.

    https://www.google.com/maps/dir/6.244338,-75.573574/6.242759,-75.579205/

Scheme and host are optional, `@lat,lon,zoom` viewport segments and
`data=...` blobs are ignored, anything else that is not a coordinate
pair is rejected.  Emitted URLs always carry six decimals per
coordinate, so parse(emit(points)) gives the points back at
six-decimal precision in the same order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidUrl, TooFewPoints
from .geo import GeoPoint

BASE_URL = "https://www.google.com/maps/dir/"


@dataclass
class WaypointRequest:
    """Waypoints exactly as they appeared in the URL, in order."""

    points: list[GeoPoint]
    raw_url: str = ""

    def __len__(self):
        return len(self.points)


def _parse_pair(segment: str) -> GeoPoint:
    pieces = segment.split(",")
    if len(pieces) != 2:
        raise InvalidUrl()
    try:
        lat = float(pieces[0])
        lon = float(pieces[1])
    except ValueError:
        raise InvalidUrl() from None
    return GeoPoint(lat, lon)


def parse_gmaps_url(url: str) -> WaypointRequest:
    """Extract the waypoints from a directions URL.

    Raises InvalidUrl when the shape is not a directions URL,
    TooFewPoints below two waypoints, and CoordinateOutOfRange for
    coordinates outside the WGS84 domain.
    """
    cleaned = url.strip()
    for stop in ("?", "#"):
        if stop in cleaned:
            cleaned = cleaned.split(stop, 1)[0]
    segments = cleaned.split("/")
    try:
        start = segments.index("dir") + 1
    except ValueError:
        raise InvalidUrl() from None
    points = []
    for segment in segments[start:]:
        if not segment or segment.startswith("@") or segment.startswith("data="):
            continue
        points.append(_parse_pair(segment))
    if not points:
        raise InvalidUrl()
    if len(points) < 2:
        raise TooFewPoints(len(points))
    return WaypointRequest(points=points, raw_url=url)


def emit_gmaps_url(points: list[GeoPoint]) -> str:
    """Directions URL for `points`, six decimals per coordinate.

    The points are emitted verbatim in the given order; closing the
    tour (repeating the start at the end) is the caller's job.
    """
    if len(points) < 2:
        raise TooFewPoints(len(points))
    return BASE_URL + "/".join(f"{p.lat:.6f},{p.lon:.6f}" for p in points) + "/"
