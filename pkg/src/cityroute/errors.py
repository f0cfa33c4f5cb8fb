"""Exception types shared across the package."""


class CityRouteError(Exception):
    """Base class for every error raised by this package."""


class MissingFile(CityRouteError):
    def __init__(self, path):
        self.path = str(path)
        super().__init__(f"file not found: {self.path}")


class MalformedLine(CityRouteError):
    def __init__(self, path, lineno, reason):
        self.path = str(path)
        self.lineno = lineno
        self.reason = reason
        super().__init__(f"{self.path}:{lineno}: {reason}")


class UnknownEndpoint(CityRouteError):
    def __init__(self, path, lineno, vertex_id):
        self.path = str(path)
        self.lineno = lineno
        self.vertex_id = vertex_id
        super().__init__(f"{self.path}:{lineno}: unknown endpoint {vertex_id}")


class EmptyGraph(CityRouteError):
    def __init__(self, path=None):
        self.path = None if path is None else str(path)
        if self.path is None:
            super().__init__("graph has no vertices")
        else:
            super().__init__(f"no vertices loaded from {self.path}")


class UnknownVertex(CityRouteError):
    def __init__(self, vertex_id):
        self.vertex_id = vertex_id
        super().__init__(f"vertex {vertex_id} is not in the graph")


class Unreachable(CityRouteError):
    def __init__(self, source, target):
        self.source = source
        self.target = target
        super().__init__(f"no path from vertex {source} to vertex {target}")


class UnreachableLeg(CityRouteError):
    def __init__(self, i, j):
        self.i = i
        self.j = j
        super().__init__(f"tour leg {i} -> {j} has infinite distance")


class Disconnected(CityRouteError):
    def __init__(self):
        super().__init__("distance matrix contains unreachable pairs")


class TooLarge(CityRouteError):
    def __init__(self, n, cap):
        self.n = n
        self.cap = cap
        super().__init__(f"{n} terminals exceed the exact-solver cap of {cap}")


class MissingPath(CityRouteError):
    def __init__(self, i, j):
        self.i = i
        self.j = j
        super().__init__(f"no stored vertex path for leg {i} -> {j}")


class InvalidUrl(CityRouteError):
    def __init__(self, message="Invalid URL! Try again:"):
        super().__init__(message)


class TooFewPoints(CityRouteError):
    def __init__(self, count):
        self.count = count
        super().__init__(f"need at least 2 points, got {count}")


class CoordinateOutOfRange(CityRouteError):
    def __init__(self, lat, lon):
        self.lat = lat
        self.lon = lon
        super().__init__(f"coordinate out of range: {lat},{lon}")


class InvalidDimensions(CityRouteError):
    def __init__(self, message):
        super().__init__(message)
