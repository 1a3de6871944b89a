"""Exception hierarchy."""


class SimplexNormError(Exception):
    pass


class DegenerateSimplex(SimplexNormError, ValueError):
    """Vertices are (numerically) affinely dependent."""

    def __init__(self, msg, det=None):
        super().__init__(msg)
        self.det = det


class DimensionMismatch(SimplexNormError, ValueError):
    pass


class DomainError(SimplexNormError, ValueError):
    pass


class IndexOutOfRange(SimplexNormError, IndexError):
    pass


class NodesOutsideBall(SimplexNormError, ValueError):
    pass


class ConfigError(SimplexNormError, ValueError):
    pass
