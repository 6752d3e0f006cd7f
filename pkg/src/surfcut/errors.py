"""Exception types shared across surfcut."""


class SurfcutError(Exception):
    """Base class for all surfcut errors."""


class GraphFormatError(SurfcutError):
    """Malformed graph file or inconsistent rotation system."""


class DisconnectedGraphError(SurfcutError):
    """Operation requires a connected graph."""


class SeparatingCutError(SurfcutError):
    """Cutting along a separating subgraph would disconnect the surface."""


class CurveShapeError(SurfcutError):
    """Edge set is not a weakly simple cycle or cycle-path pair."""


class GenusLimitError(SurfcutError):
    """Input genus exceeds the configured maximum."""


class CrossingCutsError(SurfcutError):
    """Minimum cuts from different trees cross; merging is undefined."""


class TieError(SurfcutError):
    """Weight perturbation failed to make minimum cuts unique."""


class NoPathError(SurfcutError):
    """No boundary-to-boundary path exists in the requested homology class."""
