"""All-pairs minimum cut queries on surface-embedded graphs."""

from .embed import EmbeddedGraph, dual, parse_graph, format_graph
from .errors import SurfcutError

__all__ = ["EmbeddedGraph", "dual", "parse_graph", "format_graph",
           "SurfcutError"]

__version__ = "0.1.0"
