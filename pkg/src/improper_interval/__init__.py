"""Improper interval edge colorings: generators, constructions, bounds and an exact solver."""

from .graph_core import (
    EdgeColoring,
    Graph,
    InputError,
    MultiGraph,
    PreconditionError,
    ResourceLimitError,
    Spectrum,
    impropriety_of,
    is_interval,
    normalize,
    spectrum,
    verify,
)

__all__ = [
    "EdgeColoring",
    "Graph",
    "InputError",
    "MultiGraph",
    "PreconditionError",
    "ResourceLimitError",
    "Spectrum",
    "impropriety_of",
    "is_interval",
    "normalize",
    "spectrum",
    "verify",
]

__version__ = "0.1.0"
