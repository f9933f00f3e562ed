"""One executable coloring per constructive result; every output is verified before it is returned."""

from ._common import ColoringResult, ConstructionFailure
from .named import (
    cartesian_expected_interval,
    color_cartesian,
    color_hertz,
    color_M,
    color_multipartite,
    color_S,
    color_theta,
    multipartite_expected_spectra,
)
from .bipartite import color_bipartite_quarter, color_bipartite_split
from .general import (
    color_half_delta,
    color_maxdeg5,
    color_near_regular,
    color_regular,
    color_split_double,
)
from .outerplanar import color_outerplanar8, color_outerplanar_quarter

__all__ = [
    "ColoringResult",
    "ConstructionFailure",
    "cartesian_expected_interval",
    "color_M",
    "color_S",
    "color_bipartite_quarter",
    "color_bipartite_split",
    "color_cartesian",
    "color_half_delta",
    "color_hertz",
    "color_maxdeg5",
    "color_multipartite",
    "color_near_regular",
    "color_outerplanar8",
    "color_outerplanar_quarter",
    "color_regular",
    "color_split_double",
    "color_theta",
    "multipartite_expected_spectra",
]
