"""Robin spectrum of the side-pi square: eigenvalue branches and curves,
curve crossings, nodal-domain censuses, and the disc-based Courant-sharp
exclusion pipeline."""

from . import crossings, faberkrahn, nodal, robin1d, spectrum2d
from .crossings import CrossingEvent, CurvePair, find_crossing, threshold_h
from .faberkrahn import DiscGroundState, disc_ground_state, scaled_fk_bound
from .nodal import NodalCensus, ThetaFamily, count_nodal_domains
from .robin1d import AlphaSolution, alpha, solve_alpha
from .spectrum2d import Eigenvalue2D, ModeLabel, SpectrumTable, eigenvalue, \
    enumerate_spectrum

__version__ = "0.1.0"

__all__ = [
    "robin1d", "spectrum2d", "crossings", "nodal", "faberkrahn",
    "AlphaSolution", "alpha", "solve_alpha",
    "ModeLabel", "Eigenvalue2D", "SpectrumTable", "eigenvalue",
    "enumerate_spectrum",
    "CurvePair", "CrossingEvent", "find_crossing", "threshold_h",
    "ThetaFamily", "NodalCensus", "count_nodal_domains",
    "DiscGroundState", "disc_ground_state", "scaled_fk_bound",
    "__version__",
]
