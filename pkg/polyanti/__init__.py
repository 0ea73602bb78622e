"""
Poly-antimatroid point sets in two and three dimensions: axiom checks,
boundary chains, convex dimension, staircases and conjecture searches.

Date: October 2026
License: MIT License
"""

from .builder import StaircaseBuilder
from .cdim import CdimResult, cdim_2d, cdim_lower_bound, convex_dimension_exact
from .config import SearchLimits
from .core import Chain, PointSet, is_poly_antimatroid, join_of_chains
from .harness import SearchReport, test_cdim_bound, test_conjecture_staircase
from .planar import boundary_decomposition, satisfies_def4
from .staircase import (Cuboid, StaircaseSpec, eppstein_set, is_step_staircase, staircase_points,
                        three_chain_decomposition)

__version__ = "1.0.0"
__author__ = "polyanti contributors"
__date__ = "October 2026"

__all__ = [
    'PointSet',
    'Chain',
    'is_poly_antimatroid',
    'join_of_chains',
    'boundary_decomposition',
    'satisfies_def4',
    'CdimResult',
    'cdim_2d',
    'cdim_lower_bound',
    'convex_dimension_exact',
    'Cuboid',
    'StaircaseSpec',
    'StaircaseBuilder',
    'eppstein_set',
    'is_step_staircase',
    'staircase_points',
    'three_chain_decomposition',
    'SearchLimits',
    'SearchReport',
    'test_conjecture_staircase',
    'test_cdim_bound',

    # Metadata
    '__version__',
    '__author__',
    '__date__'
]
