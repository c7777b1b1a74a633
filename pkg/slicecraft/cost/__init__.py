# -*- coding: utf-8 -*-
"""
    slicecraft.cost.__init__
    ~~~~~~~~~~~~~~~~~~~~~~~~

    CTU encoding-time maps, the co-temporal-layer estimator and partition times.

    :license: MIT, see LICENSE for more details.
"""

__all__ = [
    'EstimateSource', 'GopStructure', 'CostMap', 'CostHistory', 'CostEstimator',
    'SliceTimeTable', 'CostAnalyzer', 'CO_TEMPORAL_LAYER', 'CLOSEST_FRAME', 'ESTIMATOR_MODES'
]

from .EstimateSource import EstimateSource
from .GopStructure import GopStructure
from .CostMap import CostMap
from .CostHistory import CostHistory
from .CostEstimator import CostEstimator, CO_TEMPORAL_LAYER, CLOSEST_FRAME, ESTIMATOR_MODES
from .SliceTimeTable import SliceTimeTable
from .CostAnalyzer import CostAnalyzer
