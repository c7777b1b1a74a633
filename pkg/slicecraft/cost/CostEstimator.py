# -*- coding: utf-8 -*-
from typing import Optional

from .CostHistory import CostHistory
from .CostMap import CostMap
from .EstimateSource import EstimateSource
from .GopStructure import GopStructure

CO_TEMPORAL_LAYER = 'co_tl'
CLOSEST_FRAME = 'closest'
ESTIMATOR_MODES = (CO_TEMPORAL_LAYER, CLOSEST_FRAME)


class CostEstimator:
    """
    Estimates CTU times of a frame before it is encoded, from the co-located CTUs of a
    previously encoded frame.

    In ``co_tl`` mode the source is the latest frame of the same temporal layer; when
    there is none, the latest frame of any layer; when the history is empty, a map of
    ones. ``closest`` mode always takes the latest encoded frame.
    """

    @staticmethod
    def estimate_ctu_times(history: CostHistory, poc: int, mode: str = CO_TEMPORAL_LAYER) -> CostMap:
        """
        Estimates the CTU times of a frame.

        :param history: true times of frames encoded so far.
        :param poc: picture order count of the frame to encode.
        :param mode: (optional) ``co_tl`` or ``closest``.
        :return: the estimated map tagged with its source.
        """
        layer = GopStructure.temporal_layer_of_poc(poc, history.gop_size)

        source: Optional[CostMap] = None
        tag = EstimateSource.Uniform
        if mode == CO_TEMPORAL_LAYER:
            source = history.latest(layer)
            tag = EstimateSource.CoTemporalLayer
        if source is None:
            source = history.latest()
            tag = EstimateSource.ClosestFrame if mode == CLOSEST_FRAME else EstimateSource.AnyLayer
        if source is None:
            return CostMap.uniform(history.grid, poc, layer)

        return source.as_estimate(poc, layer, tag)
