# -*- coding: utf-8 -*-
import numpy as np

from slicecraft.cost import CLOSEST_FRAME, CostEstimator, CostHistory, CostMap, EstimateSource, GopStructure
from slicecraft.grid import CtuGrid


class TestCostEstimator:
    grid: CtuGrid = None

    def setup_method(self):
        self.grid = CtuGrid.from_cells(3, 2)

    def _sentinel(self, poc: int) -> CostMap:
        return CostMap(self.grid, np.full(6, 1000.0 + poc), poc, GopStructure.temporal_layer_of_poc(poc, 16))

    def test_empty_history(self):
        est = CostEstimator.estimate_ctu_times(CostHistory(self.grid, 16), 0)
        assert est.source == EstimateSource.Uniform
        assert est.source_poc is None
        assert np.all(est.times == 1.0)

    def test_same_layer_source(self):
        history = CostHistory(self.grid, 16)
        for poc in (0, 16, 8, 4):
            history.append(self._sentinel(poc))
        est = CostEstimator.estimate_ctu_times(history, 12)
        assert est.source == EstimateSource.CoTemporalLayer
        assert est.source_poc == 4
        assert est.poc == 12
        assert est.temporal_layer == 2
        assert np.all(est.times == 1004.0)

    def test_falls_back_to_latest_frame(self):
        history = CostHistory(self.grid, 16)
        for poc in (0, 16, 8):
            history.append(self._sentinel(poc))
        est = CostEstimator.estimate_ctu_times(history, 4)
        assert est.source == EstimateSource.AnyLayer
        assert est.source_poc == 8

    def test_closest_mode(self):
        history = CostHistory(self.grid, 16)
        for poc in (0, 16, 8, 4):
            history.append(self._sentinel(poc))
        est = CostEstimator.estimate_ctu_times(history, 24, CLOSEST_FRAME)
        assert est.source == EstimateSource.ClosestFrame
        assert est.source_poc == 4

    def test_causal_sources_over_a_gop(self):
        order = GopStructure.random_access_encode_order(17, 16)
        history = CostHistory(self.grid, 16)
        for index, poc in enumerate(order):
            est = CostEstimator.estimate_ctu_times(history, poc)
            layer = GopStructure.temporal_layer_of_poc(poc, 16)
            same_layer = [p for p in order[:index] if GopStructure.temporal_layer_of_poc(p, 16) == layer]
            if same_layer:
                assert est.source_poc == same_layer[-1]
                assert np.all(est.times == 1000.0 + same_layer[-1])
            elif index > 0:
                assert est.source_poc == order[index - 1]
            history.append(self._sentinel(poc))
