# -*- coding: utf-8 -*-
import numpy as np
import pytest
from pip_services3_commons.errors import ConfigException

from slicecraft.grid import CtuGrid
from slicecraft.simulate import BLOCKS, RIVER, SyntheticTraceGenerator
from slicecraft.texture import TextureAnalyzer


class TestSyntheticTraceGenerator:
    grid = CtuGrid(256, 192, 64)

    def test_same_seed_same_sequence(self):
        for scenario in (RIVER, BLOCKS):
            a_lumas, a = SyntheticTraceGenerator(self.grid, scenario, seed=7).generate(3, (22, 37))
            b_lumas, b = SyntheticTraceGenerator(self.grid, scenario, seed=7).generate(3, (22, 37))
            assert all(np.array_equal(x, y) for x, y in zip(a_lumas, b_lumas))
            assert np.array_equal(a.get(2, 37).times, b.get(2, 37).times)

            _, c = SyntheticTraceGenerator(self.grid, scenario, seed=8).generate(3, (22,))
            assert not np.array_equal(a.get(1, 22).times, c.get(1, 22).times)

    def test_cost_follows_texture(self):
        generator = SyntheticTraceGenerator(self.grid, RIVER, seed=1, noise=0.0)
        lumas, trace = generator.generate(2, (27,))
        stats = TextureAnalyzer.ctu_stats(lumas[1], self.grid, 1)
        sse = stats.sumsqs - stats.sums.astype(np.float64) ** 2 / stats.counts
        times = trace.get(1, 27).times
        mask = sse > 0
        ratios = times[mask] / sse[mask]
        assert np.allclose(ratios, ratios[0])
        assert np.all(times[~mask] == 0)

    def test_qp_scale(self):
        assert SyntheticTraceGenerator.qp_scale(37) == 1.0
        assert SyntheticTraceGenerator.qp_scale(31) == pytest.approx(2.0)

    def test_bad_parameters(self):
        with pytest.raises(ConfigException):
            SyntheticTraceGenerator(self.grid, 'desert')
        with pytest.raises(ConfigException):
            SyntheticTraceGenerator(self.grid, noise=-1)
        with pytest.raises(ConfigException):
            SyntheticTraceGenerator(self.grid).generate(0)
