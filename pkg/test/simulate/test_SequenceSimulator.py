# -*- coding: utf-8 -*-
import json

import numpy as np
import pytest
from pip_services3_commons.config import ConfigParams
from pip_services3_commons.errors import ConfigException
from pip_services3_commons.refer import Descriptor, References

from slicecraft.cost import CostMap, GopStructure
from slicecraft.errors import TraceException
from slicecraft.grid import CtuGrid, UniformPartitioner
from slicecraft.search import PartitionSearch
from slicecraft.simulate import BaselineMode, SequenceSimulator, SequenceTrace, SimConfig, TimingMode
from test.simulate.SimulationTraces import SimulationTraces


class TestSequenceSimulator:
    simulator: SequenceSimulator = None

    def setup_method(self):
        self.simulator = SequenceSimulator()
        self.simulator.configure(ConfigParams.from_tuples('timing', 'none'))

    def test_amdahl_bound(self):
        assert SequenceSimulator.amdahl_bound(0.04, 4) == pytest.approx(3.57, abs=0.005)
        assert SequenceSimulator.amdahl_bound(0.04, 8) == pytest.approx(6.25, abs=0.005)
        assert SequenceSimulator.amdahl_bound(0.04, 12) == pytest.approx(8.33, abs=0.005)
        assert SequenceSimulator.amdahl_bound(0.0, 6) == pytest.approx(6.0)
        assert SequenceSimulator.amdahl_bound(1.0, 6) == pytest.approx(1.0)

    def test_simulate_frame(self):
        grid = CtuGrid.from_cells(4, 4)
        rng = np.random.default_rng(1)
        costs = CostMap(grid, rng.integers(0, 50, 16).astype(float), 0)
        p = UniformPartitioner.partition(grid, 4)
        slowest = max(costs.times[s.y0:s.y1, s.x0:s.x1].sum() for s in p.slices)
        assert SequenceSimulator.simulate_frame(costs, p, 0.0) == pytest.approx(slowest)
        assert SequenceSimulator.simulate_frame(costs, p, 1.0) == pytest.approx(costs.total)

        lower = 0.2 * costs.total + 0.8 * costs.total / 4
        assert lower - 1e-9 <= SequenceSimulator.simulate_frame(costs, p, 0.2) <= costs.total + 1e-9

    def test_uniform_frame_speedup(self):
        grid = CtuGrid.from_cells(4, 4)
        costs = CostMap(grid, np.full(16, 100 / 16), 0)
        t = SequenceSimulator.simulate_frame(costs, UniformPartitioner.partition(grid, 4), 0.04)
        assert t == pytest.approx(28.0)
        assert 100 / t == pytest.approx(3.571, abs=1e-3)

    def test_balanced_case_reaches_bound(self):
        grid = CtuGrid.from_cells(4, 4)
        trace = SimulationTraces.constant(grid, 5, value=3.0)
        for n in (2, 4):
            for s in (0.0, 0.04, 0.2):
                report = self.simulator.simulate_sequence(None, trace, SimConfig(n, (22,), s))
                bound = SequenceSimulator.amdahl_bound(s, n)
                assert report.proposed.sigma == pytest.approx(bound, rel=1e-9)
                assert report.uniform.sigma == pytest.approx(bound, rel=1e-9)
                assert report.sigma_max == bound

    def test_single_frame_single_thread(self):
        simulator = SequenceSimulator()
        simulator.configure(ConfigParams.from_tuples('timing', 'modeled', 'candidate_cost_us', 1.0))
        grid = CtuGrid.from_cells(4, 4)
        trace = SimulationTraces.constant(grid, 1, value=1000.0)
        report = simulator.simulate_sequence(None, trace, SimConfig(1, (22,)))

        frame = report.proposed.frames[0]
        assert frame.candidates == 1
        assert frame.search_time == 2.0
        assert report.proposed.sigma == pytest.approx(16000.0 / 16002.0)
        assert report.proposed.sigma_excl == pytest.approx(1.0)
        assert report.proposed.theta == pytest.approx(100 * 2.0 / 16002.0)
        assert report.proposed.theta_step1 == pytest.approx(report.proposed.theta / 2)

    def test_identical_qps_average(self):
        grid = CtuGrid.from_cells(4, 4)
        one = self.simulator.simulate_sequence(None, SimulationTraces.column_weighted(grid, 3, qp=22),
                                               SimConfig(4, (22,)))
        trace = SimulationTraces.column_weighted(grid, 3, qp=22)
        maps = []
        for qp in (22, 27, 32, 37):
            for poc in trace.pocs:
                m = trace.get(poc, 22)
                maps.append(CostMap(grid, m.times, poc, m.temporal_layer, qp))
        four = self.simulator.simulate_sequence(None, SequenceTrace(grid, maps, 16), SimConfig(4))
        assert four.proposed.sigma == pytest.approx(one.proposed.sigma, rel=1e-12)
        assert four.uniform.sigma == pytest.approx(one.uniform.sigma, rel=1e-12)

    def test_causal_co_layer_sources(self):
        grid = CtuGrid.from_cells(3, 3)
        trace = SimulationTraces.sentinel(grid)
        report = self.simulator.simulate_sequence(None, trace, SimConfig(2, (22,), baseline=BaselineMode.NoBaseline))
        order = GopStructure.random_access_encode_order(17, 16)
        frames = report.proposed.frames
        assert [f.poc for f in frames] == order
        assert report.uniform is None

        for index, frame in enumerate(frames):
            earlier = order[:index]
            same_layer = [p for p in earlier if GopStructure.temporal_layer_of_poc(p, 16) == frame.temporal_layer]
            if index == 0:
                assert frame.estimate_source == 'Uniform'
                assert frame.estimate_source_poc is None
            elif same_layer:
                assert frame.estimate_source == 'CoTemporalLayer'
                assert frame.estimate_source_poc == same_layer[-1]
            else:
                assert frame.estimate_source == 'AnyLayer'
                assert frame.estimate_source_poc == earlier[-1]
            assert frame.estimate_source_poc is None or frame.estimate_source_poc in earlier

    def test_proposed_beats_uniform(self):
        grid = CtuGrid.from_cells(8, 8)
        strict = 0
        for seed in range(20):
            n = 2 if seed % 2 == 0 else 4
            trace = SimulationTraces.column_weighted(grid, seed)
            report = self.simulator.simulate_sequence(None, trace, SimConfig(n, (22,), 0.04))
            assert report.proposed.sigma_excl >= report.uniform.sigma_excl * (1 - 1e-12)
            if report.proposed.sigma_excl > report.uniform.sigma_excl * (1 + 1e-9):
                strict += 1
            assert report.proposed.sigma <= report.sigma_max * (1 + 1e-6)
            assert report.proposed.theta >= 0
        assert strict >= 15

    def test_missing_cost_map(self):
        grid = CtuGrid.from_cells(2, 2)
        trace = SimulationTraces.constant(grid, 3, qps=(22,))
        with pytest.raises(TraceException) as error:
            self.simulator.simulate_sequence(None, trace, SimConfig(2, (22, 27)))
        assert error.value.missing[0] == (0, 27)

    def test_bad_timing(self):
        with pytest.raises(ConfigException):
            SequenceSimulator().configure(ConfigParams.from_tuples('timing', 'sometimes'))
        assert self.simulator.timing == TimingMode.NoTiming

    def test_reports_are_reproducible(self):
        grid = CtuGrid.from_cells(6, 4)
        trace = SimulationTraces.column_weighted(grid, 5)
        reports = []
        for workers in (1, 4, 1):
            search = PartitionSearch()
            search.configure(ConfigParams.from_tuples('workers', workers, 'chunk_size', 5))
            simulator = SequenceSimulator()
            simulator.configure(ConfigParams.from_tuples('timing', 'modeled'))
            simulator.set_references(References.from_tuples(
                Descriptor('slicecraft', 'search', 'default', 'default', '1.0'), search
            ))
            report = simulator.simulate_sequence(None, trace, SimConfig(3, (22,), lam=0.1))
            reports.append(json.dumps(report.to_json()) + report.to_csv())
        assert reports[0] == reports[1] == reports[2]
