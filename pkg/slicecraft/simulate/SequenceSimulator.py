# -*- coding: utf-8 -*-
"""
    slicecraft.simulate.SequenceSimulator
    ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~

    Multi-thread encoding simulation of a sequence trace.

    :license: MIT, see LICENSE for more details.
"""
from typing import Dict, List, Optional

from pip_services3_commons.config import ConfigParams, IConfigurable
from pip_services3_commons.errors import ConfigException
from pip_services3_commons.refer import Descriptor, IReferenceable, IReferences
from pip_services3_components.count import CompositeCounters
from pip_services3_components.log import CompositeLogger

from .BaselineMode import BaselineMode
from .ComparisonTable import ComparisonTable
from .FrameRecord import FrameRecord
from .MethodReport import MethodReport
from .SequenceTrace import SequenceTrace
from .SimConfig import SimConfig
from .SimReport import SimReport
from .TimingMode import TimingMode
from ..cost import CostAnalyzer, CostHistory, CostMap, EstimateSource
from ..grid import Partition, UniformPartitioner
from ..search import PartitionSearch, SearchOutcome
from ..texture import FlatTextureSource, ITextureSource, TextureAnalyzer, TextureStats, YuvTextureSource

PROPOSED = 'Proposed'
UNIFORM = 'Uniform'


class SequenceSimulator(IConfigurable, IReferenceable):
    """
    Replays a sequence trace frame by frame in encode order. For every frame the
    proposed partition is searched on estimates built only from frames already
    replayed, then the frame is "encoded" with its true CTU times.

    ### Configuration parameters ###
        - timing:              measured, modeled or none (default: measured)
        - candidate_cost_us:   modeled cost of one evaluated candidate (default: 1.0)

    ### References ###
        - `*:logger:*:*:1.0`                  (optional) :class:`ILogger <pip_services3_components.log.ILogger.ILogger>` components to pass log messages
        - `*:counters:*:*:1.0`                (optional) :class:`ICounters <pip_services3_components.count.ICounters.ICounters>` components to pass collected measurements
        - `slicecraft:search:*:*:1.0`         (optional) :class:`PartitionSearch` to run the partitioning stage

    Example:

    .. code-block:: python

        simulator = SequenceSimulator()
        simulator.configure(ConfigParams.from_tuples('timing', 'modeled'))

        trace = SequenceTrace.load('traces/river')
        report = simulator.simulate_sequence('123', trace, SimConfig(n_threads=4, lam=0.1))
        print(SequenceSimulator.compare_baseline(report.proposed, report.uniform).format_text())
    """

    def __init__(self):
        self._logger: CompositeLogger = CompositeLogger()
        self._counters: CompositeCounters = CompositeCounters()
        self._search: PartitionSearch = PartitionSearch()
        self.__timing: TimingMode = TimingMode.Measured
        self.__candidate_cost_us: float = 1.0

    def configure(self, config: ConfigParams):
        """
        Configures component by passing configuration parameters.

        :param config: configuration parameters to be set.
        """
        timing = config.get_as_string_with_default('timing', self.__timing.value)
        try:
            self.__timing = TimingMode(timing)
        except ValueError:
            raise ConfigException(None, 'BAD_TIMING', 'Timing mode ' + str(timing) + ' is not supported') \
                .with_details('timing', timing)
        self.__candidate_cost_us = config.get_as_float_with_default('candidate_cost_us', self.__candidate_cost_us)

    def set_references(self, references: IReferences):
        """
        Sets references to dependent components.

        :param references: references to locate the component dependencies.
        """
        self._logger.set_references(references)
        self._counters.set_references(references)
        search = references.get_one_optional(Descriptor('slicecraft', 'search', '*', '*', '1.0'))
        if search is not None:
            self._search = search
        else:
            self._search.set_references(references)

    @property
    def timing(self) -> TimingMode:
        return self.__timing

    @staticmethod
    def simulate_frame(costs: CostMap, p: Partition, s: float) -> float:
        """
        Frame time of an encoder whose slices run on parallel threads. A share s of every
        CTU time is sequential, the rest runs on the slice's thread.

        :param costs: true CTU times of the frame.
        :param p: the partition used to encode it.
        :param s: sequential fraction in [0, 1].
        :return: the parallel frame time.
        """
        slowest = CostAnalyzer.partition_time(costs, p).max
        return s * costs.total + (1 - s) * slowest

    @staticmethod
    def amdahl_bound(s: float, n: int) -> float:
        """
        Upper bound of the speed-up reachable with n threads when a share s is sequential.
        """
        return 1.0 / (s + (1.0 - s) / n)

    @staticmethod
    def compare_baseline(report_proposed: MethodReport, report_uniform: Optional[MethodReport],
                         n_threads: int = 0, lam: float = 0.0, seq_frac: float = 0.0) -> ComparisonTable:
        """
        Builds the comparison table of both methods for one thread count.
        """
        sigma_max = SequenceSimulator.amdahl_bound(seq_frac, n_threads) if n_threads > 0 else 0.0
        return ComparisonTable(n_threads, lam, seq_frac, sigma_max, report_proposed, report_uniform)

    def simulate_sequence(self, correlation_id: Optional[str], trace: SequenceTrace, cfg: SimConfig,
                          texture_source: Optional[ITextureSource] = None) -> SimReport:
        """
        Simulates every QP run of the trace with the proposed partitioning and,
        unless disabled, with the uniform one.

        :param correlation_id: (optional) transaction id to trace execution through call chain.
        :param trace: true CTU times for every (poc, qp).
        :param cfg: simulation parameters.
        :param texture_source: (optional) frame statistics; the trace frames or flat texture by default.
        :return: the simulation report.
        :raises TraceException: when a (poc, qp) cost map is missing.
        """
        trace.check_complete(cfg.qps, correlation_id)
        if texture_source is None:
            if trace.yuv is not None:
                texture_source = YuvTextureSource(trace.yuv, trace.grid, trace.bit_depth)
            else:
                texture_source = FlatTextureSource(trace.grid)

        stats_cache: Dict[int, TextureStats] = {}

        def stats_of(poc: int) -> TextureStats:
            if poc not in stats_cache:
                stats_cache[poc] = texture_source.get_stats(correlation_id, poc)
            return stats_cache[poc]

        proposed = MethodReport(PROPOSED, cfg.qps, self._run_proposed(correlation_id, trace, cfg, stats_of))
        uniform = None
        if cfg.baseline == BaselineMode.Uniform:
            uniform = MethodReport(UNIFORM, cfg.qps, self._run_uniform(correlation_id, trace, cfg, stats_of))

        report = SimReport(cfg, proposed, uniform, SequenceSimulator.amdahl_bound(cfg.seq_frac, cfg.n_threads),
                           cfg.estimator, self.__timing.value)
        self._logger.info(
            correlation_id,
            'Simulated ' + str(len(trace.encode_order)) + ' frames x ' + str(len(cfg.qps)) + ' QPs with '
            + str(cfg.n_threads) + ' threads: sigma=' + str(proposed.sigma) + ' theta=' + str(proposed.theta)
            + ('' if uniform is None else ' uniform sigma=' + str(uniform.sigma))
        )
        return report

    def _search_times(self, outcome: SearchOutcome):
        if self.__timing == TimingMode.Measured:
            return outcome.step1_time * 1e6, outcome.step2_time * 1e6
        if self.__timing == TimingMode.Modeled:
            # Both steps scan the whole candidate family once.
            modeled = outcome.candidates_evaluated * self.__candidate_cost_us
            return modeled, modeled
        return 0.0, 0.0

    def _run_proposed(self, correlation_id: Optional[str], trace: SequenceTrace, cfg: SimConfig,
                      stats_of) -> List[FrameRecord]:
        search_cfg = cfg.search_config()
        records = []
        for qp in cfg.qps:
            history = CostHistory(trace.grid, trace.gop_size)
            fallbacks = 0
            for poc in trace.encode_order:
                true_costs = trace.get(poc, qp)
                timing = self._counters.begin_timing('simulate.frame')
                outcome = self._search.two_step_partition(
                    correlation_id, history.snapshot(), stats_of(poc), poc, search_cfg
                )
                timing.end_timing()
                if len(history) > 0 and outcome.estimate_source not in (EstimateSource.CoTemporalLayer,
                                                                        EstimateSource.ClosestFrame):
                    fallbacks += 1

                step1, step2 = self._search_times(outcome)
                slices = CostAnalyzer.partition_time(true_costs, outcome.best, correlation_id)
                records.append(FrameRecord(
                    PROPOSED, qp, poc, true_costs.temporal_layer, true_costs.total, slices.max, outcome.t_best,
                    SequenceSimulator.simulate_frame(true_costs, outcome.best, cfg.seq_frac), outcome.sse_best,
                    step1 + step2, step1, step2, outcome.estimate_source.value, outcome.estimate_source_poc,
                    outcome.candidates_evaluated
                ))
                history.append(true_costs, correlation_id)
                self._counters.increment('simulate.frames', 1)

            if fallbacks > 0:
                self._logger.warn(
                    correlation_id,
                    'QP ' + str(qp) + ': ' + str(fallbacks) + ' frames had no earlier frame of their temporal layer'
                    + ' and used a fallback estimate'
                )
        return records

    def _run_uniform(self, correlation_id: Optional[str], trace: SequenceTrace, cfg: SimConfig,
                     stats_of) -> List[FrameRecord]:
        p = UniformPartitioner.partition(trace.grid, cfg.n_threads, correlation_id)
        records = []
        for qp in cfg.qps:
            for poc in trace.encode_order:
                true_costs = trace.get(poc, qp)
                slices = CostAnalyzer.partition_time(true_costs, p, correlation_id)
                records.append(FrameRecord(
                    UNIFORM, qp, poc, true_costs.temporal_layer, true_costs.total, slices.max, None,
                    SequenceSimulator.simulate_frame(true_costs, p, cfg.seq_frac),
                    TextureAnalyzer.partition_sse(stats_of(poc), p, correlation_id)
                ))
        return records
