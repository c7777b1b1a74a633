# -*- coding: utf-8 -*-
"""
    slicecraft.cli.SlicecraftCommands
    ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~

    Command implementations of the slicecraft front end.

    :license: MIT, see LICENSE for more details.
"""
import json
import os
import sys
from typing import List, Optional, TextIO

from pip_services3_commons.config import ConfigParams
from pip_services3_commons.errors import ConfigException, FileException
from pip_services3_commons.refer import IReferenceable, IReferences
from pip_services3_components.log import CompositeLogger

from .RunConfig import RunConfig
from .SvgLineChart import SvgLineChart
from ..cost import CostHistory
from ..grid import Partition, PartitionRenderer
from ..search import PartitionSearch, SearchConfig
from ..simulate import BaselineMode, LambdaSweep, SequenceSimulator, SequenceTrace, SimReport, SweepRow, \
    SyntheticTraceGenerator
from ..texture import FlatTextureSource, ITextureSource, StatsCacheTextureSource, YuvFile, YuvTextureSource


class SlicecraftCommands(IReferenceable):
    """
    Runs one command per call. Machine outputs (JSON, CSV, SVG) go to the output
    directory; human summaries go to the text stream.

    ### References ###
        - `*:logger:*:*:1.0`       (optional) :class:`ILogger <pip_services3_components.log.ILogger.ILogger>` components to pass log messages
    """

    def __init__(self, search: PartitionSearch, simulator: SequenceSimulator, stream: Optional[TextIO] = None):
        self._logger: CompositeLogger = CompositeLogger()
        self._search = search
        self._simulator = simulator
        self._stream = stream if stream is not None else sys.stdout

    def set_references(self, references: IReferences):
        self._logger.set_references(references)

    def run(self, correlation_id: Optional[str], cfg: RunConfig) -> int:
        """
        Dispatches the configured command.

        :return: the process exit code.
        """
        if cfg.workers is not None:
            self._search.configure(ConfigParams.from_tuples('workers', cfg.workers))
        self._simulator.configure(ConfigParams.from_tuples(
            'timing', cfg.timing.value,
            'candidate_cost_us', cfg.candidate_cost_us
        ))
        handler = getattr(self, 'cmd_' + cfg.command)
        self._logger.debug(correlation_id, 'Running command ' + cfg.command)
        handler(correlation_id, cfg)
        return 0

    def _print(self, text: str):
        self._stream.write(text if text.endswith('\n') else text + '\n')

    @staticmethod
    def _write(correlation_id: Optional[str], directory: str, name: str, text: str) -> str:
        path = os.path.join(directory, name)
        try:
            os.makedirs(directory, exist_ok=True)
            with open(path, 'w', newline='') as f:
                f.write(text)
        except OSError as err:
            raise FileException(correlation_id, 'WRITE_FAILED', 'Cannot write ' + path + ': ' + str(err))
        return path

    @staticmethod
    def _dump(value) -> str:
        return json.dumps(value, indent=2) + '\n'

    def _texture_source(self, cfg: RunConfig, trace: Optional[SequenceTrace]) -> ITextureSource:
        grid = trace.grid if trace is not None else cfg.grid()
        if cfg.stats_dir is not None:
            return StatsCacheTextureSource(cfg.stats_dir)
        yuv = cfg.yuv if cfg.yuv is not None else (trace.yuv if trace is not None else None)
        if yuv is not None:
            bit_depth = cfg.bit_depth if cfg.yuv is not None or trace is None else trace.bit_depth
            return YuvTextureSource(yuv, grid, bit_depth, cfg.texture_period)
        return FlatTextureSource(grid)

    def _load_trace(self, correlation_id: Optional[str], cfg: RunConfig) -> SequenceTrace:
        cfg.require('trace')
        trace = SequenceTrace.load(cfg.trace, correlation_id)
        if cfg.width is not None and (cfg.width, cfg.height) != (trace.grid.frame_width, trace.grid.frame_height):
            raise ConfigException(
                correlation_id, 'GEOMETRY_MISMATCH',
                'Trace frames are ' + str(trace.grid.frame_width) + 'x' + str(trace.grid.frame_height)
            )
        return trace

    def cmd_partition(self, correlation_id: Optional[str], cfg: RunConfig):
        """
        Partitions one frame of a raw file, using the times of earlier frames of the
        trace (first QP) when a trace is given.
        """
        cfg.require('yuv')
        trace = self._load_trace(correlation_id, cfg) if cfg.trace is not None else None
        grid = trace.grid if trace is not None else cfg.grid()

        history = CostHistory(grid, trace.gop_size if trace is not None else cfg.gop)
        if trace is not None:
            order = trace.encode_order
            previous = order[:order.index(cfg.poc)] if cfg.poc in order else []
            for poc in previous:
                costs = trace.get(poc, cfg.qps[0])
                if costs is not None:
                    history.append(costs, correlation_id)

        stats = YuvTextureSource(cfg.yuv, grid, cfg.bit_depth).get_stats(correlation_id, cfg.poc)
        search_cfg = SearchConfig(cfg.threads[0], cfg.lam, cfg.k_area, cfg.family, cfg.max_tile_cols, cfg.estimator)
        outcome = self._search.two_step_partition(correlation_id, history, stats, cfg.poc, search_cfg)

        render = PartitionRenderer.render_ascii(outcome.best)
        if cfg.out is not None:
            self._write(correlation_id, cfg.out, 'partition.json', self._dump(outcome.best.to_json()))
            self._write(correlation_id, cfg.out, 'partition.txt', render + '\n')
            self._write(correlation_id, cfg.out, 'search.json', self._dump(outcome.to_json(with_times=False)))
        self._print('t_min=' + str(outcome.t_min) + ' t_best=' + str(outcome.t_best) + ' sse=' + str(outcome.sse_best))
        self._print(render)

    def _simulate(self, correlation_id: Optional[str], cfg: RunConfig, trace: SequenceTrace,
                  texture: ITextureSource, n: int, lam: float, baseline: BaselineMode) -> SimReport:
        sim_cfg = cfg.sim_config(n, lam)
        if baseline != sim_cfg.baseline:
            sim_cfg = sim_cfg.with_baseline(baseline)
        return self._simulator.simulate_sequence(correlation_id, trace, sim_cfg, texture)

    def cmd_simulate(self, correlation_id: Optional[str], cfg: RunConfig):
        """
        Simulates the trace for every thread count and writes the comparison tables,
        the JSON reports and the per-frame CSV.
        """
        trace = self._load_trace(correlation_id, cfg)
        texture = self._texture_source(cfg, trace)

        tables, csv_parts, reports = [], [], []
        for i, n in enumerate(cfg.threads):
            report = self._simulate(correlation_id, cfg, trace, texture, n, cfg.lam, cfg.baseline)
            table = SequenceSimulator.compare_baseline(report.proposed, report.uniform, n, cfg.lam, cfg.seq_frac)
            tables.append(table)
            reports.append(report.to_json())
            csv_parts.append(report.to_csv(with_header=(i == 0)))

        text = '\n'.join(t.format_text() for t in tables)
        if cfg.out is not None:
            self._write(correlation_id, cfg.out, 'comparison.txt', text)
            self._write(correlation_id, cfg.out, 'comparison.json', self._dump([t.to_json() for t in tables]))
            self._write(correlation_id, cfg.out, 'report.json', self._dump(reports))
            self._write(correlation_id, cfg.out, 'frames.csv', ''.join(csv_parts))
        self._print(text)

    def cmd_sweep(self, correlation_id: Optional[str], cfg: RunConfig):
        """
        Simulates every (thread count, lambda) pair, checks that the SSE proxy does not
        grow with lambda and marks the selected trade-off.
        """
        trace = self._load_trace(correlation_id, cfg)
        texture = self._texture_source(cfg, trace)

        chart = SvgLineChart('Speed-up versus lambda', 'lambda', 'sigma')
        csv_parts: List[str] = []
        for i, n in enumerate(cfg.threads):
            rows, uniform_sse = [], None
            for j, lam in enumerate(sorted(cfg.lambdas)):
                baseline = cfg.baseline if j == 0 else BaselineMode.NoBaseline
                report = self._simulate(correlation_id, cfg, trace, texture, n, lam, baseline)
                if report.uniform is not None:
                    uniform_sse = report.uniform.total_sse
                rows.append(SweepRow.from_report(report))

            sweep = LambdaSweep(rows, uniform_sse)
            sweep.check_monotonic(correlation_id)
            csv_parts.append(sweep.to_csv(with_header=(i == 0)))
            chart.add_series('N=' + str(n), [r.lam for r in sweep.rows], [r.sigma for r in sweep.rows])

        text = ''.join(csv_parts)
        if cfg.out is not None:
            self._write(correlation_id, cfg.out, 'sweep.csv', text)
            self._write(correlation_id, cfg.out, 'sweep.svg', chart.render())
        self._print(text)

    def cmd_validate(self, correlation_id: Optional[str], cfg: RunConfig):
        """
        Re-validates a partition file and prints its rendering.
        """
        cfg.require('partition')
        try:
            with open(cfg.partition, 'r') as f:
                document = f.read()
        except OSError as err:
            raise FileException(correlation_id, 'READ_FAILED', 'Cannot read ' + cfg.partition + ': ' + str(err))
        p = Partition.from_json(document)
        self._print('valid: ' + str(p.slice_count) + ' slices, ' + str(len(p.tiles.col_widths)) + 'x'
                    + str(len(p.tiles.row_heights)) + ' tiles, area ratio ' + str(p.area_ratio()))
        self._print(PartitionRenderer.render_ascii(p))

    def cmd_stats(self, correlation_id: Optional[str], cfg: RunConfig):
        """
        Writes the texture statistics cache file of one picture.
        """
        cfg.require('yuv', 'out')
        stats = YuvTextureSource(cfg.yuv, cfg.grid(), cfg.bit_depth).get_stats(correlation_id, cfg.poc)
        os.makedirs(cfg.out, exist_ok=True)
        path = StatsCacheTextureSource.write(cfg.out, stats, correlation_id)
        self._print(path)

    def cmd_synth(self, correlation_id: Optional[str], cfg: RunConfig):
        """
        Generates a synthetic raw file and its trace in the output directory.
        """
        cfg.require('out')
        grid = RunConfig(cfg.command, width=cfg.width or 512, height=cfg.height or 384, ctu=cfg.ctu).grid()
        generator = SyntheticTraceGenerator(grid, cfg.scenario, cfg.seed, cfg.noise, cfg.bit_depth)
        lumas, trace = generator.generate(cfg.frames, cfg.qps, cfg.gop, 'frames.yuv')
        try:
            os.makedirs(cfg.out, exist_ok=True)
        except OSError as err:
            raise FileException(correlation_id, 'WRITE_FAILED', 'Cannot create ' + cfg.out + ': ' + str(err))
        YuvFile.write_frames(os.path.join(cfg.out, 'frames.yuv'), lumas, cfg.bit_depth, correlation_id)
        trace.save(cfg.out, correlation_id)
        self._print('wrote ' + str(len(lumas)) + ' frames and ' + str(len(lumas) * len(cfg.qps))
                    + ' cost maps to ' + cfg.out)
