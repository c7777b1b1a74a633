# -*- coding: utf-8 -*-
"""
    slicecraft.search.PartitionSearch
    ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~

    Two-step tile + rectangular slice partition search.

    :license: MIT, see LICENSE for more details.
"""
import os
import threading
import time
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from itertools import islice
from typing import Callable, Iterable, Iterator, List, Optional, Tuple

from pip_services3_commons.config import ConfigParams, IConfigurable
from pip_services3_commons.errors import InvalidStateException
from pip_services3_commons.refer import IReferenceable, IReferences
from pip_services3_components.count import CompositeCounters
from pip_services3_components.log import CompositeLogger

from .CandidateEnumerator import CandidateEnumerator
from .CandidateEvaluator import CandidateEvaluator
from .ColumnLayout import ColumnLayout, Layout
from .SearchConfig import SearchConfig
from .SearchFamily import SearchFamily
from .SearchOutcome import SearchOutcome
from ..cost import CostEstimator, CostHistory, CostMap
from ..errors import GeometryException, NoCandidateException
from ..grid import CtuGrid, Partition, PartitionOrigin, UniformPartitioner
from ..texture import TextureStats

WORKERS_ENV = 'SLICECRAFT_WORKERS'

# (key, enumeration index, layout) of the best candidate of a batch.
Best = Optional[Tuple[tuple, int, Layout]]


class PartitionSearch(IConfigurable, IReferenceable):
    """
    Searches the partition of a frame in two steps: first the minimum estimated frame
    time over the candidate family, then the candidate minimizing the luma clustering
    objective among those whose estimated time fits the budget t_min * (1 + lambda).

    Candidates are evaluated in batches by a pool of worker threads. Each batch reports
    its best (key, enumeration index) and the reduction takes the smallest pair, so the
    result does not depend on the number of workers or on their scheduling.

    ### Configuration parameters ###
        - workers:       number of evaluation threads (default: SLICECRAFT_WORKERS or 1)
        - chunk_size:    candidates per batch (default: 2048)

    ### References ###
        - `*:logger:*:*:1.0`       (optional) :class:`ILogger <pip_services3_components.log.ILogger.ILogger>` components to pass log messages
        - `*:counters:*:*:1.0`     (optional) :class:`ICounters <pip_services3_components.count.ICounters.ICounters>` components to pass collected measurements

    Example:

    .. code-block:: python

        search = PartitionSearch()
        search.configure(ConfigParams.from_tuples('workers', 4))

        cfg = SearchConfig(n_slices=8, lam=0.1)
        outcome = search.two_step_partition('123', history, stats, poc, cfg)
        print(outcome.t_best, outcome.sse_best)
    """

    def __init__(self):
        self._logger: CompositeLogger = CompositeLogger()
        self._counters: CompositeCounters = CompositeCounters()
        self.__workers: int = max(1, int(os.environ.get(WORKERS_ENV, '1') or '1'))
        self.__chunk_size: int = 2048

    def configure(self, config: ConfigParams):
        """
        Configures component by passing configuration parameters.

        :param config: configuration parameters to be set.
        """
        self.__workers = max(1, config.get_as_integer_with_default('workers', self.__workers))
        self.__chunk_size = max(1, config.get_as_integer_with_default('chunk_size', self.__chunk_size))

    def set_references(self, references: IReferences):
        """
        Sets references to dependent components.

        :param references: references to locate the component dependencies.
        """
        self._logger.set_references(references)
        self._counters.set_references(references)

    @property
    def workers(self) -> int:
        return self.__workers

    def enumerate_candidates(self, grid: CtuGrid, cfg: SearchConfig) -> Iterator[Partition]:
        """
        Streams every candidate partition of the configured family satisfying the strict
        area constraint, in deterministic order.

        :param grid: the CTU grid.
        :param cfg: search parameters.
        :return: validated partitions.
        """
        if cfg.family == SearchFamily.UniformOnly:
            uniform = UniformPartitioner.partition(grid, cfg.n_slices)
            if uniform.satisfies_area_constraint(cfg.k_area):
                yield uniform
            return
        for layout in CandidateEnumerator(grid, cfg).layouts():
            yield ColumnLayout.to_partition(layout, grid)

    def min_time_search(self, correlation_id: Optional[str], est: CostMap, grid: CtuGrid,
                        cfg: SearchConfig) -> Tuple[float, Partition]:
        """
        Finds the minimum estimated frame time over the candidate family.
        Ties go to the first candidate in enumeration order.

        :param correlation_id: (optional) transaction id to trace execution through call chain.
        :param est: estimated CTU times of the frame.
        :param grid: the CTU grid.
        :param cfg: search parameters.
        :return: the minimum time and a partition attaining it.
        :raises NoCandidateException: when no candidate satisfies the area constraint.
        """
        t_min, layout, _ = self._min_time(correlation_id, CandidateEvaluator(est), grid, cfg)
        return t_min, self._materialize(layout, grid, cfg)

    def constrained_clustering_search(self, correlation_id: Optional[str], est: CostMap,
                                      stats: Optional[TextureStats], t_min: float,
                                      cfg: SearchConfig) -> SearchOutcome:
        """
        Picks the candidate with the smallest clustering objective among those whose
        estimated time does not exceed t_min * (1 + lambda). Ties go to the smaller
        estimated time, then to enumeration order.

        :param correlation_id: (optional) transaction id to trace execution through call chain.
        :param est: estimated CTU times of the frame, the same map t_min was computed on.
        :param stats: texture statistics of the frame; None means flat texture.
        :param t_min: minimum estimated time from :func:`min_time_search`.
        :param cfg: search parameters.
        :return: the search outcome.
        """
        evaluator = CandidateEvaluator(est, stats)
        return self._cluster(correlation_id, evaluator, est, t_min, None, cfg)

    def two_step_partition(self, correlation_id: Optional[str], history: CostHistory,
                           stats: Optional[TextureStats], poc: int, cfg: SearchConfig) -> SearchOutcome:
        """
        Runs the partitioning stage for one frame: estimates its CTU times from the
        history, minimizes the estimated time, then clusters texture under the time budget.

        :param correlation_id: (optional) transaction id to trace execution through call chain.
        :param history: true times of previously encoded frames of the same run.
        :param stats: texture statistics of the frame; None means flat texture.
        :param poc: picture order count of the frame.
        :param cfg: search parameters.
        :return: the search outcome, with per-step wall-clock times.
        """
        est = CostEstimator.estimate_ctu_times(history, poc, cfg.estimator)
        if stats is not None and stats.grid != est.grid:
            raise GeometryException(correlation_id, 'GRID_MISMATCH', 'Texture grid differs from cost grid')
        evaluator = CandidateEvaluator(est, stats)

        timing = self._counters.begin_timing('search.step1')
        started = time.perf_counter()
        t_min, _, count = self._min_time(correlation_id, evaluator, est.grid, cfg)
        step1_time = time.perf_counter() - started
        timing.end_timing()

        timing = self._counters.begin_timing('search.step2')
        started = time.perf_counter()
        outcome = self._cluster(correlation_id, evaluator, est, t_min, count, cfg)
        step2_time = time.perf_counter() - started
        timing.end_timing()

        self._logger.debug(
            correlation_id,
            'Partitioned poc ' + str(poc) + ' from ' + est.source.value + ' estimate: t_min=' + str(t_min)
            + ' t_best=' + str(outcome.t_best) + ' sse=' + str(outcome.sse_best)
            + ' over ' + str(count) + ' candidates'
        )
        return SearchOutcome(
            outcome.best, outcome.t_min, outcome.t_best, outcome.sse_best, outcome.candidates_evaluated,
            outcome.feasible_candidates, outcome.lam, outcome.family, step1_time, step2_time,
            est.source, est.source_poc
        )

    def _layouts(self, grid: CtuGrid, cfg: SearchConfig) -> Iterator[Layout]:
        if cfg.family == SearchFamily.UniformOnly:
            uniform = UniformPartitioner.partition(grid, cfg.n_slices)
            if uniform.satisfies_area_constraint(cfg.k_area):
                yield ColumnLayout.from_partition(uniform)
            return
        yield from CandidateEnumerator(grid, cfg).layouts()

    def _materialize(self, layout: Layout, grid: CtuGrid, cfg: SearchConfig) -> Partition:
        if cfg.family == SearchFamily.UniformOnly:
            return UniformPartitioner.partition(grid, cfg.n_slices).with_origin(PartitionOrigin.Proposed)
        return ColumnLayout.to_partition(layout, grid, PartitionOrigin.Proposed)

    def _min_time(self, correlation_id: Optional[str], evaluator: CandidateEvaluator, grid: CtuGrid,
                  cfg: SearchConfig) -> Tuple[float, Layout, int]:
        def best_time(start: int, batch: List[Layout]) -> Best:
            best = None
            for offset, layout in enumerate(batch):
                key = (evaluator.time_of(layout),)
                if best is None or key < best[0]:
                    best = (key, start + offset, layout)
            return best

        best, count = self._reduce(correlation_id, self._layouts(grid, cfg), best_time)
        self._counters.increment('search.candidates', count)
        if best is None:
            raise NoCandidateException(
                correlation_id, 'NO_CANDIDATE',
                'No ' + cfg.family.value + ' candidate with ' + str(cfg.n_slices) + ' slices on grid '
                + str(grid) + ' satisfies ' + str(cfg.k_area) + ' * A_min > A_max'
            )
        return best[0][0], best[2], count

    def _cluster(self, correlation_id: Optional[str], evaluator: CandidateEvaluator, est: CostMap,
                 t_min: float, count: Optional[int], cfg: SearchConfig) -> SearchOutcome:
        budget = t_min * (1 + cfg.lam)
        feasible = [0]
        lock = threading.Lock()

        def best_clustering(start: int, batch: List[Layout]) -> Best:
            best = None
            hits = 0
            for offset, layout in enumerate(batch):
                t = evaluator.time_of(layout)
                if t > budget:
                    continue
                hits += 1
                key = (evaluator.sse_of(layout), t)
                if best is None or key < best[0]:
                    best = (key, start + offset, layout)
            with lock:
                feasible[0] += hits
            return best

        best, total = self._reduce(correlation_id, self._layouts(est.grid, cfg), best_clustering)
        if best is None:
            if total == 0:
                raise NoCandidateException(
                    correlation_id, 'NO_CANDIDATE', 'No candidate satisfies the area constraint'
                )
            # t_min comes from the same enumeration, so its argmin is always feasible.
            raise InvalidStateException(
                correlation_id, 'EMPTY_BUDGET', 'No candidate fits the time budget ' + str(budget)
            )
        (sse, t), _, layout = best
        return SearchOutcome(
            self._materialize(layout, est.grid, cfg), t_min, t, sse,
            total if count is None else count, feasible[0], cfg.lam, cfg.family,
            estimate_source=est.source, estimate_source_poc=est.source_poc
        )

    def _reduce(self, correlation_id: Optional[str], layouts: Iterable[Layout],
                scorer: Callable[[int, List[Layout]], Best]) -> Tuple[Best, int]:
        """
        Scores layouts in batches, in parallel when more than one worker is configured,
        and keeps the smallest (key, index) pair.
        """
        iterator = iter(layouts)
        results: List[Best] = []
        count = 0

        def batches() -> Iterator[Tuple[int, List[Layout]]]:
            nonlocal count
            while True:
                batch = list(islice(iterator, self.__chunk_size))
                if not batch:
                    return
                yield count, batch
                count += len(batch)

        if self.__workers == 1:
            for start, batch in batches():
                results.append(scorer(start, batch))
        else:
            with ThreadPoolExecutor(max_workers=self.__workers) as executor:
                pending = deque()
                for start, batch in batches():
                    pending.append(executor.submit(scorer, start, batch))
                    if len(pending) >= 2 * self.__workers:
                        results.append(pending.popleft().result())
                while pending:
                    results.append(pending.popleft().result())

        self._logger.trace(correlation_id, 'Scored ' + str(count) + ' candidates in ' + str(len(results)) + ' batches')
        best = None
        for r in results:
            if r is not None and (best is None or (r[0], r[1]) < (best[0], best[1])):
                best = r
        return best, count
