# -*- coding: utf-8 -*-
from dataclasses import dataclass
from typing import Optional, Tuple

from pip_services3_commons.errors import ConfigException

from .BaselineMode import BaselineMode
from ..cost import CO_TEMPORAL_LAYER, GopStructure
from ..search import SearchConfig, SearchFamily

DEFAULT_QPS = (22, 27, 32, 37)


@dataclass(frozen=True)
class SimConfig:
    """
    Parameters of a multi-thread encoding simulation.

    :param n_threads: number of threads, one slice each.
    :param qps: quantizers of the encoding runs averaged by the speed-up.
    :param seq_frac: sequential part of the encoder, as a ratio of each frame time.
    :param lam: trade-off parameter of the clustering step.
    :param gop_size: random access GOP size.
    :param baseline: whether to replay the uniform partitioning too.
    """

    n_threads: int
    qps: Tuple[int, ...] = DEFAULT_QPS
    seq_frac: float = 0.04
    lam: float = 0.0
    gop_size: int = 16
    baseline: BaselineMode = BaselineMode.Uniform
    k_area: float = 3.0
    family: SearchFamily = SearchFamily.ColumnSplit
    max_tile_cols: Optional[int] = None
    estimator: str = CO_TEMPORAL_LAYER

    def __post_init__(self):
        object.__setattr__(self, 'qps', tuple(int(q) for q in self.qps))
        object.__setattr__(self, 'baseline', BaselineMode(self.baseline))
        if not 0 <= self.seq_frac < 1:
            raise ConfigException(None, 'BAD_SEQ_FRAC', 'Sequential fraction must be within [0, 1)')
        if len(self.qps) == 0:
            raise ConfigException(None, 'NO_QPS', 'At least one QP is required')
        if self.n_threads < 1:
            raise ConfigException(None, 'BAD_THREADS', 'Thread count must be at least 1')
        GopStructure.check_gop_size(self.gop_size)

    def search_config(self) -> SearchConfig:
        return SearchConfig(self.n_threads, self.lam, self.k_area, self.family, self.max_tile_cols, self.estimator)

    def with_lambda(self, lam: float) -> 'SimConfig':
        return SimConfig(self.n_threads, self.qps, self.seq_frac, lam, self.gop_size, self.baseline,
                         self.k_area, self.family, self.max_tile_cols, self.estimator)

    def with_threads(self, n_threads: int) -> 'SimConfig':
        return SimConfig(n_threads, self.qps, self.seq_frac, self.lam, self.gop_size, self.baseline,
                         self.k_area, self.family, self.max_tile_cols, self.estimator)

    def with_baseline(self, baseline: BaselineMode) -> 'SimConfig':
        return SimConfig(self.n_threads, self.qps, self.seq_frac, self.lam, self.gop_size, baseline,
                         self.k_area, self.family, self.max_tile_cols, self.estimator)
