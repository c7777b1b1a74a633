# -*- coding: utf-8 -*-
from dataclasses import dataclass
from typing import Optional

from pip_services3_commons.errors import ConfigException

from .SearchFamily import SearchFamily
from ..cost import CO_TEMPORAL_LAYER, ESTIMATOR_MODES
from ..grid import CtuGrid


@dataclass(frozen=True)
class SearchConfig:
    """
    Parameters of the two-step partition search.

    :param n_slices: number of slices, one per encoding thread.
    :param lam: trade-off parameter; the time budget of the clustering step is t_min * (1 + lam).
    :param k_area: area ratio constant of the strict constraint k * A_min > A_max.
    :param family: candidate family.
    :param max_tile_cols: (optional) cap on tile columns, defaults to n_slices.
    :param estimator: CTU time estimator mode, ``co_tl`` or ``closest``.
    """

    n_slices: int
    lam: float = 0.0
    k_area: float = 3.0
    family: SearchFamily = SearchFamily.ColumnSplit
    max_tile_cols: Optional[int] = None
    estimator: str = CO_TEMPORAL_LAYER

    def __post_init__(self):
        if self.n_slices < 1:
            raise ConfigException(None, 'BAD_SLICE_COUNT', 'Slice count must be at least 1')
        if self.lam < 0:
            raise ConfigException(None, 'BAD_LAMBDA', 'Lambda must not be negative')
        if self.k_area <= 1:
            raise ConfigException(None, 'BAD_K_AREA', 'Area ratio constant must be greater than 1')
        if self.max_tile_cols is not None and self.max_tile_cols < 1:
            raise ConfigException(None, 'BAD_TILE_COLS', 'Tile column cap must be at least 1')
        if self.estimator not in ESTIMATOR_MODES:
            raise ConfigException(None, 'BAD_ESTIMATOR', 'Unknown estimator mode ' + str(self.estimator))
        object.__setattr__(self, 'family', SearchFamily(self.family))

    def tile_col_cap(self, grid: CtuGrid) -> int:
        cap = self.n_slices if self.max_tile_cols is None else self.max_tile_cols
        return min(self.n_slices, cap, grid.cols)

    def with_lambda(self, lam: float) -> 'SearchConfig':
        return SearchConfig(self.n_slices, lam, self.k_area, self.family, self.max_tile_cols, self.estimator)
