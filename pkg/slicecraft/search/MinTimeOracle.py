# -*- coding: utf-8 -*-
from itertools import combinations, product
from typing import Optional

import numpy as np

from .SearchConfig import SearchConfig
from ..cost import CostMap
from ..errors import SizeLimitException

MAX_ORACLE_CELLS = 8
MAX_ORACLE_SLICES = 4


class MinTimeOracle:
    """
    Brute-force reference for the minimum estimated frame time over the column-split
    family. Enumerates cut positions directly, sums CTU times cell by cell and applies
    the area constraint only at the end. Meant for verification on small grids.
    """

    @staticmethod
    def oracle_min_time(est: CostMap, cfg: SearchConfig, correlation_id: Optional[str] = None) -> Optional[float]:
        """
        :param est: estimated CTU times.
        :param cfg: search parameters (n_slices, k_area, max_tile_cols).
        :param correlation_id: (optional) transaction id to trace execution through call chain.
        :return: the minimum frame time, or None when no candidate satisfies the constraint.
        :raises SizeLimitException: beyond 8x8 CTUs or 4 slices.
        """
        grid = est.grid
        n = cfg.n_slices
        if grid.cols > MAX_ORACLE_CELLS or grid.rows > MAX_ORACLE_CELLS or n > MAX_ORACLE_SLICES:
            raise SizeLimitException(
                correlation_id, 'SIZE_LIMIT',
                'Oracle is limited to ' + str(MAX_ORACLE_CELLS) + 'x' + str(MAX_ORACLE_CELLS)
                + ' CTUs and ' + str(MAX_ORACLE_SLICES) + ' slices'
            )
        times = np.asarray(est.times)
        best = None
        for c in range(1, cfg.tile_col_cap(grid) + 1):
            for col_cuts in combinations(range(1, grid.cols), c - 1):
                xs = (0,) + col_cuts + (grid.cols,)
                for runs in product(range(1, n + 1), repeat=c):
                    if sum(runs) != n:
                        continue
                    choices = [list(combinations(range(1, grid.rows), r - 1)) for r in runs]
                    for row_cuts in product(*choices):
                        slice_times = []
                        areas = []
                        for i, cuts in enumerate(row_cuts):
                            ys = (0,) + cuts + (grid.rows,)
                            for j in range(len(ys) - 1):
                                block = times[ys[j]:ys[j + 1], xs[i]:xs[i + 1]]
                                total = 0.0
                                for value in block.ravel():
                                    total += float(value)
                                slice_times.append(total)
                                areas.append(block.size)
                        if not cfg.k_area * min(areas) > max(areas):
                            continue
                        t = max(slice_times)
                        if best is None or t < best:
                            best = t
        return best
