# -*- coding: utf-8 -*-
from typing import List, Optional

import numpy as np

from ..cost import CostMap
from ..grid import CtuGrid, Partition, PartitionValidator, RectSlice, TileGrid


class RandomInstances:
    """
    Seeded generators of grids, cost maps and legal partitions for property tests.
    """

    def __init__(self, seed: int):
        self.__rng = np.random.default_rng(seed)

    @property
    def rng(self) -> np.random.Generator:
        return self.__rng

    def grid(self, max_cols: int = 6, max_rows: int = 6, ctu_size: int = 32) -> CtuGrid:
        cols = int(self.__rng.integers(1, max_cols + 1))
        rows = int(self.__rng.integers(1, max_rows + 1))
        return CtuGrid.from_cells(cols, rows, ctu_size)

    def cost_map(self, grid: CtuGrid, poc: int = 0, high: int = 100, temporal_layer: int = 0,
                 qp: Optional[int] = None) -> CostMap:
        """
        Integer-valued times, so sums compare exactly.
        """
        times = self.__rng.integers(0, high + 1, size=(grid.rows, grid.cols)).astype(np.float64)
        return CostMap(grid, times, poc, temporal_layer, qp)

    def luma(self, grid: CtuGrid, bit_depth: int = 8) -> np.ndarray:
        top = 1 << bit_depth
        dtype = np.uint8 if bit_depth == 8 else np.uint16
        return self.__rng.integers(0, top, size=(grid.frame_height, grid.frame_width)).astype(dtype)

    def _cuts(self, total: int) -> List[int]:
        parts = int(self.__rng.integers(1, total + 1))
        inner = sorted(self.__rng.choice(np.arange(1, total), size=parts - 1, replace=False).tolist()) \
            if parts > 1 else []
        bounds = [0] + inner + [total]
        return [b - a for a, b in zip(bounds, bounds[1:])]

    def partition(self, grid: CtuGrid) -> Partition:
        """
        A random legal partition: random tile grid, each tile kept whole or split into row runs.
        """
        widths = self._cuts(grid.cols)
        heights = self._cuts(grid.rows)
        tiles = TileGrid(tuple(widths), tuple(heights))
        slices = []
        for y0, h in zip(tiles.row_bounds, heights):
            for x0, w in zip(tiles.col_bounds, widths):
                y = y0
                for run in self._cuts(h):
                    slices.append(RectSlice(len(slices), x0, y, w, run))
                    y += run
        return PartitionValidator.validate(grid, tiles, slices)
