# -*- coding: utf-8 -*-
from typing import List, Optional, Tuple

from .CtuGrid import CtuGrid
from .Partition import Partition
from .PartitionOrigin import PartitionOrigin
from .PartitionValidator import PartitionValidator
from .RectSlice import RectSlice
from .TileGrid import TileGrid
from ..errors import GeometryException


class UniformPartitioner:
    """
    Builds the uniform baseline: a grid of slices of (almost) the same dimension.

    The slice count n is factorized into r rows x c columns forming the most square
    grid (smallest |r - c|), then the smallest largest slice; remaining ties go to
    more columns. Remainder CTU columns and rows go
    to the first slices in raster order. When no factorization fits the CTU grid,
    the frame is cut into min(cols, n) tile columns, each split into runs of CTU rows.
    """

    @staticmethod
    def split(total: int, parts: int) -> List[int]:
        """
        Splits total into parts positive sizes differing by at most one, larger first.
        """
        base, rest = divmod(total, parts)
        return [base + 1 if i < rest else base for i in range(parts)]

    @staticmethod
    def choose_factorization(grid: CtuGrid, n: int) -> Optional[Tuple[int, int]]:
        """
        Picks (rows, cols) with rows * cols = n: most square grid first, then the
        smallest largest slice, then more columns.

        :return: the factorization or None when no factorization fits the grid.
        """
        best = None
        best_key = None
        for c in range(1, n + 1):
            if n % c != 0:
                continue
            r = n // c
            if c > grid.cols or r > grid.rows:
                continue
            max_area = -(-grid.cols // c) * -(-grid.rows // r)
            key = (abs(r - c), max_area, -c)
            if best_key is None or key < best_key:
                best, best_key = (r, c), key
        return best

    @staticmethod
    def partition(grid: CtuGrid, n: int, correlation_id: Optional[str] = None) -> Partition:
        """
        Creates the uniform partition with n slices.

        :param grid: the CTU grid.
        :param n: the number of slices (threads).
        :param correlation_id: (optional) transaction id to trace execution through call chain.
        :return: a validated partition with origin Uniform.
        """
        if n < 1 or n > grid.cell_count:
            raise GeometryException(
                correlation_id, 'TOO_MANY_SLICES',
                'Cannot split ' + str(grid.cell_count) + ' CTUs into ' + str(n) + ' slices'
            )

        factorization = UniformPartitioner.choose_factorization(grid, n)
        slices = []
        if factorization is not None:
            r, c = factorization
            widths = UniformPartitioner.split(grid.cols, c)
            heights = UniformPartitioner.split(grid.rows, r)
            tiles = TileGrid(tuple(widths), tuple(heights))
            for y0, h in zip(tiles.row_bounds, heights):
                for x0, w in zip(tiles.col_bounds, widths):
                    slices.append(RectSlice(len(slices), x0, y0, w, h))
        else:
            c = min(grid.cols, n)
            widths = UniformPartitioner.split(grid.cols, c)
            runs = UniformPartitioner.split(n, c)
            tiles = TileGrid(tuple(widths), (grid.rows,))
            for x0, w, r in zip(tiles.col_bounds, widths, runs):
                y0 = 0
                for h in UniformPartitioner.split(grid.rows, r):
                    slices.append(RectSlice(len(slices), x0, y0, w, h))
                    y0 += h
            # Raster order of ids.
            slices.sort(key=lambda s: (s.y0, s.x0))
            slices = [RectSlice(i, s.x0, s.y0, s.w, s.h) for i, s in enumerate(slices)]

        return PartitionValidator.validate(grid, tiles, slices, PartitionOrigin.Uniform, correlation_id)
