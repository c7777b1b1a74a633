# -*- coding: utf-8 -*-
from fractions import Fraction
from typing import Optional

import numpy as np

from .TextureStats import TextureStats
from ..errors import GeometryException
from ..grid import CtuGrid, Partition


class TextureAnalyzer:
    """
    Computes per-CTU luma statistics and the slice clustering objective: the sum over
    slices of the squared deviation of every luma sample from its slice mean.

    The objective is evaluated from aggregated CTU statistics as
    sum_j [sumsq(s_j) - sum(s_j)^2 / count(s_j)], which equals the per-pixel form
    exactly and costs one rectangle query per slice.
    """

    @staticmethod
    def ctu_stats(luma: np.ndarray, grid: CtuGrid, poc: int = 0,
                  correlation_id: Optional[str] = None) -> TextureStats:
        """
        Accumulates count, sum and sum of squares of every CTU with exact integer arithmetic.

        :param luma: frame_height x frame_width luma plane.
        :param grid: the CTU grid of the frame.
        :param poc: picture order count of the frame.
        :param correlation_id: (optional) transaction id to trace execution through call chain.
        :return: the statistics.
        """
        luma = np.asarray(luma)
        if luma.shape != (grid.frame_height, grid.frame_width):
            raise GeometryException(
                correlation_id, 'BAD_PLANE_SIZE',
                'Luma plane ' + str(luma.shape) + ' does not match grid ' + str(grid)
            )
        samples = luma.astype(np.int64)
        row_starts = np.arange(0, grid.frame_height, grid.ctu_size)
        col_starts = np.arange(0, grid.frame_width, grid.ctu_size)

        def per_ctu(values: np.ndarray) -> np.ndarray:
            return np.add.reduceat(np.add.reduceat(values, row_starts, axis=0), col_starts, axis=1)

        heights = np.array([grid.ctu_pixel_height(y) for y in range(grid.rows)], dtype=np.int64)
        widths = np.array([grid.ctu_pixel_width(x) for x in range(grid.cols)], dtype=np.int64)
        return TextureStats(grid, np.outer(heights, widths), per_ctu(samples), per_ctu(samples * samples), poc)

    @staticmethod
    def partition_sse(stats: TextureStats, p: Partition, correlation_id: Optional[str] = None) -> float:
        """
        Evaluates the clustering objective of a partition.

        :param stats: texture statistics of the frame.
        :param p: a partition on the same grid.
        :param correlation_id: (optional) transaction id to trace execution through call chain.
        :return: the sum of within-slice squared luma deviations.
        """
        TextureAnalyzer._check_grid(stats, p, correlation_id)
        return sum(stats.slice_sse(s) for s in p.slices)

    @staticmethod
    def partition_sse_exact(stats: TextureStats, p: Partition, correlation_id: Optional[str] = None) -> Fraction:
        """
        Same as :func:`partition_sse` but returns the exact rational value.
        """
        TextureAnalyzer._check_grid(stats, p, correlation_id)
        return sum((stats.slice_sse_exact(s) for s in p.slices), Fraction(0))

    @staticmethod
    def _check_grid(stats: TextureStats, p: Partition, correlation_id: Optional[str]):
        if stats.grid != p.grid:
            raise GeometryException(
                correlation_id, 'GRID_MISMATCH',
                'Texture grid ' + str(stats.grid) + ' differs from partition grid ' + str(p.grid)
            )
