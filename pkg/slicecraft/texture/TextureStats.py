# -*- coding: utf-8 -*-
"""
    slicecraft.texture.TextureStats
    ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~

    Per-CTU luma sufficient statistics.

    :license: MIT, see LICENSE for more details.
"""
from fractions import Fraction
from typing import Any, Tuple

import numpy as np

from ..errors import FrameFormatException, GeometryException
from ..grid import CtuGrid, RectSlice, SummedAreaTable


class TextureStats:
    """
    Sample count, sum and sum of squares of the luma samples of every CTU of one frame.

    These three aggregates are enough to evaluate the within-slice squared deviation of
    any union of CTUs exactly. Instances are immutable once built.
    """

    def __init__(self, grid: CtuGrid, counts: np.ndarray, sums: np.ndarray, sumsqs: np.ndarray, poc: int = 0):
        """
        Creates statistics from rows x cols arrays.

        :param grid: the CTU grid.
        :param counts: samples per CTU.
        :param sums: luma sum per CTU.
        :param sumsqs: luma sum of squares per CTU.
        :param poc: picture order count of the frame.
        """
        shape = (grid.rows, grid.cols)
        arrays = []
        for name, values in (('counts', counts), ('sums', sums), ('sumsqs', sumsqs)):
            values = np.array(values, dtype=np.int64)
            if values.shape != shape:
                raise GeometryException(
                    None, 'BAD_STATS_SHAPE', name + ' has shape ' + str(values.shape) + ', expected ' + str(shape)
                )
            values.setflags(write=False)
            arrays.append(values)

        self.__grid = grid
        self.__counts, self.__sums, self.__sumsqs = arrays
        self.__poc = poc
        self.__tables = tuple(SummedAreaTable(a) for a in arrays)

    @staticmethod
    def flat(grid: CtuGrid, poc: int = 0) -> 'TextureStats':
        """
        Creates statistics of a frame with constant luma, so every partition has zero SSE.
        """
        counts = np.array([[grid.ctu_pixel_width(x) * grid.ctu_pixel_height(y) for x in range(grid.cols)]
                           for y in range(grid.rows)], dtype=np.int64)
        zeros = np.zeros((grid.rows, grid.cols), dtype=np.int64)
        return TextureStats(grid, counts, zeros, zeros, poc)

    @property
    def grid(self) -> CtuGrid:
        return self.__grid

    @property
    def poc(self) -> int:
        return self.__poc

    @property
    def counts(self) -> np.ndarray:
        return self.__counts

    @property
    def sums(self) -> np.ndarray:
        return self.__sums

    @property
    def sumsqs(self) -> np.ndarray:
        return self.__sumsqs

    def rect_aggregates(self, x0: int, y0: int, w: int, h: int) -> Tuple[int, int, int]:
        """
        Gets (count, sum, sum of squares) of a rectangle of CTUs as Python ints.
        """
        return tuple(t.rectangle_sum(x0, y0, w, h) for t in self.__tables)

    def rect_sse_numerator(self, x0: int, y0: int, w: int, h: int) -> Tuple[int, int]:
        """
        Gets the rectangle SSE as an exact fraction (count * sumsq - sum^2, count).
        """
        count, total, sq = self.rect_aggregates(x0, y0, w, h)
        return count * sq - total * total, count

    def rect_sse(self, x0: int, y0: int, w: int, h: int) -> float:
        numerator, count = self.rect_sse_numerator(x0, y0, w, h)
        return numerator / count

    def slice_sse(self, s: RectSlice) -> float:
        return self.rect_sse(s.x0, s.y0, s.w, s.h)

    def slice_sse_exact(self, s: RectSlice) -> Fraction:
        return Fraction(*self.rect_sse_numerator(s.x0, s.y0, s.w, s.h))

    def to_json(self) -> dict:
        records = []
        for y in range(self.__grid.rows):
            for x in range(self.__grid.cols):
                records.append({
                    'count': int(self.__counts[y, x]),
                    'sum': int(self.__sums[y, x]),
                    'sumsq': int(self.__sumsqs[y, x])
                })
        return {'poc': self.__poc, 'grid': self.__grid.to_json(), 'records': records}

    @staticmethod
    def from_json(value: Any) -> 'TextureStats':
        """
        Restores statistics from a stats cache document.
        """
        try:
            grid = CtuGrid.from_json(value['grid'])
            records = value['records']
            if len(records) != grid.cell_count:
                raise FrameFormatException(
                    None, 'BAD_STATS_FILE',
                    'Stats cache holds ' + str(len(records)) + ' records for ' + str(grid.cell_count) + ' CTUs'
                )
            shape = (grid.rows, grid.cols)
            counts = np.array([int(r['count']) for r in records], dtype=np.int64).reshape(shape)
            sums = np.array([int(r['sum']) for r in records], dtype=np.int64).reshape(shape)
            sumsqs = np.array([int(r['sumsq']) for r in records], dtype=np.int64).reshape(shape)
            return TextureStats(grid, counts, sums, sumsqs, int(value.get('poc', 0)))
        except (KeyError, TypeError, ValueError) as err:
            raise FrameFormatException(None, 'BAD_STATS_FILE', 'Stats cache is incomplete: ' + str(err))
