# -*- coding: utf-8 -*-
import numpy as np


class SummedAreaTable:
    """
    Inclusion-exclusion table answering rectangle sums over a 2-D array in constant time.

    The table has one extra leading row and column of zeros, so
    ``table[y, x]`` is the sum of ``values[:y, :x]``.
    Integer inputs are accumulated in int64, real inputs in float64.
    """

    def __init__(self, values: np.ndarray):
        values = np.asarray(values)
        dtype = np.int64 if np.issubdtype(values.dtype, np.integer) else np.float64
        rows, cols = values.shape
        self.__table = np.zeros((rows + 1, cols + 1), dtype=dtype)
        self.__table[1:, 1:] = values.astype(dtype).cumsum(axis=0).cumsum(axis=1)
        self.__table.setflags(write=False)

    @property
    def table(self) -> np.ndarray:
        return self.__table

    @property
    def total(self):
        return self.rectangle_sum(0, 0, self.__table.shape[1] - 1, self.__table.shape[0] - 1)

    def rectangle_sum(self, x0: int, y0: int, w: int, h: int):
        """
        Sums the values of the rectangle with top-left (x0, y0) and size w x h.
        Integer tables return Python ints so callers can square them safely.
        """
        t = self.__table
        x1, y1 = x0 + w, y0 + h
        value = t[y1, x1] - t[y0, x1] - t[y1, x0] + t[y0, x0]
        return int(value) if t.dtype == np.int64 else float(value)
