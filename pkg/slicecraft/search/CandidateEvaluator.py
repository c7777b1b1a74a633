# -*- coding: utf-8 -*-
from typing import Dict, Optional, Tuple

from .ColumnLayout import Column, Layout
from ..cost import CostMap
from ..texture import TextureStats


class CandidateEvaluator:
    """
    Scores candidates against an estimated cost map and texture statistics.

    Column scores are memoized: many candidates share the same columns. Memo entries
    are pure functions of their key, so concurrent workers may fill the memo in any
    order without changing results.
    """

    def __init__(self, est: CostMap, stats: Optional[TextureStats] = None):
        self.__costs = est.prefix_sums()
        self.__stats = stats
        self.__times: Dict[Column, float] = {}
        self.__sses: Dict[Column, float] = {}

    def column_time(self, column: Column) -> float:
        t = self.__times.get(column)
        if t is None:
            t = max(self.__costs.rectangle_sum(x0, y0, w, h) for x0, y0, w, h in column.rects())
            self.__times[column] = t
        return t

    def column_sse(self, column: Column) -> float:
        if self.__stats is None:
            return 0.0
        e = self.__sses.get(column)
        if e is None:
            e = sum(self.__stats.rect_sse(x0, y0, w, h) for x0, y0, w, h in column.rects())
            self.__sses[column] = e
        return e

    def time_of(self, layout: Layout) -> float:
        """
        Estimated frame time: the time of the slowest slice.
        """
        return max(self.column_time(c) for c in layout)

    def sse_of(self, layout: Layout) -> float:
        """
        Clustering objective, summed column by column left to right.
        """
        return sum(self.column_sse(c) for c in layout)

    def score(self, layout: Layout) -> Tuple[float, float]:
        return self.time_of(layout), self.sse_of(layout)
