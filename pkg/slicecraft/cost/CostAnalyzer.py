# -*- coding: utf-8 -*-
from typing import Optional

from .CostMap import CostMap
from .SliceTimeTable import SliceTimeTable
from ..errors import GeometryException
from ..grid import Partition, SummedAreaTable


class CostAnalyzer:
    """
    Evaluates frame times of partitions: T(s_j) is the sum of the CTU times of slice s_j,
    and T(P) the time of the slowest slice.
    """

    @staticmethod
    def prefix_sums(costs: CostMap) -> SummedAreaTable:
        return costs.prefix_sums()

    @staticmethod
    def partition_time(costs: CostMap, p: Partition, correlation_id: Optional[str] = None) -> SliceTimeTable:
        """
        Computes the time of every slice with one summed-area query per slice.

        :param costs: CTU times (true or estimated).
        :param p: a partition on the same grid.
        :param correlation_id: (optional) transaction id to trace execution through call chain.
        :return: the per-slice table.
        """
        if costs.grid != p.grid:
            raise GeometryException(
                correlation_id, 'GRID_MISMATCH',
                'Cost map grid ' + str(costs.grid) + ' differs from partition grid ' + str(p.grid)
            )
        table = costs.prefix_sums()
        return SliceTimeTable(tuple(table.rectangle_sum(s.x0, s.y0, s.w, s.h) for s in p.slices))
