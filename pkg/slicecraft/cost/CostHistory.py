# -*- coding: utf-8 -*-
from typing import List, Optional, Tuple

from pip_services3_commons.errors import ConflictException

from .CostMap import CostMap
from .GopStructure import GopStructure
from ..errors import GeometryException
from ..grid import CtuGrid


class CostHistory:
    """
    True cost maps of already encoded frames in encode order, for one (sequence, QP) run.

    The history is append-only and owned by a single writer; readers work on
    :func:`snapshot` copies.
    """

    def __init__(self, grid: CtuGrid, gop_size: int = 16, maps: Tuple[CostMap, ...] = ()):
        GopStructure.check_gop_size(gop_size)
        self.__grid = grid
        self.__gop_size = gop_size
        self.__maps: List[CostMap] = []
        for m in maps:
            self.append(m)

    @property
    def grid(self) -> CtuGrid:
        return self.__grid

    @property
    def gop_size(self) -> int:
        return self.__gop_size

    @property
    def maps(self) -> Tuple[CostMap, ...]:
        return tuple(self.__maps)

    def __len__(self):
        return len(self.__maps)

    def append(self, costs: CostMap, correlation_id: Optional[str] = None):
        """
        Records the true times of the frame just encoded.

        :raises ConflictException: when the poc is already in the history.
        """
        if costs.grid != self.__grid:
            raise GeometryException(correlation_id, 'GRID_MISMATCH', 'Cost map grid differs from history grid')
        if any(m.poc == costs.poc for m in self.__maps):
            raise ConflictException(
                correlation_id, 'DUPLICATE_POC', 'Picture ' + str(costs.poc) + ' is already in the history'
            )
        self.__maps.append(costs)

    def snapshot(self) -> 'CostHistory':
        return CostHistory(self.__grid, self.__gop_size, tuple(self.__maps))

    def latest(self, temporal_layer: Optional[int] = None) -> Optional[CostMap]:
        """
        Gets the most recently encoded map, optionally restricted to one temporal layer.
        """
        for m in reversed(self.__maps):
            if temporal_layer is None or m.temporal_layer == temporal_layer:
                return m
        return None
