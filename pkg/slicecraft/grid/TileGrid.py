# -*- coding: utf-8 -*-
from dataclasses import dataclass
from itertools import accumulate
from typing import Tuple

from .CtuGrid import CtuGrid
from ..errors import GeometryException


@dataclass(frozen=True)
class TileGrid:
    """
    Grid-shaped tile partitioning given by column widths and row heights in CTU units.
    """

    col_widths: Tuple[int, ...]
    row_heights: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'col_widths', tuple(int(w) for w in self.col_widths))
        object.__setattr__(self, 'row_heights', tuple(int(h) for h in self.row_heights))

    @staticmethod
    def single(grid: CtuGrid) -> 'TileGrid':
        return TileGrid((grid.cols,), (grid.rows,))

    @property
    def col_bounds(self) -> Tuple[int, ...]:
        """
        CTU x coordinates of tile column boundaries, starting with 0 and ending with grid cols.
        """
        return (0,) + tuple(accumulate(self.col_widths))

    @property
    def row_bounds(self) -> Tuple[int, ...]:
        return (0,) + tuple(accumulate(self.row_heights))

    def check_fits(self, grid: CtuGrid):
        """
        Checks that the tile grid exactly spans the CTU grid.

        :param grid: the CTU grid the tiles belong to.
        :raises GeometryException: when sums mismatch or an entry is not positive.
        """
        if len(self.col_widths) == 0 or len(self.row_heights) == 0 \
                or min(self.col_widths) < 1 or min(self.row_heights) < 1:
            raise GeometryException(None, 'BAD_TILE_GRID', 'Tile widths and heights must be positive')
        if sum(self.col_widths) != grid.cols or sum(self.row_heights) != grid.rows:
            raise GeometryException(
                None, 'BAD_TILE_GRID',
                'Tile grid ' + str(sum(self.col_widths)) + 'x' + str(sum(self.row_heights))
                + ' does not match CTU grid ' + str(grid.cols) + 'x' + str(grid.rows)
            )
