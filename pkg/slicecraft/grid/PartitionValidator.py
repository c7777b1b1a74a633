# -*- coding: utf-8 -*-
from typing import Iterable, Optional

import numpy as np

from .CtuGrid import CtuGrid
from .Partition import Partition
from .PartitionOrigin import PartitionOrigin
from .RectSlice import RectSlice
from .TileGrid import TileGrid
from ..errors import CoverageException, GeometryException, OverlapException, StructureException


class PartitionValidator:
    """
    Checks slice sets against the tile + rectangular slice rules and builds
    :class:`Partition <slicecraft.grid.Partition.Partition>` objects.

    A slice is legal when it is either a rectangle of complete tiles (contiguous in
    tile-index space) or a run of consecutive complete CTU rows inside one tile,
    spanning the full tile width.
    """

    @staticmethod
    def validate(grid: CtuGrid, tiles: TileGrid, slices: Iterable[RectSlice],
                 origin: PartitionOrigin = PartitionOrigin.Custom,
                 correlation_id: Optional[str] = None) -> Partition:
        """
        Validates a slice set and returns the partition it forms.

        :param grid: the CTU grid of the frame.
        :param tiles: the tile grid.
        :param slices: the rectangular slices.
        :param origin: (optional) the procedure that produced the slices.
        :param correlation_id: (optional) transaction id to trace execution through call chain.
        :return: the validated partition.
        :raises GeometryException: tile sums mismatch the grid or a slice lies outside it.
        :raises OverlapException: two slices share a cell.
        :raises CoverageException: a cell is left uncovered.
        :raises StructureException: a slice breaks the legality rules.
        """
        slices = tuple(slices)
        tiles.check_fits(grid)
        if len(slices) == 0:
            raise CoverageException(correlation_id, 'SLICE_COVERAGE', 'Partition has no slices')

        ids = set()
        for s in slices:
            if s.w < 1 or s.h < 1 or s.x0 < 0 or s.y0 < 0 or s.x1 > grid.cols or s.y1 > grid.rows:
                raise GeometryException(
                    correlation_id, 'SLICE_OUT_OF_GRID', 'Slice ' + str(s.id) + ' lies outside grid ' + str(grid)
                ).with_details('slice', s.to_json())
            if s.id in ids:
                raise StructureException(
                    correlation_id, 'DUPLICATE_SLICE_ID', 'Slice id ' + str(s.id) + ' is used twice'
                )
            ids.add(s.id)

        owner = np.full((grid.rows, grid.cols), -1, dtype=np.int64)
        for index, s in enumerate(slices):
            region = owner[s.y0:s.y1, s.x0:s.x1]
            taken = np.argwhere(region >= 0)
            if len(taken) > 0:
                y, x = taken[0]
                other = slices[region[y, x]]
                raise OverlapException(
                    correlation_id, 'SLICE_OVERLAP',
                    'Slices ' + str(other.id) + ' and ' + str(s.id) + ' share CTU ('
                    + str(s.x0 + x) + ',' + str(s.y0 + y) + ')'
                )
            region[:, :] = index

        holes = np.argwhere(owner < 0)
        if len(holes) > 0:
            y, x = holes[0]
            raise CoverageException(
                correlation_id, 'SLICE_COVERAGE',
                str(len(holes)) + ' CTU cells are uncovered, first at (' + str(x) + ',' + str(y) + ')'
            )

        col_bounds = tiles.col_bounds
        row_bounds = tiles.row_bounds
        for s in slices:
            if not (PartitionValidator.is_tile_union(s, col_bounds, row_bounds)
                    or PartitionValidator.is_tile_row_run(s, col_bounds, row_bounds)):
                raise StructureException(
                    correlation_id, 'SLICE_STRUCTURE',
                    'Slice ' + str(s.id) + ' is neither a union of complete tiles '
                    + 'nor a run of complete CTU rows inside one tile'
                ).with_details('slice', s.to_json())

        return Partition(grid, tiles, slices, origin)

    @staticmethod
    def is_tile_union(s: RectSlice, col_bounds, row_bounds) -> bool:
        return s.x0 in col_bounds and s.x1 in col_bounds and s.y0 in row_bounds and s.y1 in row_bounds

    @staticmethod
    def is_tile_row_run(s: RectSlice, col_bounds, row_bounds) -> bool:
        # Full tile width: both vertical edges must be consecutive tile column bounds.
        if s.x0 not in col_bounds:
            return False
        column = col_bounds.index(s.x0)
        if column + 1 >= len(col_bounds) or col_bounds[column + 1] != s.x1:
            return False
        for top, bottom in zip(row_bounds, row_bounds[1:]):
            if top <= s.y0 and s.y1 <= bottom:
                return True
        return False
