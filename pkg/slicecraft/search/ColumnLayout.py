# -*- coding: utf-8 -*-
from typing import Iterable, List, NamedTuple, Tuple

from ..grid import CtuGrid, Partition, PartitionOrigin, PartitionValidator, RectSlice, TileGrid


class Column(NamedTuple):
    """
    One tile column of a column-split candidate and the heights of its row runs.
    """
    x0: int
    w: int
    heights: Tuple[int, ...]

    def rects(self) -> Iterable[Tuple[int, int, int, int]]:
        y0 = 0
        for h in self.heights:
            yield self.x0, y0, self.w, h
            y0 += h


# A candidate is a tuple of columns, left to right.
Layout = Tuple[Column, ...]


class ColumnLayout:
    """
    Helpers for column-split candidates: lightweight tuples evaluated by the search and
    turned into validated partitions only when needed.
    """

    @staticmethod
    def areas(layout: Layout) -> List[int]:
        return [c.w * h for c in layout for h in c.heights]

    @staticmethod
    def rects(layout: Layout) -> List[Tuple[int, int, int, int]]:
        return [r for c in layout for r in c.rects()]

    @staticmethod
    def from_partition(p: Partition) -> Layout:
        """
        Groups the slices of a partition into columns. Every slice must belong to a
        column of slices sharing its x extent, which holds for uniform partitions.
        """
        columns = {}
        for s in p.slices:
            columns.setdefault((s.x0, s.w), []).append(s)
        layout = []
        for (x0, w), slices in sorted(columns.items()):
            slices.sort(key=lambda s: s.y0)
            layout.append(Column(x0, w, tuple(s.h for s in slices)))
        return tuple(layout)

    @staticmethod
    def to_partition(layout: Layout, grid: CtuGrid, origin: PartitionOrigin = PartitionOrigin.Proposed) -> Partition:
        """
        Builds the validated partition of a candidate: one tile per column, slice ids
        numbered column by column, top to bottom.
        """
        tiles = TileGrid(tuple(c.w for c in layout), (grid.rows,))
        slices = [RectSlice(i, x0, y0, w, h) for i, (x0, y0, w, h) in enumerate(ColumnLayout.rects(layout))]
        return PartitionValidator.validate(grid, tiles, slices, origin)
