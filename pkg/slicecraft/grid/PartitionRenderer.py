# -*- coding: utf-8 -*-
import string

from .Partition import Partition

SYMBOLS = string.digits + string.ascii_uppercase + string.ascii_lowercase


class PartitionRenderer:
    """
    Draws partitions as text, one character per CTU.
    """

    @staticmethod
    def symbol(slice_id: int) -> str:
        return SYMBOLS[slice_id % len(SYMBOLS)]

    @staticmethod
    def render_ascii(p: Partition) -> str:
        """
        Renders a partition with slice ids as symbols, one text row per CTU row.

        :param p: a valid partition.
        :return: the rendered text without a trailing newline.
        """
        cells = [['?'] * p.grid.cols for _ in range(p.grid.rows)]
        for s in p.slices:
            mark = PartitionRenderer.symbol(s.id)
            for x, y in s.cells():
                cells[y][x] = mark
        return '\n'.join(''.join(row) for row in cells)
