# -*- coding: utf-8 -*-
"""
    slicecraft.grid.CtuGrid
    ~~~~~~~~~~~~~~~~~~~~~~~

    Frame geometry quantized to coding tree units.

    :license: MIT, see LICENSE for more details.
"""
from dataclasses import dataclass
from typing import Any

from ..errors import GeometryException

# Sizes accepted by the encoder configurations we model.
CTU_SIZES = (32, 64, 128)


@dataclass(frozen=True)
class CtuGrid:
    """
    Frame geometry expressed in CTU cells. Boundary CTUs may be partial in pixels
    but still occupy one grid cell.

    Example:

    .. code-block:: python

        grid = CtuGrid(1920, 1080, 128)
        grid.cols, grid.rows    # 15, 9
    """

    frame_width: int
    frame_height: int
    ctu_size: int = 128

    def __post_init__(self):
        if self.ctu_size not in CTU_SIZES:
            raise GeometryException(
                None, 'BAD_CTU_SIZE', 'CTU size must be one of ' + str(CTU_SIZES) + ', got ' + str(self.ctu_size)
            ).with_details('ctu_size', self.ctu_size)
        if self.frame_width < 1 or self.frame_height < 1:
            raise GeometryException(
                None, 'BAD_FRAME_SIZE',
                'Frame size must be positive, got ' + str(self.frame_width) + 'x' + str(self.frame_height)
            )

    @staticmethod
    def from_cells(cols: int, rows: int, ctu_size: int = 32) -> 'CtuGrid':
        """
        Creates a grid whose frame is exactly cols x rows complete CTUs.

        :param cols: number of CTU columns.
        :param rows: number of CTU rows.
        :param ctu_size: CTU size in pixels.
        :return: a new grid.
        """
        return CtuGrid(cols * ctu_size, rows * ctu_size, ctu_size)

    @property
    def cols(self) -> int:
        return -(-self.frame_width // self.ctu_size)

    @property
    def rows(self) -> int:
        return -(-self.frame_height // self.ctu_size)

    @property
    def cell_count(self) -> int:
        return self.cols * self.rows

    def ctu_pixel_width(self, x: int) -> int:
        return min(self.ctu_size, self.frame_width - x * self.ctu_size)

    def ctu_pixel_height(self, y: int) -> int:
        return min(self.ctu_size, self.frame_height - y * self.ctu_size)

    def to_json(self) -> dict:
        return {
            'cols': self.cols,
            'rows': self.rows,
            'ctu_size': self.ctu_size,
            'frame_w': self.frame_width,
            'frame_h': self.frame_height
        }

    @staticmethod
    def from_json(value: Any) -> 'CtuGrid':
        """
        Restores a grid from its JSON form. Redundant cols/rows entries are checked
        against the frame size.

        :param value: a dictionary produced by :func:`to_json`.
        :return: the restored grid.
        """
        try:
            grid = CtuGrid(int(value['frame_w']), int(value['frame_h']), int(value['ctu_size']))
        except (KeyError, TypeError, ValueError) as err:
            raise GeometryException(None, 'BAD_GRID', 'Grid description is incomplete: ' + str(err))
        if 'cols' in value and int(value['cols']) != grid.cols or 'rows' in value and int(value['rows']) != grid.rows:
            raise GeometryException(None, 'BAD_GRID', 'Grid cols/rows do not match the frame size')
        return grid

    def __str__(self):
        return str(self.cols) + 'x' + str(self.rows) + '@' + str(self.ctu_size)
