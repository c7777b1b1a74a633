# -*- coding: utf-8 -*-
"""
    slicecraft.grid.Partition
    ~~~~~~~~~~~~~~~~~~~~~~~~~

    Validated tile + rectangular slice partitioning of a frame.

    :license: MIT, see LICENSE for more details.
"""
import json
from dataclasses import dataclass
from json import JSONDecodeError
from typing import Any, List, Tuple

from .CtuGrid import CtuGrid
from .PartitionOrigin import PartitionOrigin
from .RectSlice import RectSlice
from .TileGrid import TileGrid
from ..errors import FrameFormatException


@dataclass(frozen=True)
class Partition:
    """
    A set of rectangular slices built on a tile grid that covers the CTU grid exactly once.

    Instances are created by :class:`PartitionValidator <slicecraft.grid.PartitionValidator.PartitionValidator>`,
    :class:`UniformPartitioner <slicecraft.grid.UniformPartitioner.UniformPartitioner>` or the partition search,
    never assembled by hand, so every instance satisfies the legality rules.
    """

    grid: CtuGrid
    tiles: TileGrid
    slices: Tuple[RectSlice, ...]
    origin: PartitionOrigin = PartitionOrigin.Custom

    @property
    def slice_count(self) -> int:
        return len(self.slices)

    def areas(self) -> List[int]:
        return [s.area for s in self.slices]

    def area_ratio(self) -> float:
        """
        Gets A_max(P) / A_min(P) measured in CTU cells.

        :return: the ratio between the largest and the smallest slice area.
        """
        areas = self.areas()
        return max(areas) / min(areas)

    def satisfies_area_constraint(self, k_area: float) -> bool:
        """
        Checks the strict search constraint k * A_min(P) > A_max(P).

        :param k_area: the area ratio constant.
        """
        areas = self.areas()
        return k_area * min(areas) > max(areas)

    def with_origin(self, origin: PartitionOrigin) -> 'Partition':
        return Partition(self.grid, self.tiles, self.slices, origin)

    def to_json(self) -> dict:
        """
        Converts this partition into the partition file representation.

        :return: a JSON-compatible dictionary.
        """
        return {
            'frame_w': self.grid.frame_width,
            'frame_h': self.grid.frame_height,
            'ctu_size': self.grid.ctu_size,
            'tile_cols': list(self.tiles.col_widths),
            'tile_rows': list(self.tiles.row_heights),
            'slices': [s.to_json() for s in self.slices],
            'origin': self.origin.value
        }

    @staticmethod
    def from_json(value: Any) -> 'Partition':
        """
        Restores and re-validates a partition from a partition file representation.

        :param value: a dictionary or a JSON encoded string.
        :return: the validated partition.
        """
        from .PartitionValidator import PartitionValidator

        if isinstance(value, (str, bytes)):
            try:
                value = json.loads(value)
            except JSONDecodeError as err:
                raise FrameFormatException(None, 'BAD_PARTITION_FILE', 'Partition file is not JSON: ' + str(err))
        try:
            grid = CtuGrid(int(value['frame_w']), int(value['frame_h']), int(value['ctu_size']))
            tiles = TileGrid(tuple(value['tile_cols']), tuple(value['tile_rows']))
            slices = [RectSlice.from_json(s) for s in value['slices']]
            origin = PartitionOrigin(value.get('origin', PartitionOrigin.Custom.value))
        except (KeyError, TypeError, ValueError) as err:
            raise FrameFormatException(None, 'BAD_PARTITION_FILE', 'Partition file is incomplete: ' + str(err))

        return PartitionValidator.validate(grid, tiles, slices, origin)

    def __str__(self):
        return 'Partition[' + str(self.grid) + ', ' + str(self.slice_count) + ' slices, ' + self.origin.value + ']'
