# -*- coding: utf-8 -*-
"""
    slicecraft.grid.__init__
    ~~~~~~~~~~~~~~~~~~~~~~~~

    CTU grids, tile grids, rectangular slices and partition legality.

    :license: MIT, see LICENSE for more details.
"""

__all__ = [
    'CtuGrid', 'TileGrid', 'RectSlice', 'PartitionOrigin', 'Partition',
    'PartitionValidator', 'UniformPartitioner', 'PartitionRenderer', 'SummedAreaTable'
]

from .CtuGrid import CtuGrid
from .TileGrid import TileGrid
from .RectSlice import RectSlice
from .PartitionOrigin import PartitionOrigin
from .Partition import Partition
from .PartitionValidator import PartitionValidator
from .UniformPartitioner import UniformPartitioner
from .PartitionRenderer import PartitionRenderer
from .SummedAreaTable import SummedAreaTable
